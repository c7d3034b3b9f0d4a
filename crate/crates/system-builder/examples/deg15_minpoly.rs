use system_builder::deg15::*;
use exact_algebra::multipoly::{VarSet, MultiPoly};
use exact_algebra::Rat;

fn main() {
    let pipe = deg15_pipeline().unwrap();
    let full = VarSet::from_names(vec!["q".into(), "c".into(), "w1".into()]);
    let vs = VarSet::from_names(vec!["c".into(), "w1".into()]);
    let one = MultiPoly::constant(&full, Rat::from_integer(1.into()));
    let eqs: Vec<_> = pipe.reduced.iter().map(|e| {
        let e = e.with_vars(&full);
        let vals: Vec<_> = full.names().iter().map(|n| if n == "q" { one.clone() } else { MultiPoly::var(&full, n, Rat::from_integer(1.into())) }).collect();
        e.subst(&vals).with_vars(&vs).primitive()
    }).filter(|e| !e.is_zero()).collect();
    match groebner_solver::solve_zero_dim(&eqs) {
        Ok(sols) => {
            for o in &sols.orbits {
                println!("orbit deg {} mult {} minpoly {}", o.field.degree(), o.multiplicity, o.field.min_poly());
            }
        }
        Err(e) => println!("solve error: {:?}", e),
    }
}
