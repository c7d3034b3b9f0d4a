use system_builder::deg15::*;
use exact_algebra::multipoly::VarSet;

fn main() {
    let t0 = std::time::Instant::now();
    let pipe = deg15_pipeline().unwrap();
    println!("pipeline built in {:?}", t0.elapsed());
    println!("reduced system: {} equations in q, c, w1", pipe.reduced.len());
    // restrict to {q, c, w1}
    let vs = VarSet::from_names(vec!["q".into(), "c".into(), "w1".into()]);
    let eqs: Vec<_> = pipe.reduced.iter().map(|e| e.with_vars(&vs)).collect();
    for e in &eqs {
        let s = format!("{}", e);
        println!("eq ({} terms): {}", e.num_terms(), &s[..s.len().min(100)]);
    }
    let t1 = std::time::Instant::now();
    let sols = groebner_solver::solve_weighted(&eqs, &[1, 2, 1]).unwrap();
    println!("solved in {:?}; zero ray: {:?}", t1.elapsed(), sols.zero_ray);
    for o in &sols.orbits {
        println!(
            "orbit: field deg {} minpoly {}  mult {}  coords q={} c={} w1={}",
            o.field.degree(),
            o.field.min_poly(),
            o.multiplicity,
            o.coords[0],
            o.coords[1],
            o.coords[2]
        );
    }
}
