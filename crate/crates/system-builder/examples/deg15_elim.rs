use system_builder::deg15::*;
use exact_algebra::multipoly::VarSet;
use groebner_solver::{groebner, MonomialOrder, quotient_basis, is_zero_dimensional};

fn main() {
    let pipe = deg15_pipeline().unwrap();
    let vs = VarSet::from_names(vec!["c".into(), "w1".into()]);
    // chart q = 1
    let full = VarSet::from_names(vec!["q".into(), "c".into(), "w1".into()]);
    let eqs: Vec<_> = pipe.reduced.iter().map(|e| {
        let e = e.with_vars(&full);
        let one = exact_algebra::multipoly::MultiPoly::constant(&full, exact_algebra::Rat::from_integer(1.into()));
        let vals: Vec<_> = full.names().iter().map(|n| if n == "q" { one.clone() } else { exact_algebra::multipoly::MultiPoly::var(&full, n, exact_algebra::Rat::from_integer(1.into())) }).collect();
        e.subst(&vals).with_vars(&vs).primitive()
    }).filter(|e| !e.is_zero()).collect();
    let t0 = std::time::Instant::now();
    let gb = groebner(&eqs, &MonomialOrder::GrevLex);
    println!("gb in {:?}: {} gens, zero-dim {}", t0.elapsed(), gb.len(), is_zero_dimensional(&gb, &MonomialOrder::GrevLex));
    for g in &gb {
        let s = format!("{}", g);
        println!("  [{} terms] {}", g.num_terms(), &s[..s.len().min(120)]);
    }
    let qb = quotient_basis(&gb, &MonomialOrder::GrevLex);
    println!("quotient dim {}", qb.len());
}
