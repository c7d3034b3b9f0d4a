//! Deterministic Buchberger engine over Q and Q(xi), with elimination
//! orders, zero-dimensional solving and Galois-orbit grouping of solutions.
//!
//! The reduced Groebner basis is unique for a given monomial order, so two
//! runs on permuted generators produce identical output; every routine here
//! keeps its data in canonically ordered containers to preserve that.

pub mod factor;
pub mod solve;

use exact_algebra::multipoly::{Mono, MultiPoly, VarSet};
use exact_algebra::ring::Field;
use exact_algebra::Rat;
use std::cmp::Ordering;

pub use solve::{solve_weighted, solve_zero_dim, SolutionOrbit, SolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// graded reverse lexicographic
    GrevLex,
    /// pure lexicographic
    Lex,
    /// eliminate the first `front` variables: grevlex on the front block,
    /// ties broken by grevlex on the rest
    Block { front: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Block { front } => match grevlex_slice(&a[..*front], &b[..*front]) {
                Ordering::Equal => grevlex_slice(&a[*front..], &b[*front..]),
                o => o,
            },
        }
    }
}

fn grevlex(a: &Mono, b: &Mono) -> Ordering {
    grevlex_slice(a, b)
}

fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match y.cmp(x) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn lex(a: &Mono, b: &Mono) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_coprime(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn leading_term<'a, F: Field>(
    p: &'a MultiPoly<F>,
    ord: &MonomialOrder,
) -> Option<(&'a Mono, &'a F)> {
    p.terms().iter().max_by(|x, y| ord.cmp(x.0, y.0))
}

/// Normal form of `p` modulo `basis` under `ord` (full reduction of every
/// term).
pub fn reduce<F: Field>(
    p: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    ord: &MonomialOrder,
) -> MultiPoly<F> {
    let mut rem = MultiPoly::zero(p.vars());
    let mut cur = p.clone();
    let leads: Vec<(Mono, F)> = basis
        .iter()
        .filter_map(|b| leading_term(b, ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    'outer: while !cur.is_zero() {
        let (lm, lc) = {
            let (m, c) = leading_term(&cur, ord).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (bm, bc)) in leads.iter().enumerate() {
            if let Some(q) = mono_div(&lm, bm) {
                let factor = lc.div(bc).expect("leading coefficient invertible");
                cur = cur.sub(&basis[i].mul_term(&q, &factor));
                continue 'outer;
            }
        }
        // move the irreducible leading term to the remainder
        let single = MultiPoly::from_terms(cur.vars(), vec![(lm.clone(), lc.clone())]);
        rem = rem.add(&single);
        cur = cur.sub(&single);
    }
    rem
}

fn normalize<F: Field>(p: &MultiPoly<F>, ord: &MonomialOrder) -> MultiPoly<F> {
    match leading_term(p, ord) {
        None => p.clone(),
        Some((_, c)) => {
            let inv = c.inv().expect("field element invertible");
            p.scale(&inv)
        }
    }
}

/// Reduced Groebner basis, deterministic: normal (degree) selection with
/// both Buchberger criteria, then autoreduction, monic generators, sorted
/// by leading monomial.
pub fn groebner<F: Field>(gens: &[MultiPoly<F>], ord: &MonomialOrder) -> Vec<MultiPoly<F>> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => return vec![],
    };
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(normalize(&content_normalized(g), ord));
        }
    }
    if basis.is_empty() {
        return vec![];
    }
    if basis.iter().any(|p| p.is_constant()) {
        let one = MultiPoly::constant(
            &vars,
            basis[0].terms().values().next().unwrap().one_like(),
        );
        return vec![one];
    }
    basis.sort_by(|a, b| {
        ord.cmp(
            leading_term(a, ord).unwrap().0,
            leading_term(b, ord).unwrap().0,
        )
    });
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm in the order, ties by index
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(a1, b1)), (_, &(a2, b2))| {
                let l1 = mono_lcm(
                    leading_term(&basis[a1], ord).unwrap().0,
                    leading_term(&basis[b1], ord).unwrap().0,
                );
                let l2 = mono_lcm(
                    leading_term(&basis[a2], ord).unwrap().0,
                    leading_term(&basis[b2], ord).unwrap().0,
                );
                ord.cmp(&l1, &l2).then((a1, b1).cmp(&(a2, b2)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (lmi, lci) = {
            let (m, c) = leading_term(&basis[i], ord).unwrap();
            (m.clone(), c.clone())
        };
        let (lmj, lcj) = {
            let (m, c) = leading_term(&basis[j], ord).unwrap();
            (m.clone(), c.clone())
        };
        // criterion 1: coprime leading monomials
        if mono_coprime(&lmi, &lmj) {
            continue;
        }
        // criterion 2 (chain): some k with LT(k) | lcm and both pairs done
        let l = mono_lcm(&lmi, &lmj);
        let mut chained = false;
        for (k, b) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lmk = leading_term(b, ord).unwrap().0;
            if mono_div(&l, lmk).is_some()
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
            {
                chained = true;
                break;
            }
        }
        if chained {
            continue;
        }
        let qi = mono_div(&l, &lmi).unwrap();
        let qj = mono_div(&l, &lmj).unwrap();
        let s = basis[i]
            .mul_term(&qi, &lci.inv().unwrap())
            .sub(&basis[j].mul_term(&qj, &lcj.inv().unwrap()));
        let r = reduce(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = normalize(&content_normalized(&r), ord);
        if r.is_constant() {
            let one = MultiPoly::constant(&vars, r.constant_value().unwrap().one_like());
            return vec![one];
        }
        let new_idx = basis.len();
        basis.push(r);
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
    }
    autoreduce(basis, ord)
}

fn content_normalized<F: Field>(p: &MultiPoly<F>) -> MultiPoly<F> {
    let vals: Vec<F> = p.terms().values().cloned().collect();
    if vals.is_empty() {
        return p.clone();
    }
    let c = F::content_hint(&vals);
    if num_traits::One::is_one(&c) {
        p.clone()
    } else {
        let witness = vals[0].clone();
        p.scale(&witness.from_rat_like(&c).inv().unwrap())
    }
}

fn autoreduce<F: Field>(mut basis: Vec<MultiPoly<F>>, ord: &MonomialOrder) -> Vec<MultiPoly<F>> {
    basis.sort_by(|a, b| {
        ord.cmp(
            leading_term(a, ord).unwrap().0,
            leading_term(b, ord).unwrap().0,
        )
    });
    // drop generators whose leading monomial another one divides
    let mut kept: Vec<MultiPoly<F>> = Vec::new();
    for p in basis.iter() {
        let lm = leading_term(p, ord).unwrap().0.clone();
        let redundant = kept.iter().any(|q| {
            let qm = leading_term(q, ord).unwrap().0;
            mono_div(&lm, qm).is_some()
        });
        if !redundant {
            kept.push(p.clone());
        }
    }
    // fully reduce each element against the others
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<MultiPoly<F>> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let r = reduce(&kept[i], &others, ord);
        if !r.is_zero() {
            out.push(normalize(&r, ord));
        }
    }
    out.sort_by(|a, b| {
        ord.cmp(
            leading_term(a, ord).unwrap().0,
            leading_term(b, ord).unwrap().0,
        )
    });
    out
}

/// Generators of the elimination ideal obtained by dropping `drop_vars`.
pub fn eliminate<F: Field>(gens: &[MultiPoly<F>], drop_vars: &[&str]) -> Vec<MultiPoly<F>> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => return vec![],
    };
    for d in drop_vars {
        assert!(vars.index_of(d).is_some(), "unknown variable {}", d);
    }
    let mut names: Vec<String> = drop_vars.iter().map(|s| s.to_string()).collect();
    for n in vars.names() {
        if !drop_vars.contains(&n.as_str()) {
            names.push(n.clone());
        }
    }
    let pvars = VarSet::from_names(names);
    let permuted: Vec<MultiPoly<F>> = gens.iter().map(|g| g.with_vars(&pvars)).collect();
    let ord = MonomialOrder::Block {
        front: drop_vars.len(),
    };
    let gb = groebner(&permuted, &ord);
    gb.into_iter()
        .filter(|p| {
            p.terms()
                .keys()
                .all(|m| m[..drop_vars.len()].iter().all(|&e| e == 0))
        })
        .map(|p| p.with_vars(&vars))
        .collect()
}

/// Every variable has a pure power among the leading terms: the standard
/// zero-dimensionality test.
pub fn is_zero_dimensional(gb: &[MultiPoly<Rat>], ord: &MonomialOrder) -> bool {
    let vars = match gb.first() {
        Some(g) => g.vars().clone(),
        None => return false,
    };
    (0..vars.len()).all(|v| {
        gb.iter().any(|p| {
            let lm = leading_term(p, ord).unwrap().0;
            lm[v] > 0 && lm.iter().enumerate().all(|(i, &e)| i == v || e == 0)
        })
    })
}

/// Monomials under the staircase (quotient-ring basis); requires zero-dim.
pub fn quotient_basis(gb: &[MultiPoly<Rat>], ord: &MonomialOrder) -> Vec<Mono> {
    let vars = gb[0].vars().clone();
    let n = vars.len();
    let leads: Vec<Mono> = gb
        .iter()
        .map(|p| leading_term(p, ord).unwrap().0.clone())
        .collect();
    let mut bound = vec![0u32; n];
    for v in 0..n {
        let b = leads
            .iter()
            .filter(|m| m[v] > 0 && m.iter().enumerate().all(|(i, &e)| i == v || e == 0))
            .map(|m| m[v])
            .min()
            .expect("zero-dimensional staircase");
        bound[v] = b;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if !leads.iter().any(|l| mono_div(&cur, l).is_some()) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| grevlex(a, b));
                return out;
            }
            cur[i] += 1;
            if cur[i] < bound[i].max(1) {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::multipoly::parse_multipoly;
    use num_traits::One;
    use std::sync::Arc;

    fn qp(vars: &Arc<VarSet>, s: &str) -> MultiPoly<Rat> {
        parse_multipoly(vars, &Rat::one(), s).unwrap()
    }

    #[test]
    fn symmetric_functions_lex() {
        // {x+y-3, xy-2} under lex x>y contains y^2-3y+2
        let vars = VarSet::new(&["x", "y"]);
        let gens = vec![qp(&vars, "x + y - 3"), qp(&vars, "x*y - 2")];
        let gb = groebner(&gens, &MonomialOrder::Lex);
        let target = qp(&vars, "y^2 - 3*y + 2");
        assert!(gb.contains(&target), "basis: {:?}", gb);
    }

    #[test]
    fn inconsistent_is_one() {
        let vars = VarSet::new(&["x"]);
        let gens = vec![qp(&vars, "x"), qp(&vars, "x - 1")];
        let gb = groebner(&gens, &MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 1);
        assert!(gb[0].is_constant());
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let vars = VarSet::new(&["x", "y", "z"]);
        let a = qp(&vars, "x^2 + y*z - 2");
        let b = qp(&vars, "y^2 - z + x");
        let c = qp(&vars, "z^2 - x*y + 1");
        let g1 = groebner(&[a.clone(), b.clone(), c.clone()], &MonomialOrder::GrevLex);
        let g2 = groebner(&[c, a, b], &MonomialOrder::GrevLex);
        assert_eq!(g1, g2);
    }

    #[test]
    fn spolys_reduce_to_zero() {
        let vars = VarSet::new(&["x", "y"]);
        let gens = vec![qp(&vars, "x^2 - y"), qp(&vars, "x*y - 1")];
        let ord = MonomialOrder::GrevLex;
        let gb = groebner(&gens, &ord);
        for i in 0..gb.len() {
            for j in 0..i {
                let (lmi, lci) = {
                    let t = leading_term(&gb[i], &ord).unwrap();
                    (t.0.clone(), t.1.clone())
                };
                let (lmj, lcj) = {
                    let t = leading_term(&gb[j], &ord).unwrap();
                    (t.0.clone(), t.1.clone())
                };
                let l = mono_lcm(&lmi, &lmj);
                let s = gb[i]
                    .mul_term(&mono_div(&l, &lmi).unwrap(), &lci.inv().unwrap())
                    .sub(&gb[j].mul_term(&mono_div(&l, &lmj).unwrap(), &lcj.inv().unwrap()));
                assert!(reduce(&s, &gb, &ord).is_zero());
            }
        }
    }

    #[test]
    fn twisted_cubic_elimination() {
        // {x - t^2, y - t^3}: eliminating t yields y^2 - x^3
        let vars = VarSet::new(&["t", "x", "y"]);
        let gens = vec![qp(&vars, "x - t^2"), qp(&vars, "y - t^3")];
        let el = eliminate(&gens, &["t"]);
        let target = qp(&vars, "y^2 - x^3");
        assert!(
            el.iter().any(|p| p == &target || p == &target.neg()),
            "eliminated: {:?}",
            el
        );
    }

    #[test]
    fn symmetric_power_sum_elimination() {
        // {u - (x+y), v - xy, x^2+y^2-5}: eliminating x, y gives u^2 - 2v - 5
        let vars = VarSet::new(&["x", "y", "u", "v"]);
        let gens = vec![
            qp(&vars, "u - x - y"),
            qp(&vars, "v - x*y"),
            qp(&vars, "x^2 + y^2 - 5"),
        ];
        let el = eliminate(&gens, &["x", "y"]);
        let target = qp(&vars, "u^2 - 2*v - 5");
        assert!(
            el.iter().any(|p| p == &target || p == &target.neg()),
            "eliminated: {:?}",
            el
        );
    }

    #[test]
    fn groebner_over_number_field() {
        use exact_algebra::NumberField;
        // over Q(sqrt2): {x^2 - 2} has the basis {x - sqrt2}(x + sqrt2)?
        // no: x^2-2 = (x - s)(x + s) but the ideal <x^2-2> is not radical-split
        // by Buchberger; instead check <x - s, x^2 - 2> reduces to <x - s>
        let k = NumberField::quadratic(&exact_algebra::rational::rat_int(2)).unwrap();
        let vars = VarSet::new(&["x"]);
        let s = k.generator();
        let x = MultiPoly::var(&vars, "x", k.one());
        let f = x.mul(&x).sub(&MultiPoly::constant(&vars, k.from_int(2)));
        let g = x.sub(&MultiPoly::constant(&vars, s));
        let gb = groebner(&[f, g.clone()], &MonomialOrder::GrevLex);
        assert_eq!(gb, vec![g]);
    }
}
