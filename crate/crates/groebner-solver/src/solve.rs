//! Zero-dimensional solving over Q with Galois-orbit grouping.
//!
//! The eliminant is the minimal polynomial of a deterministic sequence of
//! Q-linear forms of the unknowns acting on the quotient ring; coordinates
//! are expressed as polynomials in that primitive element. Orbits correspond
//! to the irreducible factors of the eliminant, and every orbit
//! representative is verified by exact substitution into all generators.

use crate::factor::factor_rational_poly;
use crate::{groebner, is_zero_dimensional, leading_term, quotient_basis, reduce, MonomialOrder};
use exact_algebra::linalg::{min_poly_of_map, solve as lin_solve};
use exact_algebra::multipoly::{Mono, MultiPoly, VarSet};
use exact_algebra::numberfield::{AlgebraicNumber, NumberField};
use exact_algebra::rational::{rat_int, Rat};
use exact_algebra::ring::{Field, Ring};
use exact_algebra::unipoly::UniPoly;
use exact_algebra::{AlgebraError, Result};
use num_traits::{One, Zero};
use std::sync::Arc;

/// One Galois orbit of solutions: a defining field, the coordinates of the
/// unknowns there, and the multiplicity in the quotient ring.
#[derive(Clone, Debug)]
pub struct SolutionOrbit {
    pub field: Arc<NumberField>,
    pub coords: Vec<AlgebraicNumber>,
    pub multiplicity: usize,
}

impl SolutionOrbit {
    /// Number of points in the orbit (the field degree).
    pub fn size(&self) -> usize {
        self.field.degree()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolutionSet {
    pub orbits: Vec<SolutionOrbit>,
    /// For weighted-homogeneous systems: whether the all-zero ray solves the
    /// system (reported separately from the dehomogenized charts).
    pub zero_ray: Option<bool>,
}

impl SolutionSet {
    pub fn total_points(&self) -> usize {
        self.orbits.iter().map(|o| o.size() * o.multiplicity).sum()
    }
}

/// Solve a zero-dimensional system over Q; errors out with
/// "not zero-dimensional" otherwise.
pub fn solve_zero_dim(gens: &[MultiPoly<Rat>]) -> Result<SolutionSet> {
    let ord = MonomialOrder::GrevLex;
    let gb = groebner(gens, &ord);
    if gb.is_empty() {
        return Err(AlgebraError::Domain(
            "not zero-dimensional: empty generating set".into(),
        ));
    }
    if gb.len() == 1 && gb[0].is_constant() {
        // the unit ideal: no solutions
        return Ok(SolutionSet {
            orbits: vec![],
            zero_ray: None,
        });
    }
    if !is_zero_dimensional(&gb, &ord) {
        return Err(AlgebraError::Domain("not zero-dimensional".into()));
    }
    let orbits = orbits_from_basis(gens, &gb, &ord)?;
    Ok(SolutionSet {
        orbits,
        zero_ray: None,
    })
}

fn orbits_from_basis(
    gens: &[MultiPoly<Rat>],
    gb: &[MultiPoly<Rat>],
    ord: &MonomialOrder,
) -> Result<Vec<SolutionOrbit>> {
    let vars = gb[0].vars().clone();
    let n = vars.len();
    let basis = quotient_basis(gb, ord);
    let dim = basis.len();
    let index_of = |m: &Mono| basis.iter().position(|b| b == m);

    // normal form of each (var * basis monomial) as a quotient-coordinate vector
    let nf_coords = |p: &MultiPoly<Rat>| -> Vec<Rat> {
        let r = reduce(p, gb, ord);
        let mut v = vec![Rat::zero(); dim];
        for (m, c) in r.terms() {
            let i = index_of(m).expect("normal form lies under the staircase");
            v[i] = c.clone();
        }
        v
    };

    // multiplication matrix columns for each variable
    let mut mult_cols: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut cols = Vec::with_capacity(dim);
        for b in &basis {
            let mut m = b.clone();
            m[v] += 1;
            let p = MultiPoly::from_terms(&vars, vec![(m, Rat::one())]);
            cols.push(nf_coords(&p));
        }
        mult_cols.push(cols);
    }
    let apply_var = |v: usize, vec: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); dim];
        for (j, c) in vec.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            for i in 0..dim {
                let t = &mult_cols[v][j][i] * c;
                out[i] = &out[i] + &t;
            }
        }
        out
    };

    // deterministic primitive-form attempts: coefficients (1, k, k^2, ...) mod small primes
    'forms: for attempt in 0..12u32 {
        let coeffs: Vec<Rat> = (0..n)
            .map(|i| {
                let base = (attempt as i64) + 1;
                let mut c = 1i64;
                for _ in 0..i {
                    c = (c * base + 1) % 97;
                }
                rat_int(c)
            })
            .collect();
        let apply_lambda = |vec: &[Rat]| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); dim];
            for (v, cv) in coeffs.iter().enumerate() {
                if Ring::is_zero(cv) {
                    continue;
                }
                let part = apply_var(v, vec);
                for i in 0..dim {
                    let t = &part[i] * cv;
                    out[i] = &out[i] + &t;
                }
            }
            out
        };
        // one = basis monomial (0,...,0)
        let one_idx = index_of(&vec![0u32; n]).expect("1 under the staircase");
        let mut start = vec![Rat::zero(); dim];
        start[one_idx] = Rat::one();
        let mut step = |v: &[Rat]| apply_lambda(v);
        let mp = min_poly_of_map(dim, start.clone(), &mut step);
        if mp.deg() != dim {
            continue 'forms;
        }
        // Krylov matrix of lambda-powers applied to 1
        let mut cols = Vec::with_capacity(dim);
        let mut cur = start.clone();
        for _ in 0..dim {
            cols.push(cur.clone());
            cur = apply_lambda(&cur);
        }
        let rows: Vec<Vec<Rat>> = (0..dim)
            .map(|r| (0..dim).map(|c| cols[c][r].clone()).collect())
            .collect();
        // coordinates of each unknown as polynomials in lambda
        let mut coord_polys: Vec<UniPoly<Rat>> = Vec::with_capacity(n);
        for v in 0..n {
            let target = apply_var(v, &start);
            let Some(sol) = lin_solve(&rows, &target) else {
                continue 'forms;
            };
            coord_polys.push(UniPoly::new(sol));
        }
        // factor the eliminant and build the orbits
        let factors = factor_rational_poly(&mp);
        let mut orbits = Vec::new();
        for (fac, mult) in factors {
            let field = NumberField::new("xi", fac.clone())?;
            let lam = field.generator();
            let coords: Vec<AlgebraicNumber> = coord_polys
                .iter()
                .map(|p| {
                    let lifted = exact_algebra::numberfield::lift_poly(&field, p);
                    lifted.eval(&lam)
                })
                .collect();
            // exact certification: substitute into every generator
            for g in gens {
                let val = eval_multipoly_alg(g, &coords);
                if !val.is_zero() {
                    return Err(AlgebraError::Domain(
                        "internal: orbit candidate fails exact substitution".into(),
                    ));
                }
            }
            orbits.push(SolutionOrbit {
                field,
                coords,
                multiplicity: mult,
            });
        }
        orbits.sort_by(|a, b| {
            let ka = (
                a.field.degree(),
                format!("{}", a.field.min_poly()),
                a.coords.iter().map(|c| format!("{}", c)).collect::<Vec<_>>(),
            );
            let kb = (
                b.field.degree(),
                format!("{}", b.field.min_poly()),
                b.coords.iter().map(|c| format!("{}", c)).collect::<Vec<_>>(),
            );
            ka.cmp(&kb)
        });
        return Ok(orbits);
    }
    Err(AlgebraError::Unsupported(
        "no cyclic primitive linear form found (non-cyclic quotient)".into(),
    ))
}

/// Evaluate a rational multivariate polynomial at algebraic coordinates.
pub fn eval_multipoly_alg(p: &MultiPoly<Rat>, coords: &[AlgebraicNumber]) -> AlgebraicNumber {
    let witness = coords.first().expect("at least one coordinate");
    let mut acc = witness.zero_like();
    for (m, c) in p.terms() {
        let mut t = witness.from_rat_like(c);
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&coords[i]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Solve a weighted-homogeneous system by dehomogenization charts.
///
/// Chart k (unknowns ordered by increasing weight, then declaration order)
/// sets the first k-1 chart unknowns to 0 and the k-th to 1, covering every
/// nonzero ray exactly once; the zero ray is reported separately. Each chart
/// must be zero-dimensional or empty.
pub fn solve_weighted(
    gens: &[MultiPoly<Rat>],
    weights: &[u32],
) -> Result<SolutionSet> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => {
            return Err(AlgebraError::Domain("empty system".into()));
        }
    };
    let n = vars.len();
    assert_eq!(weights.len(), n);
    for g in gens {
        assert!(
            g.is_weighted_homogeneous(weights),
            "system is not weighted-homogeneous"
        );
    }
    // zero ray: all generators vanish at 0 iff they have no constant term;
    // weighted-homogeneous generators of positive weight always do
    let zero_ray = gens
        .iter()
        .all(|g| g.constant_value().is_none() || g.is_zero());
    let mut chart_order: Vec<usize> = (0..n).collect();
    chart_order.sort_by_key(|&i| (weights[i], i));
    let mut all = Vec::new();
    for (k, &pivot) in chart_order.iter().enumerate() {
        eprintln!("solve_weighted: chart {} = 1", vars.names()[pivot]);
        // substitute: earlier chart unknowns -> 0, pivot -> 1
        let keep: Vec<usize> = chart_order[k + 1..].to_vec();
        let mut sub_gens: Vec<MultiPoly<Rat>> = Vec::with_capacity(gens.len());
        for g in gens {
            let mut h = g.subst_const(pivot, &Rat::one());
            for &z in &chart_order[..k] {
                h = h.subst_const(z, &Rat::zero());
            }
            if !h.is_zero() {
                sub_gens.push(h);
            }
        }
        if keep.is_empty() {
            // the last chart: the point with pivot=1, rest 0
            if sub_gens.is_empty() {
                let field = NumberField::rationals();
                let coords: Vec<AlgebraicNumber> = (0..n)
                    .map(|i| {
                        if i == pivot {
                            field.one()
                        } else {
                            field.zero()
                        }
                    })
                    .collect();
                all.push(SolutionOrbit {
                    field,
                    coords,
                    multiplicity: 1,
                });
            }
            continue;
        }
        // restrict to the remaining unknowns
        let keep_names: Vec<String> = keep.iter().map(|&i| vars.names()[i].clone()).collect();
        let sub_vars = VarSet::from_names(keep_names);
        let restricted: Vec<MultiPoly<Rat>> = sub_gens
            .iter()
            .map(|g| g.with_vars(&sub_vars))
            .collect();
        if restricted.is_empty() {
            return Err(AlgebraError::Domain(
                "not zero-dimensional: chart is unconstrained".into(),
            ));
        }
        eprintln!("  chart system: {} equations", restricted.len());
        let sols = match solve_zero_dim(&restricted) {
            Ok(s) => s,
            Err(AlgebraError::Domain(msg)) if msg.starts_with("not zero-dimensional") => {
                return Err(AlgebraError::Domain(format!(
                    "not zero-dimensional in chart {}=1: {}",
                    vars.names()[pivot],
                    msg
                )))
            }
            Err(e) => return Err(e),
        };
        for orbit in sols.orbits {
            // reassemble full coordinate vectors
            let field = orbit.field.clone();
            let mut coords = vec![field.zero(); n];
            coords[pivot] = field.one();
            for (j, &i) in keep.iter().enumerate() {
                coords[i] = orbit.coords[j].clone();
            }
            all.push(SolutionOrbit {
                field,
                coords,
                multiplicity: orbit.multiplicity,
            });
        }
    }
    Ok(SolutionSet {
        orbits: all,
        zero_ray: Some(zero_ray),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::multipoly::parse_multipoly;
    use exact_algebra::unipoly::qpoly;

    fn qp(vars: &Arc<VarSet>, s: &str) -> MultiPoly<Rat> {
        parse_multipoly(vars, &Rat::one(), s).unwrap()
    }

    #[test]
    fn sqrt_two_orbit() {
        let vars = VarSet::new(&["x"]);
        let sols = solve_zero_dim(&[qp(&vars, "x^2 - 2")]).unwrap();
        assert_eq!(sols.orbits.len(), 1);
        let o = &sols.orbits[0];
        assert_eq!(o.field.degree(), 2);
        assert_eq!(o.field.min_poly(), &qpoly(&[-2, 0, 1]));
        assert_eq!(o.multiplicity, 1);
        assert_eq!(sols.total_points(), 2);
    }

    #[test]
    fn two_rational_points() {
        // x+y = 3, xy = 2: points (1,2) and (2,1) in one quadratic... no:
        // both points are rational; the eliminant splits into linears
        let vars = VarSet::new(&["x", "y"]);
        let sols =
            solve_zero_dim(&[qp(&vars, "x + y - 3"), qp(&vars, "x*y - 2")]).unwrap();
        assert_eq!(sols.total_points(), 2);
        assert_eq!(sols.orbits.len(), 2);
        for o in &sols.orbits {
            assert!(o.field.is_rationals());
        }
    }

    #[test]
    fn positive_dimensional_rejected() {
        let vars = VarSet::new(&["x", "y"]);
        let err = solve_zero_dim(&[qp(&vars, "x*y - 1")]).unwrap_err();
        match err {
            AlgebraError::Domain(m) => assert!(m.contains("not zero-dimensional")),
            other => panic!("unexpected: {:?}", other),
        }
    }

    #[test]
    fn inconsistent_no_orbits() {
        let vars = VarSet::new(&["x"]);
        let sols = solve_zero_dim(&[qp(&vars, "x"), qp(&vars, "x - 1")]).unwrap();
        assert!(sols.orbits.is_empty());
    }

    #[test]
    fn weighted_charts() {
        // q^2 - c with weights q:1, c:2: rays (q, q^2); chart q=1 gives c=1;
        // chart q=0,c=1 is inconsistent
        let vars = VarSet::new(&["q", "c"]);
        let sols = solve_weighted(&[qp(&vars, "q^2 - c")], &[1, 2]).unwrap();
        assert_eq!(sols.zero_ray, Some(true));
        assert_eq!(sols.orbits.len(), 1);
        let o = &sols.orbits[0];
        assert!(o.field.is_rationals());
        assert_eq!(o.coords[0], o.field.one());
        assert_eq!(o.coords[1], o.field.one());
    }

    #[test]
    fn galois_orbit_with_coordinates() {
        // y = x^2, x^3 = 2: one orbit over the cubic field x^3 - 2
        let vars = VarSet::new(&["x", "y"]);
        let sols =
            solve_zero_dim(&[qp(&vars, "y - x^2"), qp(&vars, "x^3 - 2")]).unwrap();
        assert_eq!(sols.orbits.len(), 1);
        let o = &sols.orbits[0];
        assert_eq!(o.field.degree(), 3);
        // verify y = x^2 exactly in the field
        assert_eq!(o.coords[1], o.coords[0].mul(&o.coords[0]));
    }
}
