//! The degree-15 worked pipeline: (2,3,7)-minus-4 with branching fractions
//! 1/2, 1/2, 1/2, 1/7, pattern 5[3] = 6[2]+1+1+1 = 2[7]+1, the fraction 1/7
//! assigned to x = infinity. Q = x^2 + c by translation, W = x^3 + w1 x^2 +
//! w2 x + w3; R and P are eliminated symbolically and the second relation
//! expands to a weighted-homogeneous system in {q, c, w1, w2, w3} with
//! weights 1, 2, 1, 2, 3.

use crate::ansatz::divide_in_x;
use crate::logdiff::{derived_numerators, eliminate_r_when_k2};
use crate::pullback::{build_pullback_with_identification, eliminate_p_when_237};
use crate::system::AlgebraicSystem;
use belyi_core::pattern::{BranchingPattern, Fiber, FiberAssignment};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::multipoly::{MultiPoly, VarSet};
use exact_algebra::numberfield::AlgebraicNumber;
use exact_algebra::rational::{rat_int, Rat};
use exact_algebra::ring::Ring;
use exact_algebra::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::sync::Arc;

pub const DEG15_PATTERN: &str = "5[3]=6[2]+1+1+1=2[7]+1";

/// Variable names of the reduced system, in paper order.
pub const DEG15_VARS: [&str; 5] = ["q", "c", "w1", "w2", "w3"];
pub const DEG15_WEIGHTS: [u32; 5] = [1, 2, 1, 2, 3];

pub struct Deg15Pipeline {
    /// the full pull-back system before eliminations
    pub system: AlgebraicSystem,
    /// R = 3 P' Q - 7 P Q' as recorded by the R elimination
    pub r_expr: MultiPoly<Rat>,
    /// P expressed from the Y-term identification
    pub p_expr: MultiPoly<Rat>,
    /// the second relation with R, P substituted, as a polynomial in x over
    /// the paper variables {q, c, w1, w2, w3}; sign normalized so the
    /// coefficient of w2 x^8 is positive
    pub expanded: MultiPoly<Rat>,
    pub paper_vars: Arc<VarSet>,
    /// the nine coefficient equations of `expanded` (x^8 down to x^0)
    pub equations: Vec<MultiPoly<Rat>>,
    /// w2 and w3 expressed from the leading two coefficients
    pub w2_expr: MultiPoly<Rat>,
    pub w3_expr: MultiPoly<Rat>,
    /// the remaining system in {q, c, w1} after eliminating w2, w3
    pub reduced: Vec<MultiPoly<Rat>>,
}

/// Run the pipeline.
pub fn deg15_pipeline() -> Result<Deg15Pipeline> {
    let pattern = BranchingPattern::parse(DEG15_PATTERN)?;
    let fa = FiberAssignment {
        infinity_fiber: Fiber::Inf,
        infinity_order: 1,
    };
    let (sys, ident) = build_pullback_with_identification(&pattern, &fa, 4)?;
    // R elimination from the first logarithmic-derivative relation
    let sys_r = eliminate_r_when_k2(&sys)?;
    let r_expr = sys_r
        .substitutions
        .iter()
        .find(|(n, _)| n == "r1")
        .map(|_| ())
        .ok_or_else(|| AlgebraError::Domain("R elimination recorded nothing".into()))?;
    let _ = r_expr;
    // reconstruct the full R polynomial expression 3P'Q - 7PQ'
    let a = &sys.ansatz;
    let r_poly_expr = a
        .p
        .poly
        .derivative(0)
        .scale(&rat_int(3))
        .mul(&a.q.poly)
        .sub(&a.p.poly.scale(&rat_int(7)).mul(&a.q.poly.derivative(0)));
    // P elimination from the identification
    let sys_rp = eliminate_p_when_237(&sys_r, &ident)?;
    let p_expr = {
        // P = x^5 + sum p_j x^{5-j}: rebuild from the recorded substitutions
        let x = MultiPoly::var(&sys.vars, "x", Rat::one());
        let mut p = x.pow(5);
        for (name, expr) in &sys_rp.substitutions {
            if let Some(j) = name.strip_prefix('p') {
                let j: usize = j
                    .parse()
                    .map_err(|_| AlgebraError::Domain("weird p name".into()))?;
                p = p.add(&expr.mul(&x.pow(5 - j)));
            }
        }
        p
    };
    // the second derived numerator with R then P substituted, in x
    let (_, n2) = derived_numerators(&sys.ansatz);
    let subst_of = |target: &str, expr: &MultiPoly<Rat>| -> Vec<MultiPoly<Rat>> {
        sys.vars
            .names()
            .iter()
            .map(|n| {
                if n == target {
                    expr.clone()
                } else {
                    MultiPoly::var(&sys.vars, n, Rat::one())
                }
            })
            .collect()
    };
    let _ = subst_of;
    let r_vals: Vec<MultiPoly<Rat>> = {
        let r_coeffs = r_poly_expr.coeffs_wrt(0);
        sys.vars
            .names()
            .iter()
            .map(|n| {
                if let Some(j) = n.strip_prefix('r') {
                    if let Ok(j) = j.parse::<usize>() {
                        // r_j is the coefficient of x^{6-j}
                        return r_coeffs
                            .get(6 - j)
                            .cloned()
                            .unwrap_or_else(|| MultiPoly::zero(&sys.vars));
                    }
                }
                MultiPoly::var(&sys.vars, n, Rat::one())
            })
            .collect()
    };
    let p_vals: Vec<MultiPoly<Rat>> = {
        let p_coeffs = p_expr.coeffs_wrt(0);
        sys.vars
            .names()
            .iter()
            .map(|n| {
                if let Some(j) = n.strip_prefix('p') {
                    if let Ok(j) = j.parse::<usize>() {
                        return p_coeffs
                            .get(5 - j)
                            .cloned()
                            .unwrap_or_else(|| MultiPoly::zero(&sys.vars));
                    }
                }
                MultiPoly::var(&sys.vars, n, Rat::one())
            })
            .collect()
    };
    let expanded_raw = n2.subst(&r_vals).subst(&p_vals);
    // translate to paper variables: q2 -> c, w1_1..w1_3 -> w1..w3,
    // acc1 -> -q
    let paper_vars = VarSet::from_names(
        ["x", "q", "c", "w1", "w2", "w3"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    let expanded = translate_to_paper(&expanded_raw, &sys.vars, &paper_vars)?;
    // sign normalization: coefficient of w2 * x^8 positive
    let idx_w2 = paper_vars.index_of("w2").unwrap();
    let coeffs = expanded.coeffs_wrt(0);
    let lead = &coeffs[8];
    let w2_mono: Vec<u32> = paper_vars
        .names()
        .iter()
        .enumerate()
        .map(|(i, _)| if i == idx_w2 { 1 } else { 0 })
        .collect();
    let w2_coeff = lead.terms().get(&w2_mono).cloned().unwrap_or_else(Rat::zero);
    let expanded = if w2_coeff < Rat::zero() {
        expanded.neg()
    } else {
        expanded
    };
    let coeffs = expanded.coeffs_wrt(0);
    if coeffs.len() != 9 {
        return Err(AlgebraError::Domain(format!(
            "expanded relation has x-degree {}, expected 8",
            coeffs.len() as i64 - 1
        )));
    }
    let equations: Vec<MultiPoly<Rat>> = coeffs.iter().rev().cloned().collect();
    // eliminate w2 from [x^8] (linear), then w3 from [x^7]
    let w2_expr = solve_linear(&equations[0], &paper_vars, "w2")?;
    let w2_vals: Vec<MultiPoly<Rat>> = paper_vars
        .names()
        .iter()
        .map(|n| {
            if n == "w2" {
                w2_expr.clone()
            } else {
                MultiPoly::var(&paper_vars, n, Rat::one())
            }
        })
        .collect();
    let eq7 = equations[1].subst(&w2_vals);
    let w3_expr_pre = solve_linear(&eq7, &paper_vars, "w3")?;
    let w3_vals: Vec<MultiPoly<Rat>> = paper_vars
        .names()
        .iter()
        .map(|n| {
            if n == "w3" {
                w3_expr_pre.clone()
            } else {
                MultiPoly::var(&paper_vars, n, Rat::one())
            }
        })
        .collect();
    let mut reduced = Vec::new();
    for eq in &equations[2..] {
        let e = eq.subst(&w2_vals).subst(&w3_vals).primitive();
        if !e.is_zero() {
            reduced.push(e);
        }
    }
    Ok(Deg15Pipeline {
        system: sys,
        r_expr: r_poly_expr,
        p_expr,
        expanded,
        paper_vars,
        equations,
        w2_expr,
        w3_expr: w3_expr_pre,
        reduced,
    })
}

/// Solve a polynomial equation linear in `var` for that variable.
fn solve_linear(
    eq: &MultiPoly<Rat>,
    vars: &Arc<VarSet>,
    var: &str,
) -> Result<MultiPoly<Rat>> {
    let idx = vars.index_of(var).unwrap();
    for t in eq.terms().keys() {
        if t[idx] > 1 {
            return Err(AlgebraError::Domain(format!("{} appears nonlinearly", var)));
        }
    }
    let cv = eq.derivative(idx);
    let c = cv
        .constant_value()
        .cloned()
        .ok_or_else(|| AlgebraError::Domain(format!("{} has a nonconstant coefficient", var)))?;
    if Ring::is_zero(&c) {
        return Err(AlgebraError::Domain(format!("{} does not appear", var)));
    }
    let vals: Vec<MultiPoly<Rat>> = vars
        .names()
        .iter()
        .map(|n| {
            if n == var {
                MultiPoly::zero(vars)
            } else {
                MultiPoly::var(vars, n, Rat::one())
            }
        })
        .collect();
    let rest = eq.subst(&vals);
    Ok(rest.scale(&(-Rat::one() / c)))
}

fn translate_to_paper(
    p: &MultiPoly<Rat>,
    from: &Arc<VarSet>,
    to: &Arc<VarSet>,
) -> Result<MultiPoly<Rat>> {
    let map_name = |n: &str| -> Option<(usize, bool)> {
        // (target index, negate per unit exponent)
        let target = match n {
            "x" => "x",
            "q2" => "c",
            "w1_1" => "w1",
            "w1_2" => "w2",
            "w1_3" => "w3",
            "acc1" => "q",
            _ => return None,
        };
        Some((to.index_of(target).unwrap(), n == "acc1"))
    };
    let mut out = MultiPoly::zero(to);
    for (mono, c) in p.terms() {
        let mut m = vec![0u32; to.len()];
        let mut coeff = c.clone();
        for (i, &e) in mono.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = &from.names()[i];
            let Some((j, neg)) = map_name(name) else {
                return Err(AlgebraError::Domain(format!(
                    "residual variable {} in the expanded relation",
                    name
                )));
            };
            m[j] += e;
            if neg && e % 2 == 1 {
                coeff = -coeff;
            }
        }
        out = out.add(&MultiPoly::from_terms(to, vec![(m, coeff)]));
    }
    Ok(out)
}

/// Instantiate the degree-15 ansatz polynomials from paper-variable
/// coordinates (q, c, w1, w2, w3): returns (P, Q, R, W) over the field.
pub fn instantiate_deg15(
    pipe: &Deg15Pipeline,
    coords: &[AlgebraicNumber; 5],
) -> Result<[UniPoly<AlgebraicNumber>; 4]> {
    let sys_vars = &pipe.system.vars;
    let witness = &coords[0];
    // coordinates in the original variable order
    let mut full: Vec<AlgebraicNumber> = Vec::with_capacity(sys_vars.len() - 1);
    // first pass: q2, w1_*, acc1; p's and r's get filled from expressions
    let mut map: std::collections::BTreeMap<String, AlgebraicNumber> =
        std::collections::BTreeMap::new();
    map.insert("q2".into(), coords[1].clone());
    map.insert("w1_1".into(), coords[2].clone());
    map.insert("w1_2".into(), coords[3].clone());
    map.insert("w1_3".into(), coords[4].clone());
    map.insert("acc1".into(), coords[0].neg_ref());
    // evaluate P's coefficients from p_expr
    let eval = |expr: &MultiPoly<Rat>,
                map: &std::collections::BTreeMap<String, AlgebraicNumber>|
     -> Result<UniPoly<AlgebraicNumber>> {
        let dx = expr.degree_in(0).map(|d| d as usize).unwrap_or(0);
        let mut out = vec![witness.zero_like(); dx + 1];
        for (mono, cc) in expr.terms() {
            let mut t = witness.from_rat_like(cc);
            for (i, &e) in mono.iter().enumerate().skip(1) {
                if e == 0 {
                    continue;
                }
                let name = &sys_vars.names()[i];
                let v = map.get(name).ok_or_else(|| {
                    AlgebraError::Domain(format!("unbound variable {}", name))
                })?;
                for _ in 0..e {
                    t = t.mul(v);
                }
            }
            let k = mono[0] as usize;
            out[k] = out[k].add(&t);
        }
        Ok(UniPoly::new(out))
    };
    let p_poly = eval(&pipe.p_expr, &map)?;
    for (j, cval) in p_poly.coeffs().iter().take(5).enumerate() {
        // coefficient of x^j is p_{5-j}
        map.insert(format!("p{}", 5 - j), cval.clone());
    }
    let r_poly = eval(&pipe.r_expr, &map)?;
    let q_poly = UniPoly::new(vec![
        coords[1].clone(),
        witness.zero_like(),
        witness.one_like(),
    ]);
    let w_poly = UniPoly::new(vec![
        coords[4].clone(),
        coords[3].clone(),
        coords[2].clone(),
        witness.one_like(),
    ]);
    full.clear();
    Ok([p_poly, q_poly, r_poly, w_poly])
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::multipoly::parse_multipoly;

    #[test]
    fn pipeline_builds_and_is_homogeneous() {
        let pipe = deg15_pipeline().unwrap();
        // weights q:1 c:2 w1:1 w2:2 w3:3 (and x weight 1 for the expanded
        // polynomial: each x-coefficient is homogeneous on its own)
        let ws: Vec<u32> = pipe
            .paper_vars
            .names()
            .iter()
            .map(|n| match n.as_str() {
                "x" => 1,
                "q" => 1,
                "c" => 2,
                "w1" => 1,
                "w2" => 2,
                "w3" => 3,
                _ => unreachable!(),
            })
            .collect();
        assert!(pipe.expanded.is_weighted_homogeneous(&ws));
        for eq in &pipe.equations {
            let ws5: Vec<u32> = ws.clone();
            assert!(eq.is_weighted_homogeneous(&ws5));
        }
        assert_eq!(pipe.equations.len(), 9);
    }

    #[test]
    fn leading_coefficient_matches_display() {
        let pipe = deg15_pipeline().unwrap();
        let expect = parse_multipoly(
            &pipe.paper_vars,
            &Rat::one(),
            "324*(29/12*w2 - 20/3*c - 784/1521*w1^2 + 425/169*q*w1 - 2025/676*q^2)",
        )
        .unwrap();
        assert_eq!(pipe.equations[0], expect);
    }

    #[test]
    fn second_coefficient_matches_display() {
        let pipe = deg15_pipeline().unwrap();
        let expect = parse_multipoly(
            &pipe.paper_vars,
            &Rat::one(),
            "1350/13*(193/5*w3 - 196/39*w1*w2 + 447/13*q*w2 - 12307/195*c*w1 - 1239/13*c*q)",
        )
        .unwrap();
        assert_eq!(pipe.equations[1], expect);
    }

    #[test]
    fn trailing_coefficient_matches_display() {
        let pipe = deg15_pipeline().unwrap();
        let expect = parse_multipoly(
            &pipe.paper_vars,
            &Rat::one(),
            "1620/13*c^2*(3/4*c^2*w2 - 405/52*c^2*q^2 - 49/15*c*w2^2 - 784/45*c*w1*w3 - 575/13*c*q*w3 - 1372/39*w3^2)",
        )
        .unwrap();
        assert_eq!(pipe.equations[8], expect);
    }
}
