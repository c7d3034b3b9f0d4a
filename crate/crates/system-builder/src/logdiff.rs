//! The logarithmic-derivative ansatz and its symbolic eliminations.

use crate::ansatz::{divide_in_x, log_derivative_numerator, AnsatzPolynomials};
use crate::system::{AlgebraicSystem, Method};
use belyi_core::pattern::{BranchingPattern, FiberAssignment};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::linalg::nullspace;
use exact_algebra::multipoly::{MultiPoly, VarSet};
use exact_algebra::rational::{rat_int, Rat};
use exact_algebra::ring::Ring;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// The two derived numerators of phi and phi - 1: the differences of the
/// factorized and the termwise expressions for the logarithmic derivatives,
/// over the common denominators P*Q*Frad and Q*R*Frad.
pub fn derived_numerators(a: &AnsatzPolynomials) -> (MultiPoly<Rat>, MultiPoly<Rat>) {
    let vars = &a.vars;
    let h = rat_int(a.assignment.infinity_order as i64);
    let frad = a.radical_uvw();
    let k = a.signature.k as usize;
    let l = a.signature.l as usize;
    let m = rat_int(a.signature.m as i64);

    // N1: h R^{k-1} W_full  -  [ l P'/P + U'/U - m Q'/Q - V'/V ] * (P Q Frad)
    let d1 = a.p.poly.mul(&a.q.poly).mul(&frad);
    let mut l1 = a
        .p
        .poly
        .derivative(0)
        .scale(&rat_int(l as i64))
        .mul(&a.q.poly)
        .mul(&frad);
    l1 = l1.add(&log_derivative_numerator(vars, &a.u_parts, &d1));
    l1 = l1.sub(&a.q.poly.derivative(0).scale(&m).mul(&a.p.poly).mul(&frad));
    l1 = l1.sub(&log_derivative_numerator(vars, &a.v_parts, &d1));
    let r1 = a
        .r
        .poly
        .pow(k - 1)
        .mul(&a.w_full())
        .scale(&h);
    let n1 = r1.sub(&l1);

    // N2: h P^{l-1} U_full  -  [ k R'/R + W'/W - m Q'/Q - V'/V ] * (Q R Frad)
    let d2 = a.q.poly.mul(&a.r.poly).mul(&frad);
    let mut l2 = a
        .r
        .poly
        .derivative(0)
        .scale(&rat_int(k as i64))
        .mul(&a.q.poly)
        .mul(&frad);
    l2 = l2.add(&log_derivative_numerator(vars, &a.w_parts, &d2));
    l2 = l2.sub(&a.q.poly.derivative(0).scale(&m).mul(&a.r.poly).mul(&frad));
    l2 = l2.sub(&log_derivative_numerator(vars, &a.v_parts, &d2));
    let r2 = a
        .p
        .poly
        .pow(l - 1)
        .mul(&a.u_full())
        .scale(&h);
    let n2 = r2.sub(&l2);
    (n1, n2)
}

/// Coefficient equations of a polynomial in x, primitive, zeros dropped.
pub fn coefficient_equations(p: &MultiPoly<Rat>) -> Vec<MultiPoly<Rat>> {
    p.coeffs_wrt(0)
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.primitive())
        .collect()
}

/// Build the logarithmic-derivative system: all ansatz polynomials monic,
/// h1 = h2 = the branching order at infinity (the point at infinity is
/// always arranged over phi = infinity).
pub fn build_logderiv(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
) -> Result<AlgebraicSystem> {
    let ansatz = AnsatzPolynomials::arrange(pattern, fa)?;
    let (n1, n2) = derived_numerators(&ansatz);
    let mut equations = coefficient_equations(&n1);
    equations.extend(coefficient_equations(&n2));
    Ok(AlgebraicSystem {
        method: Method::LogDerivative,
        equations,
        vars: ansatz.vars.clone(),
        unknowns: ansatz.unknowns(),
        weights: ansatz.weights.clone(),
        h: fa.infinity_order,
        ansatz,
        substitutions: vec![],
    })
}

/// Certificate for the dependency among the leading coefficient equations
/// of the two derived numerators (E'_1..E'_p and E''_1..E''_p).
#[derive(Debug, Clone)]
pub struct DependencyCertificate {
    pub dependent: bool,
    /// coefficients of a vanishing linear combination
    /// c_1 E'_1 + .. + c_p E'_p + c_{p+1} E''_1 + .. = 0
    pub combination: Vec<Rat>,
}

/// Exhibit the linear dependency among the first p leading coefficient
/// equations of both derived numerators.
pub fn dependency_check(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
) -> Result<DependencyCertificate> {
    let a = AnsatzPolynomials::arrange(pattern, fa)?;
    let p_order = fa.infinity_order as usize;
    let (n1, n2) = derived_numerators(&a);
    let frad = a.radical_uvw();
    let deg = |q: &MultiPoly<Rat>| q.degree_in(0).map(|d| d as usize).unwrap_or(0);
    // formal degree bounds of the numerators (top slots may cancel to zero)
    let d1 = deg(&a.p.poly) + deg(&a.q.poly) + deg(&frad) - 1;
    let d2 = deg(&a.q.poly) + deg(&a.r.poly) + deg(&frad) - 1;
    let c1 = n1.coeffs_wrt(0);
    let c2 = n2.coeffs_wrt(0);
    let slot = |cs: &[MultiPoly<Rat>], i: usize| -> MultiPoly<Rat> {
        cs.get(i).cloned().unwrap_or_else(|| MultiPoly::zero(&a.vars))
    };
    let zero_poly = MultiPoly::zero(&a.vars);
    let mut rows: Vec<MultiPoly<Rat>> = Vec::new();
    for i in 0..p_order {
        rows.push(if i <= d1 { slot(&c1, d1 - i) } else { zero_poly.clone() });
    }
    for i in 0..p_order {
        rows.push(if i <= d2 { slot(&c2, d2 - i) } else { zero_poly.clone() });
    }
    // matrix over the union of monomials
    let mut monos: BTreeSet<Vec<u32>> = BTreeSet::new();
    for r in &rows {
        monos.extend(r.terms().keys().cloned());
    }
    let monos: Vec<Vec<u32>> = monos.into_iter().collect();
    let mat: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            monos
                .iter()
                .map(|m| r.terms().get(m).cloned().unwrap_or_else(Rat::zero))
                .collect()
        })
        .collect();
    // dependency = nonzero left kernel of the row matrix
    let transpose: Vec<Vec<Rat>> = (0..monos.len().max(1))
        .map(|c| {
            rows.iter()
                .enumerate()
                .map(|(r, _)| {
                    if monos.is_empty() {
                        Rat::zero()
                    } else {
                        mat[r][c].clone()
                    }
                })
                .collect()
        })
        .collect();
    let ns = nullspace(&transpose, &Rat::one());
    match ns.first() {
        Some(v) => Ok(DependencyCertificate {
            dependent: true,
            combination: v.clone(),
        }),
        None => Ok(DependencyCertificate {
            dependent: false,
            combination: vec![],
        }),
    }
}

/// Verify a dependency certificate: the stated combination of the leading
/// equations vanishes identically.
pub fn verify_dependency(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
    cert: &DependencyCertificate,
) -> bool {
    if !cert.dependent {
        return false;
    }
    let a = match AnsatzPolynomials::arrange(pattern, fa) {
        Ok(a) => a,
        Err(_) => return false,
    };
    let p_order = fa.infinity_order as usize;
    let (n1, n2) = derived_numerators(&a);
    let frad = a.radical_uvw();
    let deg = |q: &MultiPoly<Rat>| q.degree_in(0).map(|d| d as usize).unwrap_or(0);
    let d1 = deg(&a.p.poly) + deg(&a.q.poly) + deg(&frad) - 1;
    let d2 = deg(&a.q.poly) + deg(&a.r.poly) + deg(&frad) - 1;
    let c1 = n1.coeffs_wrt(0);
    let c2 = n2.coeffs_wrt(0);
    let slot = |cs: &[MultiPoly<Rat>], i: usize| -> MultiPoly<Rat> {
        cs.get(i).cloned().unwrap_or_else(|| MultiPoly::zero(&a.vars))
    };
    let mut acc = MultiPoly::zero(&a.vars);
    for i in 0..p_order {
        if i <= d1 {
            acc = acc.add(&slot(&c1, d1 - i).scale(&cert.combination[i]));
        }
    }
    for i in 0..p_order {
        if i <= d2 {
            acc = acc.add(&slot(&c2, d2 - i).scale(&cert.combination[p_order + i]));
        }
    }
    acc.is_zero() && cert.combination.iter().any(|c| !Ring::is_zero(c))
}

/// Symbolic elimination of R when k = 2 (requires every exceptional order
/// over phi = 1 to be 1 so R is isolated): R = L1 / (h * W_full).
pub fn eliminate_r_when_k2(sys: &AlgebraicSystem) -> Result<AlgebraicSystem> {
    let a = &sys.ansatz;
    if a.signature.k != 2 {
        return Err(AlgebraError::Domain(format!(
            "R elimination needs k = 2, signature has k = {}",
            a.signature.k
        )));
    }
    if a.w_parts.iter().any(|(o, _)| *o != 1) {
        return Err(AlgebraError::Unsupported(
            "R elimination implemented for simple exceptional points over phi = 1".into(),
        ));
    }
    let (n1, _) = derived_numerators(a);
    // N1 = h R W_full - L1, so R = (h R W_full - N1)/(h W_full); with the
    // equations asserting N1 = 0 the substitution is L1/(h W_full)
    let h = rat_int(sys.h as i64);
    let l1 = a
        .r
        .poly
        .mul(&a.w_full())
        .scale(&h)
        .sub(&n1);
    let w_full = a.w_full();
    let r_expr = divide_in_x(&l1, &w_full)
        .ok_or_else(|| AlgebraError::Domain("W does not divide L1".into()))?
        .scale(&(Rat::one() / h));
    substitute_part(sys, "r", &a.r.poly.clone(), &r_expr)
}

/// Substitute a monic ansatz part by a monic-in-x expression of the same
/// degree, rewriting all equations and recording the substitution.
pub fn substitute_part(
    sys: &AlgebraicSystem,
    label: &str,
    part_poly: &MultiPoly<Rat>,
    expr: &MultiPoly<Rat>,
) -> Result<AlgebraicSystem> {
    let vars = &sys.vars;
    let degree = part_poly.degree_in(0).unwrap_or(0) as usize;
    if expr.degree_in(0).unwrap_or(0) as usize != degree {
        return Err(AlgebraError::Domain(format!(
            "substitution for {} has wrong degree",
            label
        )));
    }
    let expr_coeffs = expr.coeffs_wrt(0);
    if expr_coeffs[degree].constant_value() != Some(&Rat::one()) {
        return Err(AlgebraError::Domain(format!(
            "substitution for {} is not monic",
            label
        )));
    }
    // coefficient variable of x^{degree-1-j} is named by the ansatz part
    let part = find_part(sys, label)?;
    let mut subs: Vec<(String, MultiPoly<Rat>)> = Vec::new();
    let mut vals: Vec<MultiPoly<Rat>> = vars
        .names()
        .iter()
        .map(|n| MultiPoly::var(vars, n, Rat::one()))
        .collect();
    for (j, nm) in part.coeff_names.iter().enumerate() {
        let e = degree - 1 - j;
        if let Some(nm) = nm {
            let idx = vars.index_of(nm).unwrap();
            vals[idx] = expr_coeffs[e].clone();
            subs.push((nm.clone(), expr_coeffs[e].clone()));
        } else {
            // normalized-to-zero coefficient: the substitution forces the
            // matching equation; append it as an extra constraint
            if !expr_coeffs[e].is_zero() {
                subs.push((format!("0(={}[x^{}])", label, e), expr_coeffs[e].clone()));
            }
        }
    }
    let mut equations: Vec<MultiPoly<Rat>> = Vec::new();
    for eq in &sys.equations {
        let s = eq.subst(&vals).primitive();
        if !s.is_zero() {
            equations.push(s);
        }
    }
    // extra constraints from normalized coefficients
    for (nm, e) in &subs {
        if nm.starts_with('0') {
            let cs = coefficient_equations(e);
            equations.extend(cs);
        }
    }
    let removed: Vec<String> = part.coeff_names.iter().flatten().cloned().collect();
    let unknowns: Vec<String> = sys
        .unknowns
        .iter()
        .filter(|n| !removed.contains(n))
        .cloned()
        .collect();
    let mut substitutions = sys.substitutions.clone();
    substitutions.extend(subs.into_iter().filter(|(n, _)| !n.starts_with('0')));
    Ok(AlgebraicSystem {
        method: sys.method,
        equations,
        vars: vars.clone(),
        unknowns,
        weights: sys.weights.clone(),
        h: sys.h,
        ansatz: sys.ansatz.clone(),
        substitutions,
    })
}

fn find_part<'a>(
    sys: &'a AlgebraicSystem,
    label: &str,
) -> Result<&'a crate::ansatz::AnsatzPart> {
    let a = &sys.ansatz;
    let all = [&a.p, &a.q, &a.r];
    for part in all {
        if part.label == label {
            return Ok(part);
        }
    }
    for (_, part) in a.u_parts.iter().chain(&a.v_parts).chain(&a.w_parts) {
        if part.label == label {
            return Ok(part);
        }
    }
    Err(AlgebraError::Domain(format!("no ansatz part {}", label)))
}

/// Restrict system equations to the active unknowns (drops x and eliminated
/// variables) for the zero-dimensional solver.
pub fn solver_view(sys: &AlgebraicSystem) -> (Vec<MultiPoly<Rat>>, Vec<String>, Vec<u32>) {
    let names = sys.active_unknowns();
    let vs = VarSet::from_names(names.clone());
    let eqs: Vec<MultiPoly<Rat>> = sys
        .equations
        .iter()
        .map(|e| e.with_vars(&vs))
        .collect();
    let weights = sys.weight_vector(&names);
    (eqs, names, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use belyi_core::pattern::Fiber;

    #[test]
    fn deg15_first_relation_is_r_elimination() {
        // R = 3 P' Q - 7 P Q' (and the substituted system keeps the second)
        let p = BranchingPattern::parse("5[3]=6[2]+1+1+1=2[7]+1").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 1,
        };
        let sys = build_logderiv(&p, &fa).unwrap();
        assert_eq!(sys.h, 1);
        let a = &sys.ansatz;
        let (n1, _) = derived_numerators(a);
        let h = Rat::one();
        let l1 = a.r.poly.mul(&a.w_full()).scale(&h).sub(&n1);
        let r_expr = divide_in_x(&l1, &a.w_full()).unwrap();
        let expected = a
            .p
            .poly
            .derivative(0)
            .scale(&rat_int(3))
            .mul(&a.q.poly)
            .sub(&a.p.poly.scale(&rat_int(7)).mul(&a.q.poly.derivative(0)));
        assert_eq!(r_expr, expected);
        let sys2 = eliminate_r_when_k2(&sys).unwrap();
        assert!(sys2.unknowns.iter().all(|n| !n.starts_with('r')));
    }

    #[test]
    fn deg15_dependency_p1() {
        let p = BranchingPattern::parse("5[3]=6[2]+1+1+1=2[7]+1").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 1,
        };
        let cert = dependency_check(&p, &fa).unwrap();
        assert!(cert.dependent);
        assert!(verify_dependency(&p, &fa, &cert));
    }

    #[test]
    fn quadratic_pure_case() {
        // d=2, pattern 2 = 1+1 = 2 with infinity over inf of order 2
        let p = BranchingPattern::parse("2=1+1=2").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 2,
        };
        let sys = build_logderiv(&p, &fa).unwrap();
        assert_eq!(sys.h, 2);
        let cert = dependency_check(&p, &fa).unwrap();
        assert!(cert.dependent);
        assert!(verify_dependency(&p, &fa, &cert));
        let _ = sys;
    }

    #[test]
    fn wrong_signature_guard() {
        // k = 3 signature (tetrahedral-type): R elimination must refuse
        let p = BranchingPattern::parse("4[3]=4[3]=6[2]").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 2,
        };
        let sys = build_logderiv(&p, &fa).unwrap();
        assert!(eliminate_r_when_k2(&sys).is_err());
    }
}
