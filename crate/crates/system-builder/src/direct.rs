//! The straightforward method: expand the polynomial identity and compare
//! the d+1 coefficients.

use crate::ansatz::AnsatzPolynomials;
use crate::logdiff::coefficient_equations;
use crate::system::{AlgebraicSystem, Method};
use belyi_core::pattern::{BranchingPattern, FiberAssignment};
use exact_algebra::error::Result;
use exact_algebra::multipoly::{MultiPoly, VarSet};
use exact_algebra::rational::Rat;
use num_traits::One;

/// Build the direct system: A - hb*B - hc*C = 0 coefficientwise, with the
/// two scalar factors hb, hc as extra unknowns (the three products are kept
/// monic, so the scalars sit on the B and C sides).
pub fn build_direct(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
) -> Result<AlgebraicSystem> {
    let base = AnsatzPolynomials::arrange(pattern, fa)?;
    // extend the variable set with the two scalars
    let mut names: Vec<String> = base.vars.names().to_vec();
    names.push("hb".into());
    names.push("hc".into());
    let vars = VarSet::from_names(names);
    let lift = |p: &MultiPoly<Rat>| p.with_vars(&vars);
    let a = lift(&base.a_product());
    let b = lift(&base.b_product());
    let c = lift(&base.c_product());
    let hb = MultiPoly::var(&vars, "hb", Rat::one());
    let hc = MultiPoly::var(&vars, "hc", Rat::one());
    let identity = a.sub(&hb.mul(&b)).sub(&hc.mul(&c));
    let equations = coefficient_equations(&identity);
    let mut weights = base.weights.clone();
    weights.insert("hb".into(), fa.infinity_order);
    weights.insert("hc".into(), 0);
    let mut unknowns: Vec<String> = base.unknowns();
    unknowns.push("hb".into());
    unknowns.push("hc".into());
    // rebuild ansatz parts over the extended variable set
    let mut ansatz = base;
    ansatz.p.poly = lift(&ansatz.p.poly);
    ansatz.q.poly = lift(&ansatz.q.poly);
    ansatz.r.poly = lift(&ansatz.r.poly);
    for (_, part) in ansatz
        .u_parts
        .iter_mut()
        .chain(ansatz.v_parts.iter_mut())
        .chain(ansatz.w_parts.iter_mut())
    {
        part.poly = lift(&part.poly);
    }
    ansatz.vars = vars.clone();
    ansatz.weights = weights.clone();
    Ok(AlgebraicSystem {
        method: Method::Direct,
        equations,
        vars,
        unknowns,
        weights,
        h: fa.infinity_order,
        ansatz,
        substitutions: vec![],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use belyi_core::pattern::Fiber;

    #[test]
    fn degree_one_trivial() {
        let p = BranchingPattern::parse("1=1=1").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 1,
        };
        let sys = build_direct(&p, &fa).unwrap();
        // A = x + a, B = 1, C = x + c: identity has no forced content beyond
        // fixing the scalars; the system is tiny
        assert!(sys.equation_count() <= 2);
    }

    #[test]
    fn deg15_counts() {
        let p = BranchingPattern::parse("5[3]=6[2]+1+1+1=2[7]+1").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 1,
        };
        let sys = build_direct(&p, &fa).unwrap();
        // d+1 = 16 equations; 16 unknowns net of the scaling action
        assert_eq!(sys.equation_count(), 16);
        assert_eq!(sys.effective_unknown_count(), 16);
    }
}
