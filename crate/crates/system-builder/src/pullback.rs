//! Pull-back identification: the hypergeometric equation E(1/k,1/l,1/m) is
//! carried by the sought map to a Fuchsian equation with n singularities,
//! and matching the Y(x)-term against the target normal form yields extra
//! algebraic equations with the accessory parameters as new unknowns.

use crate::ansatz::{divide_in_x, AnsatzPolynomials};
use crate::logdiff::{build_logderiv, coefficient_equations, substitute_part};
use crate::system::{AlgebraicSystem, Method};
use belyi_core::pattern::{BranchingPattern, FiberAssignment};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::multipoly::{MultiPoly, VarSet};
use exact_algebra::rational::{rat, rat_int, Rat};
use num_traits::{One, Zero};

/// Gauss hypergeometric equation data: parameters A, B, C with local
/// exponent differences (1-C, C-A-B, A-B) at 0, 1, infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricEquation {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HypergeometricEquation {
    /// E(1/k, 1/l, 1/m) in the normalization used by the pull-back lemma:
    /// A = (1 - 1/k - 1/l - 1/m)/2, B = (1 - 1/k - 1/l + 1/m)/2, C = 1 - 1/l.
    pub fn from_klm(k: u32, l: u32, m: u32) -> Self {
        let half = rat(1, 2);
        let s = Rat::one() - rat(1, k as i64) - rat(1, l as i64);
        HypergeometricEquation {
            a: &half * &(&s - &rat(1, m as i64)),
            b: &half * &(&s + &rat(1, m as i64)),
            c: Rat::one() - rat(1, l as i64),
        }
    }

    pub fn exponent_differences(&self) -> (Rat, Rat, Rat) {
        (
            Rat::one() - &self.c,
            &self.c - &self.a - &self.b,
            &self.a - &self.b,
        )
    }
}

/// Heun-type target data (n = 4): exponent differences 1-c, 1-d, c+d-a-b,
/// a-b at 0, 1, t, infinity; the accessory parameter q does not enter the
/// local exponents.
#[derive(Debug, Clone, PartialEq)]
pub struct HeunTarget {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub t: Option<Rat>,
    pub q: Option<Rat>,
}

impl HeunTarget {
    pub fn exponent_differences(&self) -> (Rat, Rat, Rat, Rat) {
        (
            Rat::one() - &self.c,
            Rat::one() - &self.d,
            &self.c + &self.d - &self.a - &self.b,
            &self.a - &self.b,
        )
    }
}

/// Product of the two infinity exponents of the pulled-back equation: via
/// the Fuchs relation a+b = (n-2) - sum of finite exponent differences, and
/// a-b = (order at infinity)/(regular order of its fiber).
pub fn infinity_exponent_product(ansatz: &AnsatzPolynomials) -> Rat {
    let sig = &ansatz.signature;
    let mut sum_fin = Rat::zero();
    let mut n_count = 1i64; // infinity itself
    for (role, parts) in [
        (sig.l, &ansatz.u_parts),
        (sig.m, &ansatz.v_parts),
        (sig.k, &ansatz.w_parts),
    ] {
        for (o, part) in parts.iter() {
            sum_fin += rat(*o as i64, role as i64) * rat_int(part.degree as i64);
            n_count += part.degree as i64;
        }
    }
    let apb = rat_int(n_count - 2) - sum_fin;
    let amb = rat(ansatz.assignment.infinity_order as i64, sig.m as i64);
    (&apb * &apb - &amb * &amb) / rat_int(4)
}

fn radical_of(
    parts: &[(u32, crate::ansatz::AnsatzPart)],
    vars: &std::sync::Arc<VarSet>,
) -> MultiPoly<Rat> {
    let mut acc = MultiPoly::constant(vars, Rat::one());
    for (_, part) in parts {
        acc = acc.mul(&part.poly);
    }
    acc
}

/// The pulled-back Y(x)-term times the common denominator Q^2 F^2 U V W
/// (divided by the hypergeometric parameter A, per the paper's display).
fn bracket_times_denominator(
    a: &AnsatzPolynomials,
    hg: &HypergeometricEquation,
) -> MultiPoly<Rat> {
    let vars = &a.vars;
    let k = a.signature.k as i64;
    let l = a.signature.l as i64;
    let m = a.signature.m as i64;
    let h = rat_int(a.assignment.infinity_order as i64);
    let q = &a.q.poly;
    let qd = q.derivative(0);
    let qdd = qd.derivative(0);
    let u = a.u_full();
    let v = a.v_full();
    let w = a.w_full();
    let frad = a.radical_uvw();
    let rad_u = radical_of(&a.u_parts, vars);
    let rad_v = radical_of(&a.v_parts, vars);
    let rad_w = radical_of(&a.w_parts, vars);
    // U'/U = lu / rad_u etc. as polynomial numerators over the radicals
    let lu = crate::ansatz::log_derivative_numerator(vars, &a.u_parts, &rad_u);
    let lv = crate::ansatz::log_derivative_numerator(vars, &a.v_parts, &rad_v);
    let lw = crate::ansatz::log_derivative_numerator(vars, &a.w_parts, &rad_w);
    let frad_d = frad.derivative(0);

    let q2 = q.mul(q);
    let f2 = frad.mul(&frad);
    let uvw = u.mul(&v).mul(&w);
    let b_hg = &hg.b;

    let mut acc = MultiPoly::zero(vars);
    // B h1 h2 P^{l-2} R^{k-2} U W/(Q^2 F^2) * D = B h^2 P^{l-2} R^{k-2} U^2 V W^2
    let t1 = a
        .p
        .poly
        .pow((l - 2) as usize)
        .mul(&a.r.poly.pow((k - 2) as usize))
        .mul(&u)
        .mul(&w)
        .mul(&uvw)
        .scale(&(&(&h * &h) * b_hg));
    acc = acc.add(&t1);
    // -B m^2 Q'^2/Q^2 * D = -B m^2 Q'^2 F^2 U V W
    let t2 = qd
        .mul(&qd)
        .mul(&f2)
        .mul(&uvw)
        .scale(&(&rat_int(m * m) * b_hg));
    acc = acc.sub(&t2);
    // -B (V'/V)^2 * D = -B lv^2 (F/rad_v)^2 Q^2 U V W
    let f_over_rv = divide_in_x(&frad, &rad_v).expect("radical divides");
    let t3 = lv
        .mul(&lv)
        .mul(&f_over_rv.mul(&f_over_rv))
        .mul(&q2)
        .mul(&uvw)
        .scale(b_hg);
    acc = acc.sub(&t3);
    // +m Q''/Q * D = m Q'' Q F^2 U V W
    let t4 = qdd.mul(q).mul(&f2).mul(&uvw).scale(&rat_int(m));
    acc = acc.add(&t4);
    // +V''/V * D = V'' Q^2 F^2 U W
    let vdd = v.derivative(0).derivative(0);
    let t5 = vdd.mul(&q2).mul(&f2).mul(&u).mul(&w);
    acc = acc.add(&t5);
    // +(1/k + 1/l) m Q' V'/(Q V) * D = (1/k+1/l) m Q' lv (F/rad_v) Q F U V W
    let c_kl = rat(1, k) + rat(1, l);
    let t6 = qd
        .mul(&lv)
        .mul(&f_over_rv)
        .mul(q)
        .mul(&frad)
        .mul(&uvw)
        .scale(&(&c_kl * &rat_int(m)));
    acc = acc.add(&t6);
    // +(m Q'/Q + V'/V)(F'/F - U'/(l U) - V'/V - W'/(k W)) * D
    let fac1 = qd.scale(&rat_int(m)).mul(&rad_v).add(&lv.mul(q));
    let ruv = rad_u.mul(&rad_v);
    let ruw = rad_u.mul(&rad_w);
    let rvw = rad_v.mul(&rad_w);
    let fac2 = frad_d
        .mul(&rad_u)
        .mul(&rvw)
        .sub(&lu.mul(&frad).mul(&rvw).scale(&rat(1, l)))
        .sub(&lv.mul(&frad).mul(&ruw))
        .sub(&lw.mul(&frad).mul(&ruv).scale(&rat(1, k)));
    // D / (Q rad_v * F rad_u rad_v rad_w) = Q F U V W / (rad_u rad_v^2 rad_w)
    let denom_prod = rad_u.mul(&rad_v).mul(&rad_v).mul(&rad_w);
    let rest = divide_in_x(&q.mul(&frad).mul(&uvw), &denom_prod)
        .expect("radicals divide the exceptional products");
    let t7 = fac1.mul(&fac2).mul(&rest);
    acc = acc.add(&t7);
    acc
}

/// bracket*D - target*(D/F), reduced by the common symbolic factors.
fn reduced_identification(ansatz: &AnsatzPolynomials, n_acc: usize) -> MultiPoly<Rat> {
    let sig = &ansatz.signature;
    let hg = HypergeometricEquation::from_klm(sig.k, sig.l, sig.m);
    let vars = &ansatz.vars;
    let left = bracket_times_denominator(ansatz, &hg);
    let ab = infinity_exponent_product(ansatz);
    let scale = &ab / &hg.a;
    let x = MultiPoly::var(vars, "x", Rat::one());
    let mut tilde_n = x.pow(n_acc);
    for i in 1..=n_acc {
        let acc = MultiPoly::var(vars, &format!("acc{}", i), Rat::one());
        tilde_n = tilde_n.add(&acc.mul(&x.pow(n_acc - i)));
    }
    tilde_n = tilde_n.scale(&scale);
    let frad = ansatz.radical_uvw();
    let q2 = ansatz.q.poly.mul(&ansatz.q.poly);
    let uvw = ansatz
        .u_full()
        .mul(&ansatz.v_full())
        .mul(&ansatz.w_full());
    let right = tilde_n.mul(&q2.mul(&frad).mul(&uvw));
    let mut ident = left.sub(&right);
    let mut divisors: Vec<MultiPoly<Rat>> = vec![ansatz.q.poly.clone()];
    for (_, part) in ansatz
        .u_parts
        .iter()
        .chain(&ansatz.v_parts)
        .chain(&ansatz.w_parts)
    {
        divisors.push(part.poly.clone());
    }
    loop {
        let mut divided = false;
        for d in &divisors {
            if d.is_constant() {
                continue;
            }
            if let Some(q) = divide_in_x(&ident, d) {
                ident = q;
                divided = true;
            }
        }
        if !divided {
            break;
        }
    }
    ident
}

/// Build the pull-back system: the logarithmic-derivative equations plus
/// the Y(x)-term identification, with the n-3 accessory parameters acc1..
/// appended as unknowns (the target numerator is
/// (ab/A)(x^{n-3} + acc1 x^{n-4} + ..)).
pub fn build_pullback(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
    target_n: u32,
) -> Result<AlgebraicSystem> {
    let (sys, ident) = build_pullback_with_identification(pattern, fa, target_n)?;
    let mut equations = sys.equations.clone();
    equations.extend(coefficient_equations(&ident));
    Ok(AlgebraicSystem {
        equations,
        ..sys
    })
}

/// As `build_pullback`, but the identification polynomial is returned
/// separately (still in x) and not yet folded into the equation list.
pub fn build_pullback_with_identification(
    pattern: &BranchingPattern,
    fa: &FiberAssignment,
    target_n: u32,
) -> Result<(AlgebraicSystem, MultiPoly<Rat>)> {
    let base = build_logderiv(pattern, fa)?;
    let sig = base.ansatz.signature.clone();
    if sig.n != target_n {
        return Err(AlgebraError::Domain(format!(
            "pattern classifies as minus-{}, not minus-{}",
            sig.n, target_n
        )));
    }
    let (k, l, m) = (sig.k, sig.l, sig.m);
    let s = rat(1, k as i64) + rat(1, l as i64) + rat(1, m as i64);
    if s == Rat::one() {
        return Err(AlgebraError::Domain(
            "1/k + 1/l + 1/m = 1: the pull-back identification gives no new relations".into(),
        ));
    }
    if base.ansatz.q.degree == 0 {
        return Err(AlgebraError::Domain(
            "Q constant: the pull-back identification gives no new relations".into(),
        ));
    }
    if k < 2 || l < 2 {
        return Err(AlgebraError::Unsupported(
            "pull-back identification needs regular orders k, l >= 2".into(),
        ));
    }
    if fa.infinity_order == m {
        return Err(AlgebraError::Unsupported(
            "infinity must be an exceptional point for the pull-back target".into(),
        ));
    }
    let n_acc = (target_n as usize).saturating_sub(3);
    let mut names: Vec<String> = base.vars.names().to_vec();
    for i in 1..=n_acc {
        names.push(format!("acc{}", i));
    }
    let vars = VarSet::from_names(names);
    let lift = |p: &MultiPoly<Rat>| p.with_vars(&vars);
    let mut ansatz = base.ansatz.clone();
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
    for i in 1..=n_acc {
        ansatz.weights.insert(format!("acc{}", i), i as u32);
    }
    let ident = reduced_identification(&ansatz, n_acc);
    let equations: Vec<MultiPoly<Rat>> = base
        .equations
        .iter()
        .map(|e| e.with_vars(&vars))
        .collect();
    let mut unknowns = base.unknowns.clone();
    for i in 1..=n_acc {
        unknowns.push(format!("acc{}", i));
    }
    let weights = ansatz.weights.clone();
    Ok((
        AlgebraicSystem {
            method: Method::Pullback,
            equations,
            vars,
            unknowns,
            weights,
            h: fa.infinity_order,
            ansatz,
            substitutions: base.substitutions.clone(),
        },
        ident,
    ))
}

/// Symbolic elimination of P for signatures (2, 3, m) with m != 6: the
/// identification is linear in P once k = 2 (R drops out) and l = 3.
/// Implemented for the shape with U = V = 1 and simple exceptional points
/// over phi = 1 (the degree-15 family).
pub fn eliminate_p_when_237(
    sys: &AlgebraicSystem,
    ident: &MultiPoly<Rat>,
) -> Result<AlgebraicSystem> {
    let sig = &sys.ansatz.signature;
    if sig.k != 2 || sig.l != 3 || sig.m == 6 {
        return Err(AlgebraError::Domain(format!(
            "P elimination needs signature (2,3,m), m != 6; got ({},{},{})",
            sig.k, sig.l, sig.m
        )));
    }
    if !sys.ansatz.u_parts.is_empty()
        || !sys.ansatz.v_parts.is_empty()
        || sys.ansatz.w_parts.iter().any(|(o, _)| *o != 1)
    {
        return Err(AlgebraError::Unsupported(
            "P elimination implemented for U = V = 1 with simple points over phi = 1".into(),
        ));
    }
    let vars = &sys.vars;
    let p_part = &sys.ansatz.p;
    let p_vars: Vec<String> = p_part.coeff_names.iter().flatten().cloned().collect();
    let p_idx: Vec<usize> = p_vars.iter().map(|n| vars.index_of(n).unwrap()).collect();
    for t in ident.terms().keys() {
        let deg_p: u32 = p_idx.iter().map(|&i| t[i]).sum();
        if deg_p > 1 {
            return Err(AlgebraError::Domain(
                "identification is not linear in P".into(),
            ));
        }
    }
    // ident = T0 + CP * P where CP is the coefficient of any p_j divided by
    // the x-power it multiplies; use P's constant coefficient (x^0)
    let last = p_part
        .coeff_names
        .last()
        .and_then(|n| n.clone())
        .ok_or_else(|| AlgebraError::Unsupported("P has no free constant coefficient".into()))?;
    let last_idx = vars.index_of(&last).unwrap();
    let cp = ident.derivative(last_idx);
    if cp.is_zero() {
        return Err(AlgebraError::Domain(
            "identification does not involve P".into(),
        ));
    }
    // P-free part: set all p_j to zero, subtract CP * x^{deg P}
    let zero_vals: Vec<MultiPoly<Rat>> = vars
        .names()
        .iter()
        .map(|n| {
            if p_vars.contains(n) {
                MultiPoly::zero(vars)
            } else {
                MultiPoly::var(vars, n, Rat::one())
            }
        })
        .collect();
    let ident_p0 = ident.subst(&zero_vals);
    let x = MultiPoly::var(vars, "x", Rat::one());
    let t0 = ident_p0.sub(&cp.mul(&x.pow(p_part.degree)));
    let p_expr = divide_in_x(&t0.neg(), &cp)
        .ok_or_else(|| AlgebraError::Domain("P coefficient does not divide".into()))?;
    substitute_part(sys, "p", &p_part.poly.clone(), &p_expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergeometric_params_237() {
        let hg = HypergeometricEquation::from_klm(2, 3, 7);
        assert_eq!(hg.a, rat(1, 84));
        assert_eq!(hg.b, rat(13, 84));
        assert_eq!(hg.c, rat(2, 3));
        let (e1, e2, e3) = hg.exponent_differences();
        assert_eq!(e1, rat(1, 3));
        assert_eq!(e2, rat(1, 2));
        assert_eq!(e3, -rat(1, 7));
    }

    #[test]
    fn heun_target_deg15() {
        // W = x(x-1)(x-t) would give a = 5/28, b = 9/28, c = d = 1/2
        let h = HeunTarget {
            a: rat(5, 28),
            b: rat(9, 28),
            c: rat(1, 2),
            d: rat(1, 2),
            t: None,
            q: None,
        };
        let (e0, e1, et, einf) = h.exponent_differences();
        assert_eq!(e0, rat(1, 2));
        assert_eq!(e1, rat(1, 2));
        assert_eq!(et, rat(1, 2));
        assert_eq!(einf, -rat(1, 7));
        assert_eq!(&h.a * &h.b, rat(45, 784));
    }
}
