//! Belyi verification: the t-discriminant criterion, branching-pattern
//! extraction, solution assembly, and the parasitic-solution test.

use crate::map::{BelyiMap, K};
use crate::pattern::{BranchingPattern, Fiber};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::ratfunc::RationalFunction;
use exact_algebra::ring::Ring;
use exact_algebra::unipoly::{discriminant, UniPoly};
use serde::Serialize;

/// Certificate of the Belyi criterion: D(t) = Disc_x(A - tB) equals
/// const * t^a (t-1)^b exactly when the map only branches over {0,1,inf}.
#[derive(Debug, Clone, Serialize)]
pub struct BelyiCertificate {
    pub belyi: bool,
    pub a: u32,
    pub b: u32,
    pub constant: String,
    pub disc_degree: usize,
}

/// The Belyi test via the t-discriminant: no factorization, only squarefree
/// arithmetic on the resultant output.
pub fn is_belyi(phi: &RationalFunction<K>) -> Result<BelyiCertificate> {
    if phi.is_constant() {
        return Err(AlgebraError::Domain("constant map".into()));
    }
    let d = phi.map_degree();
    let a = phi.num();
    let b = phi.den();
    let zero_k = a.coeffs()[0].zero_like();
    // f(x, t) = A(x) - t B(x) as a polynomial in x over K[t]
    let mut coeffs: Vec<UniPoly<K>> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let ai = a.coeff(i, &zero_k);
        let bi = b.coeff(i, &zero_k);
        coeffs.push(UniPoly::new(vec![ai, bi.neg_ref()]));
    }
    let f: UniPoly<UniPoly<K>> = UniPoly::new(coeffs);
    let disc: UniPoly<K> = discriminant(&f);
    if disc.is_zero() {
        return Err(AlgebraError::Domain("degenerate discriminant".into()));
    }
    // strip t^a
    let val = disc
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap();
    let mut rest = UniPoly::new(disc.coeffs()[val..].to_vec());
    // divide out (t-1)^b
    let one_k = zero_k.one_like();
    let t_minus_1 = UniPoly::new(vec![one_k.neg_ref(), one_k.clone()]);
    let mut bexp = 0u32;
    while let Some(q) = rest.exact_div(&t_minus_1) {
        rest = q;
        bexp += 1;
    }
    let belyi = rest.is_constant();
    let constant = if belyi {
        format!("{}", rest.coeffs()[0])
    } else {
        String::new()
    };
    Ok(BelyiCertificate {
        belyi,
        a: val as u32,
        b: bexp,
        constant,
        disc_degree: disc.deg(),
    })
}

/// Branching pattern of a verified Belyi function.
pub fn branching_pattern(phi: &RationalFunction<K>) -> Result<BranchingPattern> {
    let cert = is_belyi(phi)?;
    if !cert.belyi {
        return Err(AlgebraError::Domain("not a Belyi function".into()));
    }
    let m = BelyiMap::analyze(phi)?;
    if !m.pattern.hurwitz_check() {
        return Err(AlgebraError::Domain(
            "internal: Belyi map violating the Hurwitz count".into(),
        ));
    }
    Ok(m.pattern)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Assembly {
    Proper,
    /// the three products admit no A = B + C normalization
    ParasiticOrSpurious(String),
}

/// Fix the two constant multiples in s*A0 = B0 + t*C0 by exact linear
/// algebra and return the assembled map; flags failure instead of guessing.
pub fn assemble_from_products(
    a0: &UniPoly<K>,
    b0: &UniPoly<K>,
    c0: &UniPoly<K>,
) -> Result<std::result::Result<(BelyiMap, K, K), Assembly>> {
    let zero = a0.coeffs()[0].zero_like();
    let deg = a0.deg().max(b0.deg()).max(c0.deg());
    let mut rows = Vec::with_capacity(deg + 1);
    let mut rhs = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        rows.push(vec![a0.coeff(i, &zero), c0.coeff(i, &zero).neg_ref()]);
        rhs.push(b0.coeff(i, &zero));
    }
    let Some(st) = exact_algebra::linalg::solve(&rows, &rhs) else {
        return Ok(Err(Assembly::ParasiticOrSpurious(
            "A = B + C unsatisfiable".into(),
        )));
    };
    let (s, t) = (st[0].clone(), st[1].clone());
    if s.is_zero() || t.is_zero() {
        return Ok(Err(Assembly::ParasiticOrSpurious(
            "degenerate constant multiple".into(),
        )));
    }
    let a = a0.scale(&s);
    let phi = RationalFunction::new(a.clone(), b0.clone())?;
    // degree drop means shared roots: parasitic
    if phi.num() != &a || phi.den() != b0 {
        return Ok(Err(Assembly::ParasiticOrSpurious(
            "components share roots (degree drop)".into(),
        )));
    }
    let m = BelyiMap::analyze(&phi)?;
    Ok(Ok((m, s, t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParasiticClass {
    Proper,
    ParasiticConsistent,
    Rejected,
}

/// Lemma-style parasitic test on a solved sextuple: G = gcd of the fiber
/// products per the polynomial identity P^l U = Q^m V + R^k W, F the radical
/// of UVW, H = PQRF/G; classify by whether H is a polynomial with simple
/// roots and whether each shared root divides one product in higher order.
#[allow(clippy::too_many_arguments)]
pub fn parasitic_test(
    p: &UniPoly<K>,
    q: &UniPoly<K>,
    r: &UniPoly<K>,
    u: &UniPoly<K>,
    v: &UniPoly<K>,
    w: &UniPoly<K>,
    k: u32,
    l: u32,
    m: u32,
) -> Result<ParasiticClass> {
    let one = UniPoly::constant(p.coeffs().first().map(|c| c.one_like()).unwrap_or_else(|| {
        q.coeffs().first().expect("nonzero polynomial").one_like()
    }));
    let inputs = [p, q, r, u, v, w];
    let basis = coprime_basis(&inputs)?;
    // exponent of each input on each basis element
    let ords: Vec<Vec<u32>> = inputs
        .iter()
        .map(|f| basis.iter().map(|g| ord_of(f, g)).collect())
        .collect();
    let _ = one;
    let nb = basis.len();
    let mut consistent = true;
    let mut any_shared = false;
    for i in 0..nb {
        let o_pl = l * ords[0][i] + ords[3][i]; // P^l U
        let o_qm = m * ords[1][i] + ords[4][i]; // Q^m V
        let o_rk = k * ords[2][i] + ords[5][i]; // R^k W
        let g_ord = o_pl.min(o_qm).min(o_rk);
        // radical F of UVW contributes 1 when any of U,V,W has the root
        let f_ord = u32::from(ords[3][i] + ords[4][i] + ords[5][i] > 0);
        let h_ord_signed =
            ords[0][i] as i64 + ords[1][i] as i64 + ords[2][i] as i64 + f_ord as i64
                - g_ord as i64;
        if g_ord > 0 {
            any_shared = true;
        }
        // H is a polynomial with simple roots
        if h_ord_signed < 0 || h_ord_signed > 1 {
            consistent = false;
        }
        // a root of G is a root of H iff the orders are not all equal
        if g_ord > 0 {
            let all_equal = o_pl == o_qm && o_qm == o_rk;
            let in_h = h_ord_signed >= 1;
            if all_equal == in_h {
                consistent = false;
            }
        }
    }
    if !any_shared {
        return Ok(ParasiticClass::Proper);
    }
    Ok(if consistent {
        ParasiticClass::ParasiticConsistent
    } else {
        ParasiticClass::Rejected
    })
}

/// Pairwise-coprime squarefree monic polynomials spanning the inputs.
pub fn coprime_basis(polys: &[&UniPoly<K>]) -> Result<Vec<UniPoly<K>>> {
    let mut basis: Vec<UniPoly<K>> = Vec::new();
    for f in polys {
        if f.is_constant() || f.is_zero() {
            continue;
        }
        let mut f = f.squarefree_part()?;
        let mut i = 0;
        while i < basis.len() && !f.is_constant() {
            let g = f.gcd(&basis[i])?;
            if g.deg() > 0 {
                let s = basis[i].exact_div(&g).expect("gcd divides").monic()?;
                if s.deg() > 0 {
                    basis[i] = g.clone();
                    basis.push(s);
                } else {
                    basis[i] = g.clone();
                }
                f = f.exact_div(&g).expect("gcd divides").monic()?;
            }
            i += 1;
        }
        if f.deg() > 0 {
            basis.push(f);
        }
    }
    basis.sort_by_key(|g| (g.deg(), format!("{}", g)));
    Ok(basis)
}

fn ord_of(f: &UniPoly<K>, g: &UniPoly<K>) -> u32 {
    if f.is_constant() {
        return 0;
    }
    let mut e = 0u32;
    let mut cur = f.clone();
    while let Some(q) = cur.exact_div(g) {
        cur = q;
        e += 1;
    }
    e
}

/// Multiset of root multiplicities together with the infinity order
/// reproduces the pattern; exposed for the end-to-end soundness tests.
pub fn pattern_matches(map: &BelyiMap, expected: &BranchingPattern) -> bool {
    &map.pattern == expected
}

/// Predicted t-degree of the discriminant: sum over fibers 0 and 1 of
/// (d - n_j), the branch-point count with multiplicities reduced by one.
pub fn predicted_disc_degree(p: &BranchingPattern) -> usize {
    let d = p.degree() as usize;
    (d - p.points(Fiber::Zero)) + (d - p.points(Fiber::One))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::numberfield::NumberField;
    use exact_algebra::parse::parse_ratfunc;

    #[test]
    fn x_squared_is_belyi() {
        let q = NumberField::rationals();
        let phi = parse_ratfunc(&q, "x^2").unwrap();
        let cert = is_belyi(&phi).unwrap();
        assert!(cert.belyi);
        assert_eq!(
            branching_pattern(&phi).unwrap(),
            BranchingPattern::parse("2=1+1=2").unwrap()
        );
    }

    #[test]
    fn degree6_is_belyi() {
        let q = NumberField::rationals();
        let phi = parse_ratfunc(&q, "4*(x^2-x+1)^3/(27*x^2*(x-1)^2)").unwrap();
        let cert = is_belyi(&phi).unwrap();
        assert!(cert.belyi, "{:?}", cert);
        let pat = branching_pattern(&phi).unwrap();
        assert_eq!(pat, BranchingPattern::parse("3+3=2+2+2=2+2+2").unwrap());
        assert_eq!(cert.disc_degree, predicted_disc_degree(&pat));
    }

    #[test]
    fn cubic_with_free_critical_values_is_not_belyi() {
        // x^3 - x has critical values off {0,1,inf}
        let q = NumberField::rationals();
        let phi = parse_ratfunc(&q, "x^3 - x").unwrap();
        let cert = is_belyi(&phi).unwrap();
        assert!(!cert.belyi);
    }

    #[test]
    fn assemble_x_squared() {
        // fiber products for x^2 up to constants: A0 = x^2, B0 = 1, C0 = x^2 - 1
        let q = NumberField::rationals();
        let x = UniPoly::new(vec![q.zero(), q.one()]);
        let a0 = x.mul(&x);
        let b0 = UniPoly::constant(q.one());
        let c0 = a0.sub(&b0);
        let (m, s, t) = assemble_from_products(&a0, &b0, &c0)
            .unwrap()
            .expect("assemblable");
        assert_eq!(m.pattern, BranchingPattern::parse("2=1+1=2").unwrap());
        assert_eq!(s, q.one());
        assert_eq!(t, q.one());
    }

    #[test]
    fn parasite_classification_generic_coprime() {
        let q = NumberField::rationals();
        let f = |s: &str| exact_algebra::parse::parse_nfpoly(&q, s).unwrap();
        // coprime generic triple: proper
        let cls = parasitic_test(
            &f("x^2+1"),
            &f("x-3"),
            &f("x^2+x+1"),
            &f("1"),
            &f("1"),
            &f("1"),
            2,
            3,
            7,
        )
        .unwrap();
        assert_eq!(cls, ParasiticClass::Proper);
    }
}
