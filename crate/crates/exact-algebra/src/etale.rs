//! Field extensions by primitive elements: root adjunction, composita,
//! splitting fields of small polynomials, and exact root location inside a
//! given field (numeric candidates, exact verification).

use crate::embed::{complex_solve, embed_alg, embeddings, recognize_rat};
use crate::error::{AlgebraError, Result};
use crate::linalg::min_poly_of_map;
use crate::numberfield::{AlgebraicNumber, NumberField};
use crate::rational::{rat_int, Int, Rat};
use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Result of adjoining a root of `f` to a base field: the new field as a
/// simple extension, the image of the old generator, and the new root.
pub struct Extension {
    pub field: Arc<NumberField>,
    pub base_gen: AlgebraicNumber,
    pub root: AlgebraicNumber,
}

impl Extension {
    /// Map an element of the base field into the extension.
    pub fn lift(&self, a: &AlgebraicNumber) -> AlgebraicNumber {
        let mut acc = self.field.zero();
        for c in a.coeffs().iter().rev() {
            acc = acc.mul(&self.base_gen).add(&self.field.from_rat(c));
        }
        acc
    }

    /// Lift a polynomial coefficientwise.
    pub fn lift_poly(&self, p: &UniPoly<AlgebraicNumber>) -> UniPoly<AlgebraicNumber> {
        UniPoly::new(p.coeffs().iter().map(|c| self.lift(c)).collect())
    }
}

/// The trivial extension of a field by itself.
pub fn identity_extension(field: &Arc<NumberField>) -> Extension {
    Extension {
        field: Arc::clone(field),
        base_gen: field.generator(),
        root: field.zero(),
    }
}

/// Adjoin a root of `f` (monic, squarefree, degree >= 2, coefficients in the
/// base field) via a primitive element `t + c*xi`; the new minimal
/// polynomial is the Krylov minimal polynomial, retried over small `c` until
/// it has full degree and is squarefree.
pub fn adjoin_root(base: &Arc<NumberField>, f: &UniPoly<AlgebraicNumber>) -> Result<Extension> {
    let m = f
        .degree()
        .ok_or_else(|| AlgebraError::Domain("cannot adjoin root of zero".into()))?;
    if m < 1 {
        return Err(AlgebraError::Domain("cannot adjoin root of a constant".into()));
    }
    let f = f.monic()?;
    if m == 1 {
        // the root already lives in the base field
        return Ok(Extension {
            field: Arc::clone(base),
            base_gen: base.generator(),
            root: f.coeffs()[0].neg_ref(),
        });
    }
    let n = base.degree();
    let dim = n * m;
    // elements of base[t]/(f) as vectors over Q: index i + n*j for xi^i t^j
    let mult_xi = algebra_mult_gen(base, &f, true);
    let mult_t = algebra_mult_gen(base, &f, false);
    for attempt in 0..24 {
        let c: i64 = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 4, -4, 6, -6, 8, 9, 10, 12, 13, -13, 17, 19]
            [attempt];
        // theta = t + c*xi
        let step = |v: &[Rat]| -> Vec<Rat> {
            let tv = mult_t(v);
            let xv = mult_xi(v);
            tv.iter()
                .zip(&xv)
                .map(|(a, b)| a + &(b * &rat_int(c)))
                .collect()
        };
        let mut start = vec![Rat::zero(); dim];
        start[0] = Rat::one();
        let mut step_mut = step;
        let g = min_poly_of_map(dim, start.clone(), &mut step_mut);
        if g.deg() != dim {
            continue;
        }
        let gg = g.gcd(&g.derivative())?;
        if !gg.is_constant() {
            continue;
        }
        let newf = NumberField::new("xi", g)?;
        // Krylov matrix: columns theta^k (k < dim) as vectors
        let mut cols = Vec::with_capacity(dim);
        let mut cur = start.clone();
        for _ in 0..dim {
            cols.push(cur.clone());
            cur = step(&cur);
        }
        // solve V x = e_xi and V x = e_t
        let rows: Vec<Vec<Rat>> = (0..dim)
            .map(|r| (0..dim).map(|cidx| cols[cidx][r].clone()).collect())
            .collect();
        let mut e_xi = vec![Rat::zero(); dim];
        if n > 1 {
            e_xi[1] = Rat::one();
        } else {
            // base = Q: xi is the rational root of the degree-1 min poly
            let r = -base.min_poly().coeffs()[0].clone();
            e_xi[0] = r;
        }
        let mut e_t = vec![Rat::zero(); dim];
        e_t[n] = Rat::one();
        let sol_xi = crate::linalg::solve(&rows, &e_xi)
            .ok_or_else(|| AlgebraError::Domain("krylov solve failed".into()))?;
        let sol_t = crate::linalg::solve(&rows, &e_t)
            .ok_or_else(|| AlgebraError::Domain("krylov solve failed".into()))?;
        let base_gen = newf.element(&UniPoly::new(sol_xi));
        let root = newf.element(&UniPoly::new(sol_t));
        let ext = Extension {
            field: newf,
            base_gen,
            root,
        };
        // exact verification of both defining relations
        let mp = crate::numberfield::lift_poly(&ext.field, base.min_poly());
        if !mp.eval(&ext.base_gen).is_zero() {
            continue;
        }
        let fl = ext.lift_poly(&f);
        if !fl.eval(&ext.root).is_zero() {
            continue;
        }
        return Ok(ext);
    }
    Err(AlgebraError::Domain(
        "no primitive element found for root adjunction".into(),
    ))
}

/// Multiplication by xi (gen = true) or by t (gen = false) on base[t]/(f).
fn algebra_mult_gen<'a>(
    base: &'a Arc<NumberField>,
    f: &'a UniPoly<AlgebraicNumber>,
    by_xi: bool,
) -> impl Fn(&[Rat]) -> Vec<Rat> + 'a {
    let n = base.degree();
    let m = f.deg();
    move |v: &[Rat]| {
        // unpack into coefficients over the base field
        let mut tcoeffs: Vec<AlgebraicNumber> = (0..m)
            .map(|j| {
                let mut c = vec![Rat::zero(); n];
                for i in 0..n {
                    c[i] = v[i + n * j].clone();
                }
                base.element(&UniPoly::new(c))
            })
            .collect();
        if by_xi {
            let xi = base.generator();
            for tc in tcoeffs.iter_mut() {
                *tc = tc.mul(&xi);
            }
        } else {
            // multiply by t, reduce t^m by f (monic)
            let top = tcoeffs[m - 1].clone();
            for j in (1..m).rev() {
                tcoeffs[j] = tcoeffs[j - 1].clone();
            }
            tcoeffs[0] = base.zero();
            if !top.is_zero() {
                for j in 0..m {
                    let fj = f.coeffs()[j].clone();
                    tcoeffs[j] = tcoeffs[j].sub(&top.mul(&fj));
                }
            }
        }
        let mut out = vec![Rat::zero(); n * m];
        for (j, tc) in tcoeffs.iter().enumerate() {
            for (i, q) in tc.coeffs().iter().enumerate() {
                out[i + n * j] = q.clone();
            }
        }
        out
    }
}

/// Compositum of two fields: K1(xi1, xi2) as a simple extension, with the
/// images of both generators.
pub fn compositum(
    k1: &Arc<NumberField>,
    k2: &Arc<NumberField>,
) -> Result<(Arc<NumberField>, AlgebraicNumber, AlgebraicNumber)> {
    if k1.is_rationals() {
        return Ok((Arc::clone(k2), k2.from_rat(&(-k1.min_poly().coeffs()[0].clone())), k2.generator()));
    }
    if k2.is_rationals() {
        return Ok((Arc::clone(k1), k1.generator(), k1.from_rat(&(-k2.min_poly().coeffs()[0].clone()))));
    }
    let f2 = crate::numberfield::lift_poly(k1, k2.min_poly());
    // strip the factors of f2 with roots already in k1 so the adjunction
    // stays etale even when the fields overlap
    let known = roots_in_field(k1, &f2, 512)?;
    let mut rem = f2;
    for r in &known {
        let lin = UniPoly::x_minus(r);
        if let Some(q) = rem.exact_div(&lin) {
            rem = q;
        }
    }
    if rem.deg() == 0 {
        // k2 embeds into k1 entirely; take the first root as its generator
        let r = known
            .into_iter()
            .next()
            .ok_or_else(|| AlgebraError::Domain("compositum: lost roots".into()))?;
        return Ok((Arc::clone(k1), k1.generator(), r));
    }
    let ext = adjoin_root(k1, &rem)?;
    Ok((ext.field.clone(), ext.base_gen.clone(), ext.root.clone()))
}

/// Splitting field of a squarefree rational polynomial together with all of
/// its roots there. Degrees are desk-scale (the callers stay <= quartic).
pub fn splitting_field(f: &UniPoly<Rat>) -> Result<(Arc<NumberField>, Vec<AlgebraicNumber>)> {
    let mut field = NumberField::rationals();
    let mut roots: Vec<AlgebraicNumber> = Vec::new();
    let mut rem = crate::numberfield::lift_poly(&field, f);
    loop {
        // collect roots available in the current field
        let found = roots_in_field(&field, &rem, 1024)?;
        for r in found {
            let lin = UniPoly::x_minus(&r);
            if let Some(q) = rem.exact_div(&lin) {
                rem = q;
                roots.push(r);
            }
        }
        if rem.deg() == 0 {
            return Ok((field, roots));
        }
        let ext = adjoin_root(&field, &rem)?;
        // migrate everything into the bigger field
        roots = roots.iter().map(|r| ext.lift(r)).collect();
        rem = ext.lift_poly(&rem);
        let lin = UniPoly::x_minus(&ext.root);
        rem = rem
            .exact_div(&lin)
            .ok_or_else(|| AlgebraError::Domain("adjoined root does not divide".into()))?;
        roots.push(ext.root.clone());
        field = ext.field;
    }
}

/// Exact roots of `f` lying in the field K. Candidates come from matching
/// numeric roots across all embeddings and rationally reconstructing the
/// coordinates; every returned root is verified exactly. Precision escalates
/// to `max_prec`; at desk-scale heights this is effectively complete.
pub fn roots_in_field(
    field: &Arc<NumberField>,
    f: &UniPoly<AlgebraicNumber>,
    max_prec: u32,
) -> Result<Vec<AlgebraicNumber>> {
    let deg = match f.degree() {
        None | Some(0) => return Ok(vec![]),
        Some(d) => d,
    };
    // linear case is exact immediately
    if deg == 1 {
        let a = f.coeffs()[1].clone();
        let b = f.coeffs()[0].clone();
        return Ok(vec![b.neg_ref().div(&a)?]);
    }
    let n = field.degree();
    if (deg as f64).powi(n as i32) > 500_000.0 {
        return Err(AlgebraError::Unsupported(
            "root search space too large for this field degree".into(),
        ));
    }
    let mut prec: u32 = 128;
    loop {
        let embs = embeddings(field, prec)?;
        // numeric roots of f under each embedding
        let mut roots_per_emb: Vec<Vec<crate::dyadic::CDy>> = Vec::with_capacity(n);
        let mut ok = true;
        for e in &embs {
            let (cp, _err) = crate::embed::embed_poly(f, e, prec);
            match crate::roots::certified_roots(&|_p| cp.clone(), prec, prec) {
                Some(enc) => roots_per_emb.push(enc.centers),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let mut found: Vec<AlgebraicNumber> = Vec::new();
            // Vandermonde matrix rows: sigma_i(xi^j)
            let vand: Vec<Vec<crate::dyadic::CDy>> = embs
                .iter()
                .map(|e| {
                    (0..n)
                        .map(|j| {
                            let mut pw = field.one();
                            for _ in 0..j {
                                pw = pw.mul(&field.generator());
                            }
                            embed_alg(&pw, e, prec).c
                        })
                        .collect()
                })
                .collect();
            let den_bound = Int::one() << (prec / 3) as u32;
            let mut tuple = vec![0usize; n];
            let total = deg.pow(n as u32);
            'tuples: for t in 0..total {
                let mut tt = t;
                for slot in tuple.iter_mut() {
                    *slot = tt % deg;
                    tt /= deg;
                }
                let rhs: Vec<crate::dyadic::CDy> = (0..n)
                    .map(|i| roots_per_emb[i][tuple[i]].clone())
                    .collect();
                let Some(x) = complex_solve(vand.clone(), rhs, prec) else {
                    continue;
                };
                let mut coords = Vec::with_capacity(n);
                for z in &x {
                    match recognize_rat(z, &den_bound, prec) {
                        Some(q) => coords.push(q),
                        None => continue 'tuples,
                    }
                }
                let cand = field.element(&UniPoly::new(coords));
                if f.eval(&cand).is_zero() && !found.contains(&cand) {
                    found.push(cand);
                }
            }
            if (!found.is_empty() && prec >= 256) || prec >= max_prec {
                return Ok(found);
            }
        }
        if prec >= max_prec {
            return Ok(vec![]);
        }
        prec *= 2;
    }
}

/// Square root of an element inside its own field, if one exists there.
pub fn sqrt_in_field(a: &AlgebraicNumber) -> Result<Option<AlgebraicNumber>> {
    if a.is_zero() {
        return Ok(Some(a.clone()));
    }
    if let Some(q) = a.to_rat() {
        if let Some(s) = crate::rational::rat_sqrt_exact(&q) {
            return Ok(Some(a.from_rat_like(&s)));
        }
        if a.field().is_rationals() {
            return Ok(None);
        }
    }
    let f = UniPoly::new(vec![a.neg_ref(), a.field().zero(), a.field().one()]);
    let roots = roots_in_field(a.field(), &f, 1024)?;
    Ok(roots.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::qpoly;

    #[test]
    fn compositum_of_quadratics() {
        // Q(sqrt2) and Q(sqrt3): compositum of degree 4 containing both
        let k1 = NumberField::quadratic(&rat_int(2)).unwrap();
        let k2 = NumberField::quadratic(&rat_int(3)).unwrap();
        let (k, g1, g2) = compositum(&k1, &k2).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(g1.mul(&g1), k.from_int(2));
        assert_eq!(g2.mul(&g2), k.from_int(3));
    }

    #[test]
    fn splitting_cubic() {
        // x^3 - 2: splitting field degree 6, three roots
        let f = qpoly(&[-2, 0, 0, 1]);
        let (k, roots) = splitting_field(&f).unwrap();
        assert_eq!(k.degree(), 6);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert_eq!(r.mul(r).mul(r), k.from_int(2));
        }
    }

    #[test]
    fn roots_inside_field() {
        let k = NumberField::quadratic(&rat_int(5)).unwrap();
        // x^2 + 5x - 5 splits in Q(sqrt5): roots (-5 ± 3 sqrt5)/2
        let f = crate::numberfield::lift_poly(&k, &qpoly(&[-5, 5, 1]));
        let roots = roots_in_field(&k, &f, 1024).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(f.eval(r).is_zero());
        }
    }

    #[test]
    fn sqrt_inside_field() {
        let k = NumberField::quadratic(&rat_int(2)).unwrap();
        // sqrt(2) exists, sqrt(3) does not
        let s = sqrt_in_field(&k.from_int(2)).unwrap().unwrap();
        assert_eq!(s.mul(&s), k.from_int(2));
        assert!(sqrt_in_field(&k.from_int(3)).unwrap().is_none());
        // 3 + 2 sqrt2 = (1 + sqrt2)^2
        let a = k.from_int(3).add(&k.generator().mul(&k.from_int(2)));
        let s = sqrt_in_field(&a).unwrap().unwrap();
        assert_eq!(s.mul(&s), a);
    }
}
