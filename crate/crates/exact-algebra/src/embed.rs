//! Complex embeddings of number fields, as certified balls.

use crate::dyadic::{rat_reconstruct, CDy, Dyadic};
use crate::error::{AlgebraError, Result};
use crate::numberfield::{AlgebraicNumber, NumberField};
use crate::rational::{Int, Rat};
use crate::roots::{certified_roots, CPoly};
use crate::unipoly::UniPoly;
use num_traits::Zero;
use std::cmp::Ordering;
use std::sync::Arc;

/// A complex ball: center and radius.
#[derive(Clone, Debug)]
pub struct Ball {
    pub c: CDy,
    pub r: Dyadic,
}

impl Ball {
    pub fn exact_rat(q: &Rat, prec: u32) -> Ball {
        // rounding error of from_rat is at most one ulp at 2^-prec
        Ball {
            c: CDy::from_rat(q, &Rat::zero(), prec),
            r: Dyadic::pow2(-(prec as i64) + 1),
        }
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball {
            c: self.c.add(&o.c),
            r: self.r.add(&o.r).round_up_abs(32),
        }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball {
            c: self.c.sub(&o.c),
            r: self.r.add(&o.r).round_up_abs(32),
        }
    }

    pub fn mul(&self, o: &Ball, prec: u32) -> Ball {
        let a = self.c.abs_upper(32);
        let b = o.c.abs_upper(32);
        let r = a
            .mul(&o.r)
            .add(&b.mul(&self.r))
            .add(&self.r.mul(&o.r))
            .add(&Dyadic::pow2(-(prec as i64) + 4).mul(&a.mul(&b).add(&Dyadic::one())))
            .round_up_abs(32);
        Ball {
            c: self.c.mul(&o.c).round(prec + 16),
            r,
        }
    }

    pub fn abs_upper(&self) -> Dyadic {
        self.c.abs_upper(32).add(&self.r).round_up_abs(32)
    }

    pub fn contains_zero_possibly(&self) -> bool {
        // |center| <= r (using the 1-norm lower bound on |center|)
        let low = {
            let a = self.c.re.abs();
            let b = self.c.im.abs();
            if a.cmp_abs(&b) == Ordering::Greater {
                a
            } else {
                b
            }
        };
        low.cmp_abs(&self.r) != Ordering::Greater
    }
}

/// All complex embeddings of a number field at the given precision,
/// canonically ordered: real embeddings first (ascending), then complex
/// ones by (re, im). Deterministic across precisions because enclosures
/// are certified disjoint before ordering.
pub fn embeddings(field: &Arc<NumberField>, prec: u32) -> Result<Vec<Ball>> {
    let mp = field.min_poly();
    if field.degree() == 1 {
        let r = -mp.coeffs()[0].clone();
        return Ok(vec![Ball::exact_rat(&r, prec)]);
    }
    let coeffs: Vec<Rat> = mp.coeffs().to_vec();
    let mk = |p: u32| -> CPoly {
        CPoly {
            coeffs: coeffs
                .iter()
                .map(|c| CDy::from_rat(c, &Rat::zero(), p))
                .collect(),
            coeff_err: Dyadic::pow2(-(p as i64) + 2),
        }
    };
    let enc = certified_roots(&mk, prec.max(64), 4096)
        .ok_or_else(|| AlgebraError::Domain("root certification failed".into()))?;
    let mut idx: Vec<usize> = (0..enc.centers.len()).collect();
    let is_real: Vec<bool> = (0..enc.centers.len())
        .map(|i| {
            enc.centers[i].im.abs().cmp_abs(&enc.radii[i]) != Ordering::Greater
        })
        .collect();
    idx.sort_by(|&a, &b| {
        match (is_real[a], is_real[b]) {
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        match enc.centers[a].re.cmp_val(&enc.centers[b].re) {
            Ordering::Equal => enc.centers[a].im.cmp_val(&enc.centers[b].im),
            o => o,
        }
    });
    Ok(idx
        .into_iter()
        .map(|i| Ball {
            c: enc.centers[i].clone(),
            r: enc.radii[i].clone(),
        })
        .collect())
}

/// Value of an algebraic number under an embedding (ball arithmetic).
pub fn embed_alg(a: &AlgebraicNumber, root: &Ball, prec: u32) -> Ball {
    let mut acc = Ball {
        c: CDy::zero(),
        r: Dyadic::zero(),
    };
    for c in a.coeffs().iter().rev() {
        acc = acc.mul(root, prec).add(&Ball::exact_rat(c, prec));
    }
    acc
}

/// Embed a K[x] polynomial coefficientwise.
pub fn embed_poly(p: &UniPoly<AlgebraicNumber>, root: &Ball, prec: u32) -> (CPoly, Dyadic) {
    let balls: Vec<Ball> = p.coeffs().iter().map(|c| embed_alg(c, root, prec)).collect();
    let mut err = Dyadic::zero();
    for b in &balls {
        if b.r.cmp_abs(&err) == Ordering::Greater {
            err = b.r.clone();
        }
    }
    (
        CPoly {
            coeffs: balls.iter().map(|b| b.c.clone()).collect(),
            coeff_err: err.clone(),
        },
        err,
    )
}

/// Solve a square complex linear system numerically (Gaussian elimination
/// with partial pivoting at working precision).
pub fn complex_solve(mut a: Vec<Vec<CDy>>, mut b: Vec<CDy>, prec: u32) -> Option<Vec<CDy>> {
    let n = a.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| {
            a[i][k]
                .norm2()
                .cmp_abs(&a[j][k].norm2())
        })?;
        if a[piv][k].norm2().is_zero() {
            return None;
        }
        a.swap(k, piv);
        b.swap(k, piv);
        for i in k + 1..n {
            if a[i][k].norm2().is_zero() {
                continue;
            }
            let f = a[i][k].div_round(&a[k][k], prec);
            for j in k..n {
                let t = f.mul(&a[k][j]).round(prec);
                a[i][j] = a[i][j].sub(&t).round(prec);
            }
            let t = f.mul(&b[k]).round(prec);
            b[i] = b[i].sub(&t).round(prec);
        }
    }
    let mut x = vec![CDy::zero(); n];
    for k in (0..n).rev() {
        let mut s = b[k].clone();
        for j in k + 1..n {
            s = s.sub(&a[k][j].mul(&x[j]).round(prec));
        }
        x[k] = s.div_round(&a[k][k], prec).round(prec);
    }
    Some(x)
}

/// Try to recognize a complex approximation as a rational (imaginary part
/// must be tiny); verification is the caller's job.
pub fn recognize_rat(z: &CDy, den_bound: &Int, prec: u32) -> Option<Rat> {
    let tol = Dyadic::pow2(-(prec as i64) / 2);
    if z.im.abs().cmp_abs(&tol) == Ordering::Greater {
        return None;
    }
    rat_reconstruct(&z.re, den_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::qpoly;

    #[test]
    fn embeddings_of_cubic() {
        let k = NumberField::new("xi", qpoly(&[-8, 6, 2, 1])).unwrap();
        let em = embeddings(&k, 128).unwrap();
        assert_eq!(em.len(), 3);
        // one real embedding near 1.069, listed first
        let x = em[0].c.re.to_f64();
        assert!(em[0].c.im.abs().cmp_abs(&em[0].r) != Ordering::Greater);
        assert!((x - 0.9203).abs() < 0.01, "real root ~0.9203, got {}", x);
    }

    #[test]
    fn embed_element() {
        let k = NumberField::quadratic(&crate::rational::rat_int(2)).unwrap();
        let em = embeddings(&k, 128).unwrap();
        // sqrt2 under the positive embedding
        let pos = &em[1];
        let v = embed_alg(&k.generator(), pos, 128);
        assert!((v.c.re.to_f64() - 1.41421356).abs() < 1e-6);
    }
}
