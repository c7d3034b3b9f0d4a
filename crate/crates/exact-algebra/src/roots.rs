//! Certified complex root enclosures.
//!
//! Durand–Kerner iteration at working precision produces approximations;
//! a posteriori Weierstrass disks D(z_i, d*|W_i|) are then computed with
//! rigorous outward rounding. If the disks are pairwise disjoint each
//! contains exactly one root, which is the certificate every caller checks.

use crate::dyadic::{CDy, Dyadic};
use crate::rational::Rat;

/// A complex polynomial at working precision: exact-dyadic coefficients
/// (rounded once from exact input by the caller, with the rounding error
/// kept at zero by choosing dyadic-representable inputs or folded into
/// `coeff_err`).
#[derive(Clone, Debug)]
pub struct CPoly {
    pub coeffs: Vec<CDy>,
    /// uniform upper bound for the coefficient rounding error
    pub coeff_err: Dyadic,
}

impl CPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: &CDy, prec: u32) -> CDy {
        let mut acc = CDy::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(c).round(prec + 32);
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let k = Dyadic::from_int(i as i64);
            out.push(CDy {
                re: c.re.mul(&k),
                im: c.im.mul(&k),
            });
        }
        CPoly {
            coeffs: out,
            coeff_err: self.coeff_err.clone(),
        }
    }
}

/// Certified enclosure of all roots: centers plus a common radius bound
/// per root; `certified` is true only when the Weierstrass disks are
/// pairwise disjoint.
#[derive(Clone, Debug)]
pub struct RootEnclosures {
    pub centers: Vec<CDy>,
    pub radii: Vec<Dyadic>,
    pub certified: bool,
}

fn mag_log2(z: &CDy) -> i64 {
    let m = |d: &Dyadic| {
        if d.is_zero() {
            i64::MIN / 4
        } else {
            d.m.bits() as i64 + d.e
        }
    };
    m(&z.re).max(m(&z.im))
}

/// Fujiwara-style upper bound (as a log2) on the root magnitudes.
fn root_bound_log2(p: &CPoly) -> i64 {
    let n = p.degree();
    let lc = mag_log2(&p.coeffs[n]);
    let mut bound = 0i64;
    for (i, c) in p.coeffs.iter().enumerate().take(n) {
        let ci = mag_log2(c);
        if ci <= i64::MIN / 8 {
            continue;
        }
        let b = (ci - lc + (n - i) as i64 - 1) / (n - i) as i64 + 2;
        bound = bound.max(b);
    }
    bound
}

fn initial_guesses(p: &CPoly, prec: u32) -> Vec<CDy> {
    let n = p.degree();
    let scale_log2 = root_bound_log2(p);
    // points on a slightly irrational spiral to break symmetry, scaled to
    // the root bound
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.41;
        let r = 0.3 + 0.8 * ((k % 7) as f64 + 1.0) / 7.0;
        let re = r * angle.cos();
        let im = r * angle.sin();
        let mut z = CDy::from_rat(
            &Rat::from_float(re).unwrap_or_else(|| Rat::from_integer(1.into())),
            &Rat::from_float(im).unwrap_or_else(|| Rat::from_integer(1.into())),
            prec,
        );
        z.re.e += scale_log2;
        z.im.e += scale_log2;
        out.push(z);
    }
    out
}

/// Durand–Kerner sweep from the given start points (or a fresh spiral).
pub fn durand_kerner(p: &CPoly, start: Option<Vec<CDy>>, prec: u32, max_iter: usize) -> Vec<CDy> {
    let n = p.degree();
    let lc = p.coeffs.last().unwrap().clone();
    let mut z = start.unwrap_or_else(|| initial_guesses(p, prec));
    assert_eq!(z.len(), n);
    let tol = Dyadic::pow2(-(prec as i64) + 6);
    for _ in 0..max_iter {
        let mut moved = Dyadic::zero();
        for i in 0..n {
            let fi = p.eval(&z[i], prec);
            let mut den = lc.clone();
            for j in 0..n {
                if j != i {
                    den = den.mul(&z[i].sub(&z[j])).round(prec + 32);
                }
            }
            if den.norm2().is_zero() {
                // coincident guesses; nudge
                z[i] = z[i].add(&CDy::new(Dyadic::pow2(-12), Dyadic::pow2(-13)));
                continue;
            }
            let w = fi.div_round(&den, prec + 32);
            z[i] = z[i].sub(&w).round(prec + 32);
            let m = w.abs_upper(32);
            if m.cmp_abs(&moved) == std::cmp::Ordering::Greater {
                moved = m;
            }
        }
        if moved.cmp_abs(&tol) == std::cmp::Ordering::Less {
            break;
        }
    }
    z
}

/// Weierstrass a-posteriori radii: r_i = n * |f(z_i)| / (|lc| * prod_{j!=i} |z_i - z_j|),
/// all bounds outward. Each disk D(z_i, r_i) contains a root; disjoint disks
/// isolate exactly one root each.
pub fn weierstrass_radii(p: &CPoly, z: &[CDy], prec: u32) -> Vec<Dyadic> {
    let n = p.degree();
    let lc = p.coeffs.last().unwrap();
    let lc_low = lower_abs(lc);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let fi_up = p.eval(&z[i], prec + 64).abs_upper(64).add(&p.coeff_err);
        let mut den_low = lc_low.clone();
        for j in 0..n {
            if j != i {
                den_low = den_low.mul(&lower_dist(&z[i], &z[j]));
            }
        }
        if den_low.is_zero() || den_low.m.sign() == num_bigint::Sign::Minus {
            out.push(Dyadic::pow2(4000)); // effectively infinite
            continue;
        }
        let raw = fi_up.div_round(&den_low, 64).abs();
        let r = raw
            .mul(&Dyadic::from_int(n as i64))
            .add(&Dyadic::pow2(raw.e + (raw.m.bits() as i64) - 60))
            .round_up_abs(48);
        out.push(r);
    }
    out
}

fn lower_abs(z: &CDy) -> Dyadic {
    // lower bound of |z|: sqrt upper of norm2 would overestimate, so bound
    // below via max(|re|,|im|)/2 + ... use |z| >= max(|re|, |im|)
    let a = z.re.abs();
    let b = z.im.abs();
    if a.cmp_abs(&b) == std::cmp::Ordering::Greater {
        a
    } else {
        b
    }
}

fn lower_dist(a: &CDy, b: &CDy) -> Dyadic {
    lower_abs(&a.sub(b))
}

/// Check pairwise disjointness of disks with a safety factor:
/// |z_i - z_j| > factor*(r_i + r_j).
pub fn disks_disjoint(z: &[CDy], r: &[Dyadic], factor: i64) -> bool {
    let n = z.len();
    for i in 0..n {
        for j in i + 1..n {
            let d = lower_dist(&z[i], &z[j]);
            let rr = r[i].add(&r[j]).mul(&Dyadic::from_int(factor));
            if d.cmp_abs(&rr) != std::cmp::Ordering::Greater {
                return false;
            }
        }
    }
    true
}

/// All roots with certification; retries at doubled precision up to `max_prec`.
pub fn certified_roots(
    mk: &dyn Fn(u32) -> CPoly,
    mut prec: u32,
    max_prec: u32,
) -> Option<RootEnclosures> {
    let mut start: Option<Vec<CDy>> = None;
    loop {
        let p = mk(prec);
        let z = durand_kerner(&p, start.clone(), prec, 300 + 30 * p.degree());
        let r = weierstrass_radii(&p, &z, prec);
        if disks_disjoint(&z, &r, 3) {
            return Some(RootEnclosures {
                centers: z,
                radii: r,
                certified: true,
            });
        }
        start = Some(z);
        if prec >= max_prec {
            return None;
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn qcpoly(coeffs: &[i64], prec: u32) -> CPoly {
        CPoly {
            coeffs: coeffs
                .iter()
                .map(|&c| CDy::from_rat(&rat_int(c), &rat_int(0), prec))
                .collect(),
            coeff_err: Dyadic::zero(),
        }
    }

    #[test]
    fn roots_of_x2_minus_2() {
        let enc = certified_roots(&|p| qcpoly(&[-2, 0, 1], p), 64, 512).unwrap();
        assert!(enc.certified);
        let mut vals: Vec<f64> = enc.centers.iter().map(|z| z.re.to_f64()).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + 1.414213562).abs() < 1e-6);
        assert!((vals[1] - 1.414213562).abs() < 1e-6);
    }

    #[test]
    fn roots_of_cubic_field_poly() {
        // xi^3+2xi^2+6xi-8 has one real root near 1.07 and two complex roots
        let enc = certified_roots(&|p| qcpoly(&[-8, 6, 2, 1], p), 64, 512).unwrap();
        assert!(enc.certified);
        let real_count = enc
            .centers
            .iter()
            .zip(&enc.radii)
            .filter(|(z, r)| z.im.abs().cmp_abs(r) != std::cmp::Ordering::Greater)
            .count();
        assert_eq!(real_count, 1);
    }
}
