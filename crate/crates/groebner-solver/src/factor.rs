//! Factorization of univariate rational polynomials into irreducibles by
//! certified numeric root clustering.
//!
//! A monic rational polynomial is rescaled to a monic integer one, its roots
//! are enclosed in certified balls, and candidate factors are formed from
//! subsets of roots. For each subset the coefficient balls either pin down
//! unique integers (candidate, confirmed by exact division), provably
//! exclude all integers (subset refuted), or are too wide (precision is
//! escalated). Exhausting all subsets up to half the degree certifies
//! irreducibility. This keeps full Q[x]-factorization out of the exact
//! kernel: every accepted factor is verified by exact division.

use exact_algebra::dyadic::{CDy, Dyadic};
use exact_algebra::embed::Ball;
use exact_algebra::rational::{Int, Rat};
use exact_algebra::roots::{certified_roots, CPoly};
use exact_algebra::unipoly::UniPoly;
use exact_algebra::Ring;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Irreducible monic factors with multiplicities of a nonzero rational
/// polynomial (the leading coefficient is dropped).
pub fn factor_rational_poly(f: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
    let mut out = Vec::new();
    for (sf, m) in f.squarefree_decomposition().expect("nonzero polynomial") {
        for g in factor_squarefree(&sf) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), format!("{}", a.0), a.1).cmp(&(b.0.deg(), format!("{}", b.0), b.1))
    });
    out
}

/// Irreducible monic factors of a monic squarefree rational polynomial.
pub fn factor_squarefree(f: &UniPoly<Rat>) -> Vec<UniPoly<Rat>> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    assert!(n <= 40, "clustering factorization capped at degree 40");
    let c = scale_to_integer(f);
    let big = scale_poly(f, &c);
    let factors_int = factor_monic_integer(&big);
    factors_int.iter().map(|g| unscale_poly(g, &c)).collect()
}

fn scale_to_integer(f: &UniPoly<Rat>) -> Int {
    use num_integer::Integer;
    let mut c = Int::one();
    for a in f.coeffs() {
        c = c.lcm(a.denom());
    }
    c
}

/// c^n f(y/c) for monic f of degree n.
fn scale_poly(f: &UniPoly<Rat>, c: &Int) -> UniPoly<Rat> {
    let n = f.deg();
    let cr = Rat::from_integer(c.clone());
    let mut coeffs = Vec::with_capacity(n + 1);
    for (k, a) in f.coeffs().iter().enumerate() {
        let mut v = a.clone();
        for _ in 0..(n - k) {
            v = v * &cr;
        }
        coeffs.push(v);
    }
    UniPoly::new(coeffs)
}

/// c^{-m} G(c x) for monic G of degree m.
fn unscale_poly(g: &UniPoly<Rat>, c: &Int) -> UniPoly<Rat> {
    let m = g.deg();
    let cr = Rat::from_integer(c.clone());
    let mut coeffs = Vec::with_capacity(m + 1);
    for (k, a) in g.coeffs().iter().enumerate() {
        let mut v = a.clone();
        for _ in 0..(m - k) {
            v = v / &cr;
        }
        coeffs.push(v);
    }
    UniPoly::new(coeffs)
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn factor_monic_integer(f: &UniPoly<Rat>) -> Vec<UniPoly<Rat>> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let t0 = std::time::Instant::now();
    let mut prec: u32 = 192;
    loop {
        match try_factor_at_precision(f, prec) {
            Some(fs) => {
                eprintln!("factor: done deg {} at {} bits in {:?}", f.deg(), prec, t0.elapsed());
                return fs;
            }
            None => {
                eprintln!("factor: escalate from {} bits (deg {}, max coeff bits {})", prec, f.deg(),
                    f.coeffs().iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap());
                prec *= 2;
                assert!(prec <= 1 << 14, "factorization precision cap exceeded");
            }
        }
    }
}

pub enum Candidate {
    Integer(UniPoly<Rat>),
    ProvedNot,
    Unsure,
}

/// One factorization attempt; None means the precision could not decide.
fn try_factor_at_precision(f: &UniPoly<Rat>, prec: u32) -> Option<Vec<UniPoly<Rat>>> {
    let n = f.deg();
    let mk = |p: u32| CPoly {
        coeffs: f
            .coeffs()
            .iter()
            .map(|c| CDy::from_rat(c, &Rat::zero(), p))
            .collect(),
        coeff_err: Dyadic::zero(),
    };
    let enc = match certified_roots(&mk, prec, prec) {
        Some(e) => e,
        None => {
            eprintln!("factor: certified_roots failed at {} bits", prec);
            return None;
        }
    };
    let balls: Vec<Ball> = enc
        .centers
        .iter()
        .zip(&enc.radii)
        .map(|(c, r)| Ball {
            c: c.clone(),
            r: r.clone(),
        })
        .collect();
    for size in 1..=(n / 2) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            match candidate_factor(&balls, &combo, prec) {
                Candidate::Integer(g) => {
                    if let Some(rest) = f.exact_div(&g) {
                        let mut fs = vec![g];
                        fs.extend(factor_monic_integer(&rest));
                        fs.sort_by(|a, b| {
                            (a.deg(), format!("{}", a)).cmp(&(b.deg(), format!("{}", b)))
                        });
                        return Some(fs);
                    }
                    // integer coefficients but not a divisor: genuinely refuted
                }
                Candidate::ProvedNot => {}
                Candidate::Unsure => {
                    eprintln!("factor: unsure at combo {:?} prec {}", combo, prec);
                    return None;
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    // every subset of size <= n/2 refuted: irreducible
    Some(vec![f.clone()])
}

pub fn candidate_factor(balls: &[Ball], combo: &[usize], prec: u32) -> Candidate {
    // product of (x - r_i), leading coefficient first
    let one = Ball {
        c: CDy::new(Dyadic::one(), Dyadic::zero()),
        r: Dyadic::zero(),
    };
    let zero = Ball {
        c: CDy::zero(),
        r: Dyadic::zero(),
    };
    // ascending coefficients: coeffs[k] is the coefficient of x^k
    let mut coeffs = vec![one.clone()];
    for &i in combo {
        let r = &balls[i];
        let mut next = vec![zero.clone(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(r, prec));
        }
        coeffs = next;
    }
    let deg = combo.len();
    let quarter = Dyadic {
        m: Int::one(),
        e: -2,
    };
    let mut asc = vec![Rat::zero(); deg + 1];
    for (k, b) in coeffs.iter().enumerate() {
        // the imaginary part must contain 0
        let im_low = b.c.im.abs().sub(&b.r);
        if im_low.m.is_positive() {
            return Candidate::ProvedNot;
        }
        let z = match round_to_int(&b.c.re) {
            Some(z) => z,
            None => return Candidate::Unsure,
        };
        let dist = b
            .c
            .re
            .sub(&Dyadic {
                m: z.clone(),
                e: 0,
            })
            .abs();
        if dist.sub(&b.r).m.is_positive() {
            // the ball excludes its nearest (hence every) integer
            return Candidate::ProvedNot;
        }
        if b.r.cmp_abs(&quarter) != Ordering::Less {
            return Candidate::Unsure;
        }
        asc[k] = Rat::from_integer(z);
    }
    if !Ring::is_one(&asc[deg]) {
        return Candidate::ProvedNot;
    }
    Candidate::Integer(UniPoly::new(asc))
}

fn round_to_int(d: &Dyadic) -> Option<Int> {
    if d.e >= 0 {
        return Some(&d.m << d.e as u64);
    }
    let shift = -d.e;
    if shift > 1 << 20 {
        return None;
    }
    // nearest integer; BigInt >> floors, so +half is right for both signs
    let half = Int::one() << (shift - 1) as u64;
    Some((&d.m + half) >> shift as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::rational::rat;
    use exact_algebra::unipoly::qpoly;

    #[test]
    fn factor_quadratics() {
        let f = qpoly(&[-1, 0, 1]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs, vec![qpoly(&[1, 1]), qpoly(&[-1, 1])]);
        let f = qpoly(&[1, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn factor_mixed() {
        let f = qpoly(&[1, 1, 1])
            .mul(&qpoly(&[-2, 1]))
            .mul(&qpoly(&[-8, 6, 2, 1]));
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 3);
        let mut prod = qpoly(&[1]);
        for g in &fs {
            prod = prod.mul(g);
        }
        assert_eq!(prod, f);
        assert!(fs.contains(&qpoly(&[-2, 1])));
        assert!(fs.contains(&qpoly(&[1, 1, 1])));
        assert!(fs.contains(&qpoly(&[-8, 6, 2, 1])));
    }

    #[test]
    fn factor_with_rational_coeffs() {
        // (x - 1/2)(x^2 + 1/3)
        let f = UniPoly::new(vec![rat(-1, 6), rat(1, 3), rat(-1, 2), rat(1, 1)]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 2);
        let mut prod = qpoly(&[1]);
        for g in &fs {
            prod = prod.mul(g);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn multiplicities() {
        let f = qpoly(&[1, 1]).pow(3).mul(&qpoly(&[2, 1]));
        let fs = factor_rational_poly(&f);
        assert_eq!(fs, vec![(qpoly(&[1, 1]), 3), (qpoly(&[2, 1]), 1)]);
    }
}
