//! Arbitrary-precision rationals and small helpers on them.
//!
//! The coefficient domain for everything is `Rat = BigRational`, which keeps
//! the reduced-fraction invariant (gcd(|num|, den) = 1, den > 0) internally.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// `a/b` as a rational; panics if `b = 0`.
pub fn rat(a: i64, b: i64) -> Rat {
    Rat::new(BigInt::from(a), BigInt::from(b))
}

pub fn rat_int(a: i64) -> Rat {
    Rat::from_integer(BigInt::from(a))
}

pub fn rat_pow(q: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(q.clone(), e as usize)
    } else {
        num_traits::pow::pow(q.clone(), (-e) as usize).recip()
    }
}

/// Exact integer square root if `n` is a perfect square.
pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(Int::zero());
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root if `q` is a square in Q.
pub fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

/// Greatest common divisor of a list of rationals:
/// gcd of numerators over lcm of denominators. gcd(∅) = 0.
pub fn rat_content(vals: &[Rat]) -> Rat {
    let mut num = Int::zero();
    let mut den = Int::one();
    for v in vals {
        if v.is_zero() {
            continue;
        }
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Rat::zero()
    } else {
        Rat::new(num, den)
    }
}

/// Trial-division factorization. Returns prime → exponent pairs, ascending.
/// Intended for the desk-scale integers of conic coefficients; errors out
/// (returns None) if an unfactored part above `limit`² remains.
pub fn trial_factor(n: &Int, limit: u64) -> Option<Vec<(Int, u32)>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Some(vec![]);
    }
    let mut out: Vec<(Int, u32)> = Vec::new();
    let push = |p: Int, e: u32, out: &mut Vec<(Int, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e2 = 0u32;
    while n.is_even() {
        n /= 2;
        e2 += 1;
    }
    push(Int::from(2), e2, &mut out);
    let mut p = Int::from(3);
    let lim = Int::from(limit);
    while &(&p * &p) <= &n {
        if p > lim {
            return None;
        }
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        push(p.clone(), e, &mut out);
        p += 2;
    }
    if n > Int::one() {
        push(n, 1, &mut out);
    }
    Some(out)
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(q: &Rat) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_exact() {
        assert_eq!(rat_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rat_sqrt_exact(&rat(-4, 1)), None);
    }

    #[test]
    fn content() {
        assert_eq!(rat_content(&[rat(4, 3), rat(2, 9)]), rat(2, 9));
        assert_eq!(rat_content(&[]), Rat::zero());
    }

    #[test]
    fn factor_small() {
        let f = trial_factor(&Int::from(360), 1000).unwrap();
        assert_eq!(
            f,
            vec![(Int::from(2), 3), (Int::from(3), 2), (Int::from(5), 1)]
        );
    }
}
