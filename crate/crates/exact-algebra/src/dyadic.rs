//! Dyadic (binary fixed-slash) arithmetic and complex balls.
//!
//! A `Dyadic` is m * 2^e with exact ring operations; rounding is explicit.
//! `CBall` is a complex ball (dyadic center, dyadic radius) with outward
//! rounded radius propagation, used for certified root enclosures.

use crate::rational::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub m: Int,
    pub e: i64,
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.m, self.e)
    }
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            m: Int::zero(),
            e: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            m: Int::one(),
            e: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic {
            m: Int::from(n),
            e: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// 2^e.
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            m: Int::one(),
            e,
        }
    }

    /// Round a rational to `prec` fractional bits (to nearest).
    pub fn from_rat(q: &Rat, prec: u32) -> Self {
        let neg = q.is_negative();
        let q = q.abs();
        let n = q.numer() << prec;
        let d = q.denom().clone();
        // nearest integer to n/d
        let m = (&(&n << 1u32) + &d) / (&d << 1u32);
        Dyadic {
            m: if neg { -m } else { m },
            e: -(prec as i64),
        }
    }

    pub fn to_rat(&self) -> Rat {
        if self.e >= 0 {
            Rat::from_integer(&self.m * (Int::one() << self.e as u64))
        } else {
            Rat::new(self.m.clone(), Int::one() << ((-self.e) as u64))
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            m: -&self.m,
            e: self.e,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            m: self.m.abs(),
            e: self.e,
        }
    }

    fn align(a: &Self, b: &Self) -> (Int, Int, i64) {
        match a.e.cmp(&b.e) {
            Ordering::Equal => (a.m.clone(), b.m.clone(), a.e),
            Ordering::Less => {
                let shift = (b.e - a.e) as u64;
                (a.m.clone(), &b.m << shift, a.e)
            }
            Ordering::Greater => {
                let shift = (a.e - b.e) as u64;
                (&a.m << shift, b.m.clone(), b.e)
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (x, y, e) = Self::align(self, o);
        Dyadic { m: x + y, e }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Dyadic {
            m: &self.m * &o.m,
            e: self.e + o.e,
        }
    }

    /// Round to ~prec significant bits, toward nearest (ties toward +inf;
    /// BigInt shifts floor, so adding half works for both signs).
    pub fn round(&self, prec: u32) -> Self {
        let bits = self.m.bits() as i64;
        let excess = bits - prec as i64;
        if excess <= 0 {
            return self.clone();
        }
        let half = Int::one() << (excess - 1) as u64;
        let m = (&self.m + half) >> excess as u64;
        Dyadic {
            m,
            e: self.e + excess,
        }
    }

    /// Round upward in absolute value (for radii).
    pub fn round_up_abs(&self, prec: u32) -> Self {
        let bits = self.m.bits() as i64;
        let excess = bits - prec as i64;
        if excess <= 0 {
            return self.clone();
        }
        let mag: Int = (self.m.abs() >> excess as u64) + 1;
        Dyadic {
            m: if self.m.is_negative() { -mag } else { mag },
            e: self.e + excess,
        }
    }

    /// Approximate division to prec bits with |err| <= 2^{-prec-ish} ulp,
    /// returned together with a rigorous upper bound on the error absorbed
    /// into ball radii by callers.
    pub fn div_round(&self, o: &Self, prec: u32) -> Self {
        assert!(!o.is_zero());
        // scale numerator so quotient has ~prec bits
        let nb = self.m.bits() as i64;
        let db = o.m.bits() as i64;
        let shift = (prec as i64 + db - nb + 2).max(0) as u64;
        let num = &self.m << shift;
        let q = num / &o.m;
        Dyadic {
            m: q,
            e: self.e - o.e - shift as i64,
        }
    }

    pub fn cmp_abs(&self, o: &Self) -> Ordering {
        let (x, y, _) = Self::align(self, o);
        x.abs().cmp(&y.abs())
    }

    pub fn cmp_val(&self, o: &Self) -> Ordering {
        let (x, y, _) = Self::align(self, o);
        x.cmp(&y)
    }

    /// Upper bound for sqrt(self), self >= 0.
    pub fn sqrt_upper(&self, prec: u32) -> Self {
        assert!(!self.m.is_negative());
        if self.is_zero() {
            return Dyadic::zero();
        }
        // make exponent even
        let (m, e) = if self.e % 2 == 0 {
            (self.m.clone(), self.e)
        } else {
            (&self.m << 1u32, self.e - 1)
        };
        // scale for precision
        let extra = 2 * prec as u64;
        let scaled = m << extra;
        let r = scaled.sqrt() + 1;
        Dyadic {
            m: r,
            e: e / 2 - prec as i64,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.round(60);
        let m_f = r.m.to_string().parse::<f64>().unwrap_or(f64::NAN);
        m_f * 2f64.powi(r.e.clamp(-2000, 2000) as i32)
    }
}

/// Complex number with dyadic parts.
#[derive(Clone, Debug, PartialEq)]
pub struct CDy {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl CDy {
    pub fn zero() -> Self {
        CDy {
            re: Dyadic::zero(),
            im: Dyadic::zero(),
        }
    }
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        CDy { re, im }
    }
    pub fn from_rat(re: &Rat, im: &Rat, prec: u32) -> Self {
        CDy {
            re: Dyadic::from_rat(re, prec),
            im: Dyadic::from_rat(im, prec),
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        CDy {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        CDy {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }
    pub fn neg(&self) -> Self {
        CDy {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        CDy {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    pub fn norm2(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
    /// Approximate complex division at the given precision.
    pub fn div_round(&self, o: &Self, prec: u32) -> Self {
        let n2 = o.norm2();
        let conj = CDy {
            re: o.re.clone(),
            im: o.im.neg(),
        };
        let p = self.mul(&conj);
        CDy {
            re: p.re.div_round(&n2, prec),
            im: p.im.div_round(&n2, prec),
        }
    }
    pub fn round(&self, prec: u32) -> Self {
        CDy {
            re: self.re.round(prec),
            im: self.im.round(prec),
        }
    }
    /// Rigorous upper bound of |self|.
    pub fn abs_upper(&self, prec: u32) -> Dyadic {
        self.norm2().sqrt_upper(prec)
    }
    pub fn dist_upper(&self, o: &Self, prec: u32) -> Dyadic {
        self.sub(o).abs_upper(prec)
    }
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

/// Reconstruct a rational with denominator <= bound from a dyadic
/// approximation with |x - p/q| < 1/(2 q bound): continued fractions plus
/// exact verification by the caller.
pub fn rat_reconstruct(x: &Dyadic, den_bound: &Int) -> Option<Rat> {
    let q = x.to_rat();
    let mut a = q.numer().clone();
    let mut b = q.denom().clone();
    // continued fraction of a/b
    let mut p0 = Int::zero();
    let mut p1 = Int::one();
    let mut q0 = Int::one();
    let mut q1 = Int::zero();
    loop {
        if b.is_zero() {
            break;
        }
        let t = &a / &b;
        let r = &a - &t * &b;
        let p2 = &t * &p1 + &p0;
        let q2 = &t * &q1 + &q0;
        if &q2 > den_bound {
            break;
        }
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        a = b;
        b = r;
    }
    if q1.is_zero() {
        return None;
    }
    let cand = Rat::new(p1, q1);
    let err = (&cand - q).abs();
    let scale = Rat::new(Int::one(), den_bound * den_bound * Int::from(4));
    if err <= scale {
        Some(cand)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn round_trip_rat() {
        let q = rat(-7, 3);
        let d = Dyadic::from_rat(&q, 80);
        let back = d.to_rat();
        assert!((back - q).abs() < rat(1, 1 << 30));
    }

    #[test]
    fn sqrt_upper_bound() {
        let two = Dyadic::from_int(2);
        let s = two.sqrt_upper(60);
        let s2 = s.mul(&s);
        assert!(s2.cmp_val(&two) != Ordering::Less);
        assert!(s.to_f64() < 1.41422);
    }

    #[test]
    fn reconstruct() {
        let q = rat(22, 7);
        let d = Dyadic::from_rat(&q, 120);
        let r = rat_reconstruct(&d, &Int::from(1000)).unwrap();
        assert_eq!(r, q);
    }
}
