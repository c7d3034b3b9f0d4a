//! Coefficient-domain traits.
//!
//! Polynomials are generic over `Ring`; gcd/resultant machinery only needs
//! exact division, so the nested case (polynomials over polynomials, used by
//! the t-discriminant) works through the same code path. `Field` adds
//! inversion, which for number-field residues may fail with a discovered
//! factor of the (announced) minimal polynomial.

use crate::error::{AlgebraError, Result};
use crate::rational::{rat_content, Rat};
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};

pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rat_like(&self, q: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact quotient, `None` if `o` does not divide `self` (or `o = 0`).
    fn exact_div(&self, o: &Self) -> Option<Self>;
    fn is_one(&self) -> bool {
        !self.is_zero() && self == &self.one_like()
    }
    fn pow_u(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    /// Rational content used for intermediate-expression control in PRS and
    /// Buchberger reduction; 1 means "no normalization available".
    fn content_hint(vals: &[Self]) -> Rat {
        let _ = vals;
        Rat::one()
    }
    fn div_rat(&self, q: &Rat) -> Self {
        self.mul(&self.from_rat_like(&q.recip()))
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn content_hint(vals: &[Self]) -> Rat {
        let c = rat_content(vals);
        if Zero::is_zero(&c) {
            Rat::one()
        } else {
            c
        }
    }
}

impl Field for Rat {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
