//! Rational functions in one variable, kept reduced with monic denominator.

use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct RationalFunction<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RationalFunction<F> {
    /// num/den reduced to lowest terms, denominator normalized monic.
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            let one = den.lc().unwrap().one_like();
            return Ok(RationalFunction {
                num,
                den: UniPoly::constant(one),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc_inv = den.lc().unwrap().inv()?;
        Ok(RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    /// Construct without the gcd reduction; the caller asserts that num and
    /// den are coprime and den is monic and nonzero.
    pub fn from_coprime(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if den.lc().map(|l| !l.is_one()).unwrap_or(false) {
            return Err(AlgebraError::Domain("denominator must be monic".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(num: UniPoly<F>) -> Self {
        let one = num
            .coeffs()
            .first()
            .map(|c| c.one_like())
            .expect("zero polynomial needs explicit denominator; use new");
        RationalFunction {
            num,
            den: UniPoly::constant(one),
        }
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Degree as a map P1 -> P1: max(deg num, deg den).
    pub fn map_degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &F) -> Result<Self> {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn sub_const(&self, c: &F) -> Result<Self> {
        Self::new(self.num.sub(&self.den.scale(c)), self.den.clone())
    }

    /// Derivative (num' den - num den') / den^2, reduced.
    pub fn derivative(&self) -> Result<Self> {
        Self::new(
            self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.num.eval(x).div(&d)
    }

    /// Composition self(inner(x)) for a rational inner function.
    pub fn compose_rat(&self, inner_num: &UniPoly<F>, inner_den: &UniPoly<F>) -> Result<Self> {
        let d = self.num.deg().max(self.den.deg());
        let n = compose_homogeneous(&self.num, inner_num, inner_den, d);
        let den = compose_homogeneous(&self.den, inner_num, inner_den, d);
        Self::new(n, den)
    }

    /// Map coefficients into another field.
    pub fn map_coeffs<G: Field>(&self, f: &dyn Fn(&F) -> G) -> Result<RationalFunction<G>> {
        RationalFunction::new(
            UniPoly::new(self.num.coeffs().iter().map(|c| f(c)).collect()),
            UniPoly::new(self.den.coeffs().iter().map(|c| f(c)).collect()),
        )
    }
}

/// `den^d * p(num/den)` for d >= deg p: the homogenized composition
/// `sum_k c_k num^k den^{d-k}`.
pub fn compose_homogeneous<F: Ring>(
    p: &UniPoly<F>,
    num: &UniPoly<F>,
    den: &UniPoly<F>,
    d: usize,
) -> UniPoly<F> {
    if p.is_zero() {
        return UniPoly::zero();
    }
    assert!(d >= p.deg());
    let one = p.coeffs()[0].one_like();
    let mut den_pows = Vec::with_capacity(d + 1);
    let mut dp = UniPoly::constant(one.clone());
    for _ in 0..=d {
        den_pows.push(dp.clone());
        dp = dp.mul(den);
    }
    let mut out = UniPoly::zero();
    let mut num_pow = UniPoly::constant(one);
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&num_pow.scale(c).mul(&den_pows[d - k]));
        }
        if k < d {
            num_pow = num_pow.mul(num);
        }
    }
    out
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::print_ratfunc(self, "x"))
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::print_ratfunc(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rat;
    use crate::unipoly::{qpoly, qx};

    #[test]
    fn reduce_and_monic() {
        // (2x^2-2)/(4x-4) = (1/2 x + 1/2) / 1
        let r = RationalFunction::new(qpoly(&[-2, 0, 2]), qpoly(&[-4, 4])).unwrap();
        assert!(r.den().is_one());
        assert_eq!(r.num(), &qpoly(&[1, 1]).scale(&crate::rational::rat(1, 2)));
    }

    #[test]
    fn compose() {
        // phi = x^2, inner = (x+1)/(x-1): ((x+1)/(x-1))^2
        let phi = RationalFunction::<Rat>::from_poly(qx().mul(&qx()));
        let c = phi.compose_rat(&qpoly(&[1, 1]), &qpoly(&[-1, 1])).unwrap();
        assert_eq!(c.num(), &qpoly(&[1, 2, 1]));
        assert_eq!(c.den(), &qpoly(&[1, -2, 1]));
    }
}
