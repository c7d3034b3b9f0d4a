//! Simple number fields Q(xi) and their elements.
//!
//! A `NumberField` is Q[z]/(m) for a monic squarefree m, assumed irreducible.
//! Irreducibility is not verified up front: if inversion meets a zero
//! divisor, the discovered factor is reported in the error, as the dynamic
//! splitting machinery in `etale` expects.

use crate::error::{AlgebraError, Result};
use crate::rational::{rat_content, Rat};
use crate::ring::{Field, Ring};
use crate::unipoly::{qpoly_rat, UniPoly};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq)]
pub struct NumberField {
    generator_name: String,
    min_poly: UniPoly<Rat>,
    degree: usize,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q({})/({})",
            self.generator_name,
            crate::parse::print_unipoly(&self.min_poly, &self.generator_name)
        )
    }
}

impl NumberField {
    /// Q[z]/(min_poly); the polynomial must be monic of degree >= 1.
    pub fn new(generator_name: &str, min_poly: UniPoly<Rat>) -> Result<Arc<Self>> {
        let deg = min_poly
            .degree()
            .ok_or_else(|| AlgebraError::Domain("zero minimal polynomial".into()))?;
        if deg < 1 {
            return Err(AlgebraError::Domain("constant minimal polynomial".into()));
        }
        if !num_traits::One::is_one(min_poly.lc().unwrap()) {
            return Err(AlgebraError::Domain("minimal polynomial must be monic".into()));
        }
        let sf = min_poly.gcd(&min_poly.derivative())?;
        if !sf.is_constant() {
            return Err(AlgebraError::ZeroDivisor {
                factor: crate::parse::print_unipoly(&sf, generator_name),
            });
        }
        Ok(Arc::new(NumberField {
            generator_name: generator_name.to_string(),
            min_poly,
            degree: deg,
        }))
    }

    /// The rationals, represented as Q[z]/(z - 0) would be wasteful; instead a
    /// degree-1 field Q[z]/(z) whose elements are plain rationals.
    pub fn rationals() -> Arc<Self> {
        NumberField::new("xi", qpoly_rat(&[Rat::zero(), Rat::one()])).unwrap()
    }

    /// Q(sqrt(d)), z^2 - d.
    pub fn quadratic(d: &Rat) -> Result<Arc<Self>> {
        NumberField::new("xi", qpoly_rat(&[-d.clone(), Rat::zero(), Rat::one()]))
    }

    pub fn generator_name(&self) -> &str {
        &self.generator_name
    }

    pub fn min_poly(&self) -> &UniPoly<Rat> {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraicNumber {
        self.from_rat(&Rat::zero())
    }

    pub fn one(self: &Arc<Self>) -> AlgebraicNumber {
        self.from_rat(&Rat::one())
    }

    pub fn from_rat(self: &Arc<Self>, q: &Rat) -> AlgebraicNumber {
        let mut c = vec![Rat::zero(); self.degree];
        c[0] = q.clone();
        AlgebraicNumber {
            field: Arc::clone(self),
            coeffs: c,
        }
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> AlgebraicNumber {
        self.from_rat(&crate::rational::rat_int(n))
    }

    /// The residue class of the generator.
    pub fn generator(self: &Arc<Self>) -> AlgebraicNumber {
        if self.degree == 1 {
            // z = root of the degree-1 min poly
            let r = -self.min_poly.coeffs()[0].clone();
            return self.from_rat(&r);
        }
        let mut c = vec![Rat::zero(); self.degree];
        c[1] = Rat::one();
        AlgebraicNumber {
            field: Arc::clone(self),
            coeffs: c,
        }
    }

    /// Element from an arbitrary residue representative.
    pub fn element(self: &Arc<Self>, rep: &UniPoly<Rat>) -> AlgebraicNumber {
        let (_, r) = rep.div_rem(&self.min_poly).expect("monic modulus");
        let mut c = vec![Rat::zero(); self.degree];
        for (i, v) in r.coeffs().iter().enumerate() {
            c[i] = v.clone();
        }
        AlgebraicNumber {
            field: Arc::clone(self),
            coeffs: c,
        }
    }
}

/// Element of Q[xi]/(min_poly): a residue representative of degree < deg.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Arc<NumberField>,
    coeffs: Vec<Rat>,
}

impl AlgebraicNumber {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> UniPoly<Rat> {
        UniPoly::new(self.coeffs.clone())
    }

    /// The rational value if this element lies in Q.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.coeffs.iter().skip(1).all(|c| num_traits::Zero::is_zero(c)) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn reduce(field: &Arc<NumberField>, p: UniPoly<Rat>) -> AlgebraicNumber {
        field.element(&p)
    }

    /// Inversion distinguishing a zero argument from a zero divisor; the
    /// latter names the discovered factor of the minimal polynomial.
    pub fn try_inv(&self) -> Result<AlgebraicNumber> {
        if Ring::is_zero(self) {
            return Err(AlgebraError::DivisionByZero);
        }
        let rep = self.as_poly();
        let (g, s, _) = rep.xgcd(self.field.min_poly())?;
        if g.is_constant() {
            // g = 1 (monic): s * rep = 1 mod min_poly
            return Ok(Self::reduce(&self.field, s));
        }
        Err(AlgebraError::ZeroDivisor {
            factor: crate::parse::print_unipoly(&g, self.field.generator_name()),
        })
    }

    /// Minimal polynomial of this element over Q (via the multiplication
    /// matrix on the power basis; always the true minimal polynomial).
    pub fn min_poly_over_q(&self) -> UniPoly<Rat> {
        crate::linalg::min_poly_of_mult(self)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.as_ref() == other.field.as_ref() && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::parse::print_unipoly(&self.as_poly(), self.field.generator_name())
        )
    }
}

impl AlgebraicNumber {
    fn same_field(&self, other: &Self) -> &Arc<NumberField> {
        assert!(
            self.field.as_ref() == other.field.as_ref(),
            "elements of different number fields"
        );
        &self.field
    }
}

impl Ring for AlgebraicNumber {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        self.field.from_rat(q)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| num_traits::Zero::is_zero(c))
    }
    fn add(&self, o: &Self) -> Self {
        self.same_field(o);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg_ref())
    }
    fn neg_ref(&self) -> Self {
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        self.same_field(o);
        Self::reduce(&self.field, self.as_poly().mul(&o.as_poly()))
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        o.try_inv().ok().map(|i| self.mul(&i))
    }
    fn content_hint(vals: &[Self]) -> Rat {
        let flat: Vec<Rat> = vals.iter().flat_map(|v| v.coeffs.iter().cloned()).collect();
        let c = rat_content(&flat);
        if num_traits::Zero::is_zero(&c) {
            Rat::one()
        } else {
            c
        }
    }
    fn div_rat(&self, q: &Rat) -> Self {
        AlgebraicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c / q).collect(),
        }
    }
}

impl Field for AlgebraicNumber {
    fn inv(&self) -> Result<Self> {
        self.try_inv()
    }
}

/// Lift a rational polynomial into K[x].
pub fn lift_poly(field: &Arc<NumberField>, p: &UniPoly<Rat>) -> UniPoly<AlgebraicNumber> {
    UniPoly::new(p.coeffs().iter().map(|c| field.from_rat(c)).collect())
}

/// Push a K[x] polynomial down to Q[x] if all coefficients are rational.
pub fn lower_poly(p: &UniPoly<AlgebraicNumber>) -> Option<UniPoly<Rat>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        out.push(c.to_rat()?);
    }
    Some(UniPoly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::unipoly::{qpoly, qpoly_rat};

    fn cubic_field() -> Arc<NumberField> {
        // xi^3 + 2 xi^2 + 6 xi - 8, the field of the degree-15 example
        NumberField::new("xi", qpoly(&[-8, 6, 2, 1])).unwrap()
    }

    #[test]
    fn invert_one() {
        let k = cubic_field();
        assert_eq!(k.one().try_inv().unwrap(), k.one());
    }

    #[test]
    fn unit_one_minus_xi_invertible() {
        // units of the cubic field are generated by 1 - xi
        let k = cubic_field();
        let u = k.one().sub(&k.generator());
        let v = u.try_inv().unwrap();
        assert_eq!(u.mul(&v), k.one());
    }

    #[test]
    fn invert_generator_round_trip() {
        let k = cubic_field();
        let xi = k.generator();
        let r = xi.try_inv().unwrap();
        assert_eq!(xi.mul(&r), k.one());
        // xi * (xi^2 + 2 xi + 6) = 8, so xi^{-1} = (xi^2 + 2 xi + 6)/8
        let expect = k.element(&qpoly_rat(&[rat(3, 4), rat(1, 4), rat(1, 8)]));
        assert_eq!(r, expect);
    }

    #[test]
    fn zero_divisor_names_factor() {
        // reducible modulus z^2 - 1; z - 1 is a zero divisor
        let k = NumberField::new("xi", qpoly(&[-1, 0, 1])).unwrap();
        let z = k.generator().sub(&k.one());
        match z.try_inv() {
            Err(AlgebraError::ZeroDivisor { factor }) => {
                assert_eq!(factor, "xi - 1");
            }
            other => panic!("expected zero divisor, got {:?}", other),
        }
        assert_eq!(k.zero().try_inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn min_poly_of_element() {
        let k = NumberField::quadratic(&rat_int(2)).unwrap();
        let a = k.generator().add(&k.one()); // 1 + sqrt2: z^2 - 2z - 1
        assert_eq!(a.min_poly_over_q(), qpoly(&[-1, -2, 1]));
        let b = k.from_rat(&rat(3, 2));
        assert_eq!(b.min_poly_over_q(), qpoly_rat(&[rat(-3, 2), rat_int(1)]));
    }
}
