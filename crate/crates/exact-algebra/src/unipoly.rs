//! Dense univariate polynomials over a coefficient ring.
//!
//! The zero polynomial has an empty coefficient vector; otherwise the
//! highest-index coefficient is nonzero. gcd and resultant run a
//! fraction-free subresultant PRS with content removal at each step.

use crate::error::{AlgebraError, Result};
use crate::rational::{rat_int, Rat};
use crate::ring::{Field, Ring};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![c.zero_like(); k + 1];
        v[k] = c;
        UniPoly { coeffs: v }
    }

    /// Monic `x - r`.
    pub fn x_minus(r: &F) -> Self {
        Self::new(vec![r.neg_ref(), r.one_like()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg 0 for constants and the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero-extended); needs a witness for the zero poly.
    pub fn coeff(&self, k: usize, witness: &F) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| witness.zero_like())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = o.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        if e == 0 {
            let one = self
                .coeffs
                .first()
                .map(|c| c.one_like())
                .expect("pow of zero polynomial needs a witness; use pow_with");
            return Self::constant(one);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                if c.is_zero() {
                    c.clone()
                } else {
                    c.mul(&c.from_rat_like(&rat_int(i as i64)))
                }
            })
            .collect();
        Self::new(v)
    }

    pub fn eval(&self, x: &F) -> F {
        if self.is_zero() {
            return x.zero_like();
        }
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitution p(q(x)) by Horner.
    pub fn compose(&self, q: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut acc = Self::constant(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(q).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `x^(deg) * p(1/x)` (coefficient reversal).
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// Exact division; `None` if the division leaves a remainder at any step.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.last().unwrap();
        let n = self.coeffs.len() - d.coeffs.len() + 1;
        let z = self.coeffs[0].zero_like();
        let mut q = vec![z; n];
        for k in (0..n).rev() {
            let top = rem[k + d.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(dl)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Pseudo-remainder: `lc(d)^(deg f - deg d + 1) * f mod d`, valid over a ring.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo_rem by zero");
        let mut r = self.clone();
        let dd = d.coeffs.len() - 1;
        let dl = d.coeffs.last().unwrap();
        if r.coeffs.len() < d.coeffs.len() {
            return r;
        }
        let steps = r.coeffs.len() - d.coeffs.len() + 1;
        for _ in 0..steps {
            if r.coeffs.len() < d.coeffs.len() {
                // degree already dropped; keep scaling so the exponent is exact
                r = r.scale(dl);
                continue;
            }
            let rd = r.coeffs.len() - 1;
            let top = r.coeffs.last().unwrap().clone();
            let mut v: Vec<F> = r.coeffs.iter().map(|c| c.mul(dl)).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = rd - dd + j;
                v[idx] = v[idx].sub(&top.mul(dc));
            }
            r = Self::new(v);
        }
        r
    }

    /// Remove the rational content (when the coefficient domain exposes one).
    fn normalized_content(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = F::content_hint(&self.coeffs);
        if num_traits::One::is_one(&c) {
            self.clone()
        } else {
            Self::new(self.coeffs.iter().map(|a| a.div_rat(&c)).collect())
        }
    }

    /// Greatest common divisor via a fraction-free PRS, with content removal
    /// each step. The result is normalized by `norm` (monic over a field).
    pub fn gcd_raw(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.normalized_content(), other.normalized_content())
        } else {
            (other.normalized_content(), self.normalized_content())
        };
        while !b.is_zero() {
            if b.is_constant() {
                return UniPoly::constant(b.coeffs[0].one_like());
            }
            let r = a.pseudo_rem(&b).normalized_content();
            a = b;
            b = r;
        }
        a
    }
}

impl<F: Field> UniPoly<F> {
    pub fn monic(&self) -> Result<Self> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(l) => {
                if l.is_one() {
                    return Ok(self.clone());
                }
                let inv = l.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Quotient and remainder over a field.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() || self.coeffs.len() < d.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let linv = d.lc().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len() - d.coeffs.len() + 1;
        let z = self.coeffs[0].zero_like();
        let mut q = vec![z; n];
        for k in (0..n).rev() {
            let top = rem[k + d.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&linv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.gcd_raw(other).monic()
    }

    /// Extended Euclid: returns (g, s, t) with `s*f + t*other = g`, g monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        let one = || -> Option<F> {
            self.coeffs
                .first()
                .or_else(|| other.coeffs.first())
                .map(|c| c.one_like())
        };
        let Some(one) = one() else {
            return Ok((Self::zero(), Self::zero(), Self::zero()));
        };
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Self::constant(one.clone());
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::constant(one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let linv = r0.lc().unwrap().inv()?;
        Ok((r0.scale(&linv), s0.scale(&linv), t0.scale(&linv)))
    }

    /// Squarefree part `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        let q = self.exact_div(&g).expect("gcd divides");
        q.monic()
    }

    /// Yun's squarefree decomposition: pairwise-coprime monic `g_i` with
    /// `f = lc(f) * prod g_i^{m_i}` and strictly increasing multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(vec![]);
        }
        let f = self.monic()?;
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0).expect("gcd divides").monic()?;
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.monic()?, i));
                }
                break;
            }
            let g = b.gcd(&d)?;
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g).expect("gcd divides").monic()?;
            c = d.exact_div(&g).expect("gcd divides");
            if b.is_constant() {
                break;
            }
            i += 1;
        }
        Ok(out)
    }
}

/// Resultant of (f, g) with the sign convention
/// `resultant(f, g) = lc(g)^{deg f} * prod_{g(b)=0} f(b)`,
/// so `resultant(x - a, x - b) = b - a`.
pub fn resultant<F: Ring>(f: &UniPoly<F>, g: &UniPoly<F>) -> F {
    let witness = f
        .coeffs()
        .iter()
        .chain(g.coeffs())
        .find(|c| !c.is_zero())
        .cloned()
        .expect("resultant of two zero polynomials");
    let zero = witness.zero_like();
    if f.is_zero() || g.is_zero() {
        return zero;
    }
    if f.is_constant() {
        return f.coeffs()[0].pow_u(g.deg());
    }
    if g.is_constant() {
        return g.coeffs()[0].pow_u(f.deg());
    }
    // Standard subresultant resultant of (f, g), then flip to the convention.
    let std = subresultant_resultant(f, g);
    let m = f.deg();
    let n = g.deg();
    if (m * n) % 2 == 1 {
        std.neg_ref()
    } else {
        std
    }
}

/// Textbook Res(f, g) = lc(f)^{deg g} prod f(a)=0 g(a), via subresultant PRS.
fn subresultant_resultant<F: Ring>(f: &UniPoly<F>, g: &UniPoly<F>) -> F {
    let one = f
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial")
        .one_like();
    let (a0, b0, flip) = if f.deg() >= g.deg() {
        (f.clone(), g.clone(), false)
    } else {
        (g.clone(), f.clone(), (f.deg() * g.deg()) % 2 == 1)
    };
    let mut s = if flip { one.neg_ref() } else { one.clone() };
    let mut a = a0;
    let mut b = b0;
    let mut g_ = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg_ref();
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return a.coeffs()[0].zero_like();
        }
        let denom = g_.mul(&h.pow_u(delta));
        let next = UniPoly::new(
            r.coeffs()
                .iter()
                .map(|c| c.exact_div(&denom).expect("subresultant divisibility"))
                .collect::<Vec<_>>(),
        );
        a = b;
        b = next;
        g_ = a.lc().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g_.pow_u(delta)
                .exact_div(&h.pow_u(delta - 1))
                .expect("subresultant h update")
        };
        if b.deg() == 0 {
            let da = a.deg();
            // res = s * lc(b)^{deg a} / h^{deg a - 1}
            let num = b.coeffs()[0].pow_u(da);
            let den = h.pow_u(da.saturating_sub(1));
            let q = num.exact_div(&den).expect("subresultant final division");
            return s.mul(&q);
        }
    }
}

/// Sylvester-matrix resultant by fraction-free elimination. Independent
/// route used as an oracle against the PRS implementation; same sign
/// convention as `resultant`.
pub fn sylvester_resultant<F: Ring>(f: &UniPoly<F>, g: &UniPoly<F>) -> F {
    let witness = f
        .coeffs()
        .iter()
        .chain(g.coeffs())
        .find(|c| !c.is_zero())
        .cloned()
        .expect("resultant of two zero polynomials");
    if f.is_zero() || g.is_zero() {
        return witness.zero_like();
    }
    let m = f.deg();
    let n = g.deg();
    if m == 0 {
        return f.coeffs()[0].pow_u(n);
    }
    if n == 0 {
        return g.coeffs()[0].pow_u(m);
    }
    let size = m + n;
    let zero = witness.zero_like();
    let mut mat = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let det = bareiss_det(mat, &witness);
    if (m * n) % 2 == 1 {
        det.neg_ref()
    } else {
        det
    }
}

fn bareiss_det<F: Ring>(mut m: Vec<Vec<F>>, witness: &F) -> F {
    let n = m.len();
    if n == 0 {
        return witness.one_like();
    }
    let mut sign = false;
    let mut prev = witness.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return witness.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev).expect("bareiss divisibility");
            }
            m[i][k] = witness.zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg_ref()
    } else {
        d
    }
}

/// Discriminant: `(-1)^(n(n-1)/2) * resultant(f, f') / lc(f)`.
pub fn discriminant<F: Ring>(f: &UniPoly<F>) -> F {
    let n = f.deg();
    assert!(n >= 1, "discriminant needs degree >= 1");
    if n == 1 {
        return f.lc().unwrap().one_like();
    }
    let res = resultant(f, &f.derivative());
    // resultant(f, f') = (-1)^{n(n-1)} Res_std(f, f') and n(n-1) is even,
    // so the convention flip cancels here.
    let lc = f.lc().unwrap();
    let q = res.exact_div(lc).expect("lc divides resultant(f, f')");
    if (n * (n - 1) / 2) % 2 == 1 {
        q.neg_ref()
    } else {
        q
    }
}

impl<F: Ring> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Ring> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::print_unipoly(self, "x"))
    }
}

/// Polynomials over a ring form a ring; this powers the nested PRS used by
/// the t-discriminant in the Belyi criterion.
impl<F: Ring> Ring for UniPoly<F> {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn one_like(&self) -> Self {
        let w = self
            .coeffs
            .first()
            .expect("one_like needs a nonzero witness polynomial");
        UniPoly::constant(w.one_like())
    }
    fn from_rat_like(&self, q: &Rat) -> Self {
        let w = self
            .coeffs
            .first()
            .expect("from_rat_like needs a nonzero witness polynomial");
        UniPoly::constant(w.from_rat_like(q))
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        UniPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UniPoly::sub(self, o)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul(&self, o: &Self) -> Self {
        UniPoly::mul(self, o)
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        UniPoly::exact_div(self, o)
    }
    fn content_hint(vals: &[Self]) -> Rat {
        let flat: Vec<F> = vals.iter().flat_map(|p| p.coeffs.iter().cloned()).collect();
        F::content_hint(&flat)
    }
    fn div_rat(&self, q: &Rat) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.div_rat(q)).collect())
    }
}

/// Convenience constructors over Q.
pub fn qpoly(coeffs: &[i64]) -> UniPoly<Rat> {
    UniPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
}

pub fn qpoly_rat(coeffs: &[Rat]) -> UniPoly<Rat> {
    UniPoly::new(coeffs.to_vec())
}

pub fn qx() -> UniPoly<Rat> {
    qpoly(&[0, 1])
}

pub fn qone() -> UniPoly<Rat> {
    qpoly(&[1])
}

impl UniPoly<Rat> {
    /// Primitive integer form: clears denominators and integer content,
    /// keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> UniPoly<Rat> {
        if self.is_zero() {
            return self.clone();
        }
        let c = Rat::content_hint(self.coeffs());
        let p = self.div_rat(&c);
        if p.lc().map(|l| l < &Rat::zero()).unwrap_or(false) {
            p.neg()
        } else {
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn gcd_linear_factor() {
        // gcd(x^2-1, x-1) = x-1
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[-1, 1]);
        assert_eq!(f.gcd(&g).unwrap(), qpoly(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = qpoly(&[2, 0, 4]);
        let g = UniPoly::zero();
        assert_eq!(f.gcd(&g).unwrap(), qpoly_rat(&[rat(1, 2), rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn gcd_power_factor() {
        // gcd((x^2+5x-5)^4 (x-2), (x^2+5x-5)^2) = (x^2+5x-5)^2,
        // verified by exact polynomial division.
        let base = qpoly(&[-5, 5, 1]);
        let f = base.pow(4).mul(&qpoly(&[-2, 1]));
        let g = base.pow(2);
        let d = f.gcd(&g).unwrap();
        assert_eq!(d, base.pow(2));
        assert!(d.divides(&f) && d.divides(&g));
    }

    #[test]
    fn squarefree_part_examples() {
        // x^2(x-1) -> x(x-1)
        let f = qpoly(&[0, 0, 1]).mul(&qpoly(&[-1, 1]));
        assert_eq!(f.squarefree_part().unwrap(), qpoly(&[0, 1]).mul(&qpoly(&[-1, 1])));
        // squarefree input -> monic(f)
        let g = qpoly(&[2, 0, 2]);
        assert_eq!(g.squarefree_part().unwrap(), qpoly(&[1, 0, 1]));
        // (x^2+5x-5)^4 -> x^2+5x-5; result * gcd(f, f') has the roots of f
        let base = qpoly(&[-5, 5, 1]);
        let f = base.pow(4);
        let r = f.squarefree_part().unwrap();
        assert_eq!(r, base);
        let g = f.gcd(&f.derivative()).unwrap();
        assert!(r.mul(&g).divides(&f.mul(&r)));
        assert!(f.exact_div(&r.mul(&g)).unwrap().is_constant());
        assert!(UniPoly::gcd(&r, &r.derivative()).unwrap().is_constant());
        assert_eq!(AlgebraError::ZeroPolynomial, UniPoly::<Rat>::zero().squarefree_part().unwrap_err());
    }

    #[test]
    fn squarefree_decomposition_examples() {
        // x^3 (x-1) -> [(x-1, 1), (x, 3)]
        let f = qpoly(&[0, 0, 0, 1]).mul(&qpoly(&[-1, 1]));
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(qpoly(&[-1, 1]), 1), (qpoly(&[0, 1]), 3)]);
        // squarefree f -> [(monic f, 1)]
        let g = qpoly(&[2, 2, 4]);
        let d = g.squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(qpoly_rat(&[rat(1, 2), rat(1, 2), rat(1, 1)]), 1)]);
        // reassembly: lc(f) * prod g_i^{m_i} = f
        let f = qpoly(&[3]).mul(&qpoly(&[1, 1]).pow(2)).mul(&qpoly(&[-2, 1]).pow(5));
        let d = f.squarefree_decomposition().unwrap();
        let mut acc = qpoly(&[3]);
        for (g, m) in &d {
            acc = acc.mul(&g.pow(*m));
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn resultant_conventions() {
        // resultant(x-a, x-b) = b-a with a=2, b=5
        let f = qpoly(&[-2, 1]);
        let g = qpoly(&[-5, 1]);
        assert_eq!(resultant(&f, &g), rat_int(3));
        assert_eq!(sylvester_resultant(&f, &g), rat_int(3));
        // discriminant(x^2+px+q) = p^2-4q with p=3, q=1
        let f = qpoly(&[1, 3, 1]);
        assert_eq!(discriminant(&f), rat_int(5));
        // discriminant(x^3-3a x-2b) = 108(a^3 - b^2) at a=2,b=1: 108*7 = 756
        let f = qpoly(&[-2, -6, 0, 1]);
        assert_eq!(discriminant(&f), rat_int(756));
    }

    #[test]
    fn resultant_zero_iff_common_factor() {
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[1, 1]).mul(&qpoly(&[7, 2]));
        assert!(Ring::is_zero(&resultant(&f, &g)));
        let h = qpoly(&[3, 1]).mul(&qpoly(&[7, 2]));
        assert!(!Ring::is_zero(&resultant(&f, &h)));
    }

    #[test]
    fn prs_matches_sylvester_random() {
        // deterministic pseudo-random smoke test of the dual resultant routes
        let mut seed = 1u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 11) as i64 - 5
        };
        for _ in 0..40 {
            let f = UniPoly::new((0..5).map(|_| rat_int(next())).collect::<Vec<_>>());
            let g = UniPoly::new((0..4).map(|_| rat_int(next())).collect::<Vec<_>>());
            if f.deg() == 0 || g.deg() == 0 || f.is_zero() || g.is_zero() {
                continue;
            }
            assert_eq!(resultant(&f, &g), sylvester_resultant(&f, &g));
        }
    }

    #[test]
    fn nested_ring_resultant() {
        // Res_x(x^2 - t, x - t) = t^2 - t as polynomials in t
        let t = qpoly(&[0, 1]);
        let one = qone();
        let f: UniPoly<UniPoly<Rat>> =
            UniPoly::new(vec![t.neg(), UniPoly::zero(), one.clone()]);
        let g: UniPoly<UniPoly<Rat>> = UniPoly::new(vec![t.neg(), one.clone()]);
        let r = resultant(&f, &g);
        assert_eq!(r, qpoly(&[0, -1, 1]));
    }
}
