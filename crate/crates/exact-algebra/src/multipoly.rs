//! Sparse multivariate polynomials over a coefficient ring.
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so iteration and
//! printing are deterministic. A shared, ordered variable list is attached
//! to every polynomial; operations insist the lists match.

use crate::rational::{rat_int, Rat};
use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Mono = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: &[&str]) -> Arc<Self> {
        Arc::new(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
        })
    }
    pub fn from_names(names: Vec<String>) -> Arc<Self> {
        Arc::new(VarSet { names })
    }
    pub fn len(&self) -> usize {
        self.names.len()
    }
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Clone, PartialEq)]
pub struct MultiPoly<F> {
    vars: Arc<VarSet>,
    terms: BTreeMap<Mono, F>,
}

impl<F: Ring> MultiPoly<F> {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: F) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(vec![0; vars.len()], c);
        }
        MultiPoly {
            vars: Arc::clone(vars),
            terms: t,
        }
    }

    pub fn var(vars: &Arc<VarSet>, name: &str, one: F) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {}", name));
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        let mut t = BTreeMap::new();
        t.insert(m, one);
        MultiPoly {
            vars: Arc::clone(vars),
            terms: t,
        }
    }

    pub fn from_terms(vars: &Arc<VarSet>, terms: Vec<(Mono, F)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Mono, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<&F> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.iter().all(|&e| e == 0) {
                return Some(c);
            }
        }
        None
    }

    fn add_term(&mut self, m: Mono, c: F) {
        assert_eq!(m.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn same_vars(&self, o: &Self) {
        assert!(self.vars.as_ref() == o.vars.as_ref(), "variable sets differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_vars(o);
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let one = self
            .terms
            .values()
            .next()
            .map(|c| c.one_like())
            .unwrap_or_else(|| panic!("pow of zero multipoly"));
        let mut acc = Self::constant(&self.vars, one);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn mul_term(&self, m: &Mono, c: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            let mm: Mono = m1.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(mm, c1.mul(c));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[var]).max()
    }

    /// Partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm[var] -= 1;
            out.add_term(mm, c.mul(&c.from_rat_like(&rat_int(m[var] as i64))));
        }
        out
    }

    /// Collect coefficients with respect to `var`: entry k is the
    /// coefficient of var^k, a polynomial with var-exponent zero.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<Self> {
        let d = match self.degree_in(var) {
            None => return vec![],
            Some(d) => d as usize,
        };
        let mut out = vec![Self::zero(&self.vars); d + 1];
        for (m, c) in &self.terms {
            let k = m[var] as usize;
            let mut mm = m.clone();
            mm[var] = 0;
            out[k].add_term(mm, c.clone());
        }
        out
    }

    /// Substitute values for all variables.
    pub fn eval(&self, vals: &[F]) -> F {
        assert_eq!(vals.len(), self.vars.len());
        let witness = vals
            .first()
            .cloned()
            .or_else(|| self.terms.values().next().cloned());
        let Some(witness) = witness else {
            panic!("eval needs at least one variable or term");
        };
        let mut acc = witness.zero_like();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&vals[i].pow_u(e as usize));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute polynomials for all variables (into the same var set).
    pub fn subst(&self, vals: &[Self]) -> Self {
        assert_eq!(vals.len(), self.vars.len());
        let mut acc = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.vars, c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&vals[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Map into a univariate polynomial in variable `var`, with the other
    /// variables evaluated at `vals` (vals[var] is ignored).
    pub fn to_unipoly_in(&self, var: usize, vals: &[F]) -> UniPoly<F> {
        let witness = vals
            .first()
            .cloned()
            .or_else(|| self.terms.values().next().cloned())
            .expect("witness");
        let d = self.degree_in(var).map(|d| d as usize).unwrap_or(0);
        let mut coeffs = vec![witness.zero_like(); d + 1];
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if i != var && e > 0 {
                    t = t.mul(&vals[i].pow_u(e as usize));
                }
            }
            let k = m[var] as usize;
            coeffs[k] = coeffs[k].add(&t);
        }
        UniPoly::new(coeffs)
    }

    /// Weighted degree of a monomial under per-variable weights.
    pub fn weighted_degree(m: &Mono, weights: &[u32]) -> u64 {
        m.iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    /// All terms share the same weighted degree (the zero poly is homogeneous).
    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.keys().map(|m| Self::weighted_degree(m, weights));
        match it.next() {
            None => true,
            Some(d0) => it.all(|d| d == d0),
        }
    }

    /// Substitute a single variable by a constant, keeping the var set.
    pub fn subst_const(&self, var: usize, val: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m[var];
            let mut mm = m.clone();
            mm[var] = 0;
            let cc = if e > 0 {
                c.mul(&val.pow_u(e as usize))
            } else {
                c.clone()
            };
            out.add_term(mm, cc);
        }
        out
    }

    /// Rename/restrict to a different variable set; every variable with a
    /// nonzero exponent must exist in the target set.
    pub fn with_vars(&self, vars: &Arc<VarSet>) -> Self {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.index_of(n))
            .collect();
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            let mut mm = vec![0u32; vars.len()];
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let j = map[i].unwrap_or_else(|| {
                        panic!("variable {} missing in target set", self.vars.names()[i])
                    });
                    mm[j] = e;
                }
            }
            out.add_term(mm, c.clone());
        }
        out
    }
}

impl MultiPoly<Rat> {
    /// Divide by the rational content so coefficients are primitive integers
    /// with positive leading term under the grevlex order.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let vals: Vec<Rat> = self.terms.values().cloned().collect();
        let c = Rat::content_hint(&vals);
        let mut out = MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v / &c))
                .collect(),
        };
        // sign normalization on the grevlex-leading term
        let lead = out
            .terms
            .iter()
            .max_by(|a, b| grevlex_cmp(a.0, b.0))
            .map(|(_, v)| v.clone())
            .unwrap();
        if lead < Rat::from_integer(0.into()) {
            out = out.neg();
        }
        out
    }
}

/// Graded reverse lexicographic comparison of exponent vectors.
pub fn grevlex_cmp(a: &Mono, b: &Mono) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        std::cmp::Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match y.cmp(x) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

impl<F: Ring> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Ring> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_multipoly(self))
    }
}

/// Canonical printing: terms in descending grevlex order.
pub fn print_multipoly<F: Ring>(p: &MultiPoly<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Mono, &F)> = p.terms().iter().collect();
    terms.sort_by(|a, b| grevlex_cmp(b.0, a.0));
    let mut out = String::new();
    let mut first = true;
    for (m, c) in terms {
        let s = format!("{}", c);
        let (neg, mag) = if let Some(rest) = s.strip_prefix('-') {
            if !rest.contains(" + ") && !rest.contains(" - ") {
                (true, rest.to_string())
            } else {
                (true, format!("{}", c.neg_ref()))
            }
        } else {
            (false, s)
        };
        let needs_parens = mag.contains(" + ") || mag.contains(" - ");
        let mono = {
            let mut parts = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    parts.push(p.vars().names()[i].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", p.vars().names()[i], e));
                }
            }
            parts.join("*")
        };
        let body = if mono.is_empty() {
            if needs_parens {
                format!("({})", mag)
            } else {
                mag
            }
        } else if mag == "1" {
            mono
        } else if needs_parens {
            format!("({})*{}", mag, mono)
        } else {
            format!("{}*{}", mag, mono)
        };
        if first {
            if neg {
                out.push('-');
            }
            out.push_str(&body);
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

/// Parse an expression into a multivariate polynomial over a field.
pub fn parse_multipoly<F: Field>(
    vars: &Arc<VarSet>,
    one: &F,
    s: &str,
) -> crate::error::Result<MultiPoly<F>> {
    let e = crate::parse::parse_expr(s)?;
    eval_multipoly(vars, one, &e)
}

fn eval_multipoly<F: Field>(
    vars: &Arc<VarSet>,
    one: &F,
    e: &crate::parse::Expr,
) -> crate::error::Result<MultiPoly<F>> {
    use crate::parse::Expr;
    Ok(match e {
        Expr::Num(n) => MultiPoly::constant(vars, one.from_rat_like(&Rat::from_integer(n.clone()))),
        Expr::Var(v) => {
            if vars.index_of(v).is_some() {
                MultiPoly::var(vars, v, one.clone())
            } else {
                return Err(crate::error::AlgebraError::Parse(format!(
                    "unknown variable '{}'",
                    v
                )));
            }
        }
        Expr::Add(a, b) => eval_multipoly(vars, one, a)?.add(&eval_multipoly(vars, one, b)?),
        Expr::Sub(a, b) => eval_multipoly(vars, one, a)?.sub(&eval_multipoly(vars, one, b)?),
        Expr::Mul(a, b) => eval_multipoly(vars, one, a)?.mul(&eval_multipoly(vars, one, b)?),
        Expr::Div(a, b) => {
            let num = eval_multipoly(vars, one, a)?;
            let den = eval_multipoly(vars, one, b)?;
            match den.constant_value() {
                Some(c) => num.scale(&c.inv()?),
                None => {
                    return Err(crate::error::AlgebraError::Parse(
                        "division by a non-constant polynomial".into(),
                    ))
                }
            }
        }
        Expr::Pow(a, k) => eval_multipoly(vars, one, a)?.pow(*k as usize),
        Expr::Neg(a) => eval_multipoly(vars, one, a)?.neg(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn arithmetic_and_printing() {
        let vs = VarSet::new(&["x", "y"]);
        let one = Rat::one();
        let p = parse_multipoly(&vs, &one, "x^2*y - 2*y + 3").unwrap();
        assert_eq!(print_multipoly(&p), "x^2*y - 2*y + 3");
        let q = parse_multipoly(&vs, &one, &print_multipoly(&p)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn weighted_homogeneity() {
        let vs = VarSet::new(&["q", "c"]);
        let one = Rat::one();
        // weights q:1 c:2 — q^2 and c are both weight 2
        let p = parse_multipoly(&vs, &one, "q^2 - 3*c").unwrap();
        assert!(p.is_weighted_homogeneous(&[1, 2]));
        let r = parse_multipoly(&vs, &one, "q - 3*c").unwrap();
        assert!(!r.is_weighted_homogeneous(&[1, 2]));
    }

    #[test]
    fn collect_wrt() {
        let vs = VarSet::new(&["x", "a"]);
        let one = Rat::one();
        let p = parse_multipoly(&vs, &one, "a*x^2 + (a^2+1)*x - 7").unwrap();
        let c = p.coeffs_wrt(0);
        assert_eq!(print_multipoly(&c[2]), "a");
        assert_eq!(print_multipoly(&c[1]), "a^2 + 1");
        assert_eq!(print_multipoly(&c[0]), "-7");
    }
}
