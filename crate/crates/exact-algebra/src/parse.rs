//! Text syntax for polynomials and rational functions.
//!
//! Standard infix with `^` for powers, `*` for products, rationals as `a/b`.
//! The designated variable is `x`; a field generator is written `xi` and is
//! introduced by a header line `field: xi^3+2*xi^2+6*xi-8` where applicable.
//! Printing is canonical and parsing round-trips it bit-exactly.

use crate::error::{AlgebraError, Result};
use crate::numberfield::{AlgebraicNumber, NumberField};
use crate::rational::{Int, Rat};
use crate::ratfunc::RationalFunction;
use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n.parse::<Int>().unwrap()));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut n = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        n.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(n));
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            other => {
                return Err(AlgebraError::Parse(format!("unexpected character '{}'", other)))
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum Expr {
    Num(Int),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }
    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }
    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let r = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(r));
                }
                Some(Tok::Minus) => {
                    self.next();
                    let r = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(r));
                }
                _ => return Ok(lhs),
            }
        }
    }
    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let r = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(r));
                }
                Some(Tok::Slash) => {
                    self.next();
                    let r = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(r));
                }
                _ => return Ok(lhs),
            }
        }
    }
    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }
    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(v)) => Ok(Expr::Var(v)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(AlgebraError::Parse("expected ')'".into())),
                }
            }
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.factor()?))),
            other => Err(AlgebraError::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse("trailing input".into()));
    }
    Ok(e)
}

/// Evaluate an expression as a univariate rational function over a field,
/// mapping named variables through `lookup`.
fn eval_ratfunc<F: Field>(
    e: &Expr,
    one: &F,
    lookup: &dyn Fn(&str) -> Option<UniPoly<F>>,
) -> Result<(UniPoly<F>, UniPoly<F>)> {
    let unit = || UniPoly::constant(one.clone());
    Ok(match e {
        Expr::Num(n) => (
            UniPoly::constant(one.from_rat_like(&Rat::from_integer(n.clone()))),
            unit(),
        ),
        Expr::Var(v) => match lookup(v) {
            Some(p) => (p, unit()),
            None => return Err(AlgebraError::Parse(format!("unknown symbol '{}'", v))),
        },
        Expr::Add(a, b) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            let (bn, bd) = eval_ratfunc(b, one, lookup)?;
            (an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
        }
        Expr::Sub(a, b) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            let (bn, bd) = eval_ratfunc(b, one, lookup)?;
            (an.mul(&bd).sub(&bn.mul(&ad)), ad.mul(&bd))
        }
        Expr::Mul(a, b) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            let (bn, bd) = eval_ratfunc(b, one, lookup)?;
            (an.mul(&bn), ad.mul(&bd))
        }
        Expr::Div(a, b) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            let (bn, bd) = eval_ratfunc(b, one, lookup)?;
            if bn.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            (an.mul(&bd), ad.mul(&bn))
        }
        Expr::Pow(a, e) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            let mut n = unit();
            let mut d = unit();
            for _ in 0..*e {
                n = n.mul(&an);
                d = d.mul(&ad);
            }
            (n, d)
        }
        Expr::Neg(a) => {
            let (an, ad) = eval_ratfunc(a, one, lookup)?;
            (an.neg(), ad)
        }
    })
}

/// Parse a polynomial in `x` over Q.
pub fn parse_qpoly(s: &str) -> Result<UniPoly<Rat>> {
    let (n, d) = parse_q_ratfunc_parts(s)?;
    if d.is_constant() {
        let inv = d.coeffs()[0].inv()?;
        Ok(n.scale(&inv))
    } else {
        Err(AlgebraError::Parse("not a polynomial".into()))
    }
}

fn parse_q_ratfunc_parts(s: &str) -> Result<(UniPoly<Rat>, UniPoly<Rat>)> {
    let e = parse_expr(s)?;
    let one = Rat::one();
    eval_ratfunc(&e, &one, &|v| {
        if v == "x" {
            Some(UniPoly::new(vec![Rat::zero(), Rat::one()]))
        } else {
            None
        }
    })
}

/// Parse a polynomial in `x` over the given number field; the generator is
/// addressed by its name (`xi` by convention).
pub fn parse_nfpoly(field: &Arc<NumberField>, s: &str) -> Result<UniPoly<AlgebraicNumber>> {
    let (n, d) = parse_nf_ratfunc_parts(field, s)?;
    if d.is_constant() {
        let inv = d.coeffs()[0].inv()?;
        Ok(n.scale(&inv))
    } else {
        Err(AlgebraError::Parse("not a polynomial".into()))
    }
}

fn parse_nf_ratfunc_parts(
    field: &Arc<NumberField>,
    s: &str,
) -> Result<(UniPoly<AlgebraicNumber>, UniPoly<AlgebraicNumber>)> {
    let e = parse_expr(s)?;
    let one = field.one();
    eval_ratfunc(&e, &one, &|v| {
        if v == "x" {
            Some(UniPoly::new(vec![field.zero(), field.one()]))
        } else if v == field.generator_name() {
            Some(UniPoly::constant(field.generator()))
        } else {
            None
        }
    })
}

/// Parse a rational function in `x` over a number field (or Q when the field
/// has degree 1): reduced, denominator monic.
pub fn parse_ratfunc(
    field: &Arc<NumberField>,
    s: &str,
) -> Result<RationalFunction<AlgebraicNumber>> {
    let (n, d) = parse_nf_ratfunc_parts(field, s)?;
    RationalFunction::new(n, d)
}

/// Parse a `field: <min poly in xi>` header into a NumberField.
pub fn parse_field_header(line: &str) -> Result<Arc<NumberField>> {
    let rest = line
        .trim()
        .strip_prefix("field:")
        .ok_or_else(|| AlgebraError::Parse("expected 'field:' header".into()))?;
    let e = parse_expr(rest)?;
    let one = Rat::one();
    let (n, d) = eval_ratfunc(&e, &one, &|v| {
        if v == "xi" {
            Some(UniPoly::new(vec![Rat::zero(), Rat::one()]))
        } else {
            None
        }
    })?;
    if !d.is_constant() {
        return Err(AlgebraError::Parse("field polynomial must be polynomial".into()));
    }
    let p = n.scale(&d.coeffs()[0].inv()?);
    NumberField::new("xi", p.monic()?)
}

fn coeff_string<F: Ring>(c: &F) -> (bool, String) {
    // returns (negative, magnitude string); generic via string inspection
    let s = format!("{}", c);
    if let Some(rest) = s.strip_prefix('-') {
        if !rest.contains(" - ") && !rest.contains(" + ") {
            return (true, rest.to_string());
        }
        let m = format!("{}", c.neg_ref());
        return (true, m);
    }
    (false, s)
}

fn needs_parens(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ") || s.starts_with('-')
}

/// Canonical printing of a univariate polynomial, highest degree first.
pub fn print_unipoly<F: Ring>(p: &UniPoly<F>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = coeff_string(c);
        let mag_one = mag == "1";
        let body = if k == 0 {
            if needs_parens(&mag) {
                format!("({})", mag)
            } else {
                mag
            }
        } else {
            let xs = if k == 1 {
                var.to_string()
            } else {
                format!("{}^{}", var, k)
            };
            if mag_one {
                xs
            } else if needs_parens(&mag) {
                format!("({})*{}", mag, xs)
            } else {
                format!("{}*{}", mag, xs)
            }
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

/// Canonical printing of a rational function.
pub fn print_ratfunc<F: Field>(r: &RationalFunction<F>, var: &str) -> String {
    if r.den().is_one() {
        print_unipoly(r.num(), var)
    } else {
        format!(
            "({})/({})",
            print_unipoly(r.num(), var),
            print_unipoly(r.den(), var)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::qpoly;

    #[test]
    fn parse_print_round_trip() {
        let p = parse_qpoly("x^3 - 2*x + 1/2").unwrap();
        let s = print_unipoly(&p, "x");
        assert_eq!(s, "x^3 - 2*x + 1/2");
        assert_eq!(parse_qpoly(&s).unwrap(), p);
    }

    #[test]
    fn parse_field_and_poly() {
        let k = parse_field_header("field: xi^3+2*xi^2+6*xi-8").unwrap();
        assert_eq!(k.degree(), 3);
        let p = parse_nfpoly(&k, "(1 - xi)*x^2 + xi^2/2").unwrap();
        let s = print_unipoly(&p, "x");
        assert_eq!(s, "-(xi - 1)*x^2 + 1/2*xi^2");
        assert_eq!(parse_nfpoly(&k, &s).unwrap(), p);
    }

    #[test]
    fn negative_leading() {
        let p = parse_qpoly("-x^2 + 3").unwrap();
        assert_eq!(print_unipoly(&p, "x"), "-x^2 + 3");
        assert_eq!(parse_qpoly("-x^2 + 3").unwrap(), p);
        assert_eq!(qpoly(&[3, 0, -1]), p);
    }
}
