//! Belyi maps with factored fiber data.

use crate::pattern::{BranchingPattern, Fiber};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::ring::Field;
use exact_algebra::numberfield::{AlgebraicNumber, NumberField};
use exact_algebra::ratfunc::RationalFunction;
use exact_algebra::ring::Ring;
use exact_algebra::unipoly::UniPoly;
use std::sync::Arc;

pub type K = AlgebraicNumber;

/// One fiber of a map: monic squarefree components per branching order,
/// plus the order at x = infinity when it lies over this fiber.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberData {
    /// (order, component) with pairwise coprime squarefree monic components
    pub components: Vec<(u32, UniPoly<K>)>,
    pub infinity_order: Option<u32>,
}

impl FiberData {
    pub fn orders(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (e, g) in &self.components {
            for _ in 0..g.deg() {
                out.push(*e);
            }
        }
        if let Some(e) = self.infinity_order {
            out.push(e);
        }
        out
    }

    /// Distinct points as (order, multiplicity-class component degree).
    pub fn class_sizes(&self) -> Vec<(u32, usize, bool)> {
        let mut out: Vec<(u32, usize, bool)> = Vec::new();
        for (e, g) in &self.components {
            let inf_here = self.infinity_order == Some(*e);
            out.push((*e, g.deg() + usize::from(inf_here), inf_here));
        }
        if let Some(e) = self.infinity_order {
            if !self.components.iter().any(|(o, _)| *o == e) {
                out.push((e, 1, true));
            }
        }
        out
    }
}

/// A rational function together with its factored fiber data over 0, 1, inf
/// and the induced branching pattern. `phi = a/b`, `phi - 1 = c/b` exactly.
#[derive(Debug, Clone)]
pub struct BelyiMap {
    pub phi: RationalFunction<K>,
    pub a: UniPoly<K>,
    pub b: UniPoly<K>,
    pub c: UniPoly<K>,
    pub fibers: [FiberData; 3],
    pub pattern: BranchingPattern,
    /// fiber and order of x = infinity when it lies over {0,1,inf}
    pub infinity: Option<(Fiber, u32)>,
}

impl BelyiMap {
    pub fn field(&self) -> &Arc<NumberField> {
        self.a
            .coeffs()
            .first()
            .expect("nonzero numerator")
            .field()
    }

    /// Analyze a nonconstant rational function: factored fibers, infinity
    /// placement, branching pattern. Does not test the Belyi property.
    pub fn analyze(phi: &RationalFunction<K>) -> Result<Self> {
        if phi.is_constant() {
            return Err(AlgebraError::Domain("constant map".into()));
        }
        let a = phi.num().clone();
        let b = phi.den().clone();
        let c = a.sub(&b);
        if c.is_zero() {
            return Err(AlgebraError::Domain("phi = 1 identically".into()));
        }
        let d = phi.map_degree();
        let da = a.deg();
        let db = b.deg();
        let dc = c.deg();
        let infinity = if da > db {
            Some((Fiber::Inf, (da - db) as u32))
        } else if db > da {
            Some((Fiber::Zero, (db - da) as u32))
        } else if dc < da {
            Some((Fiber::One, (da - dc) as u32))
        } else {
            None
        };
        let mut fibers = Vec::with_capacity(3);
        for (f, poly) in [(Fiber::Zero, &a), (Fiber::One, &c), (Fiber::Inf, &b)] {
            let comps: Vec<(u32, UniPoly<K>)> = if poly.is_constant() {
                vec![]
            } else {
                poly.squarefree_decomposition()?
                    .into_iter()
                    .map(|(g, m)| (m as u32, g))
                    .collect()
            };
            let inf_order = match infinity {
                Some((fi, e)) if fi == f => Some(e),
                _ => None,
            };
            fibers.push(FiberData {
                components: comps,
                infinity_order: inf_order,
            });
        }
        let fibers: [FiberData; 3] = [
            fibers[0].clone(),
            fibers[1].clone(),
            fibers[2].clone(),
        ];
        let pattern = BranchingPattern::new(
            fibers[0].orders(),
            fibers[1].orders(),
            fibers[2].orders(),
        )?;
        let _ = d;
        Ok(BelyiMap {
            phi: phi.clone(),
            a,
            b,
            c,
            fibers,
            pattern,
            infinity,
        })
    }

    pub fn degree(&self) -> usize {
        self.phi.map_degree()
    }

    /// Certified constructor from factored fiber data: the components per
    /// fiber (order, monic part) must be squarefree and pairwise coprime,
    /// and the products must satisfy s*A0 = B0 + t*C0 for the given
    /// constants. This proves the Belyi property by the Hurwitz count
    /// without recomputing any large gcd: the pattern accounts for all
    /// 2d - 2 critical points, so no critical value outside {0,1,inf}
    /// remains.
    pub fn from_parts(
        fiber0: &[(u32, UniPoly<K>)],
        fiber1: &[(u32, UniPoly<K>)],
        fiber_inf: &[(u32, UniPoly<K>)],
        s: &K,
        t: &K,
    ) -> Result<Self> {
        let witness = s.clone();
        let prod = |parts: &[(u32, UniPoly<K>)]| -> UniPoly<K> {
            let mut acc = UniPoly::constant(witness.one_like());
            for (e, g) in parts {
                acc = acc.mul(&g.pow(*e as usize));
            }
            acc
        };
        // squarefree and pairwise coprime across all components
        let mut all: Vec<&UniPoly<K>> = Vec::new();
        for (_, g) in fiber0.iter().chain(fiber1).chain(fiber_inf) {
            if g.lc().map(|l| !l.is_one()).unwrap_or(true) {
                return Err(AlgebraError::Domain("components must be monic".into()));
            }
            if !g.gcd(&g.derivative())?.is_constant() {
                return Err(AlgebraError::Domain("component not squarefree".into()));
            }
            all.push(g);
        }
        for i in 0..all.len() {
            for j in 0..i {
                if !all[i].gcd(all[j])?.is_constant() {
                    return Err(AlgebraError::Domain("components share roots".into()));
                }
            }
        }
        let a0 = prod(fiber0);
        let b0 = prod(fiber_inf);
        let c0 = prod(fiber1);
        let a = a0.scale(s);
        let c = c0.scale(t);
        if a.sub(&b0).sub(&c) != UniPoly::zero() {
            return Err(AlgebraError::Domain("A = B + C fails".into()));
        }
        let d = a.deg().max(b0.deg());
        let da = a.deg();
        let db = b0.deg();
        let dc = c.deg();
        let infinity = if da > db {
            Some((Fiber::Inf, (da - db) as u32))
        } else if db > da {
            Some((Fiber::Zero, (db - da) as u32))
        } else if dc < da {
            Some((Fiber::One, (da - dc) as u32))
        } else {
            None
        };
        let mk_fd = |parts: &[(u32, UniPoly<K>)], f: Fiber| -> FiberData {
            let mut components: Vec<(u32, UniPoly<K>)> = parts
                .iter()
                .filter(|(_, g)| g.deg() > 0)
                .cloned()
                .collect();
            components.sort_by_key(|(e, _)| *e);
            FiberData {
                components,
                infinity_order: match infinity {
                    Some((fi, e)) if fi == f => Some(e),
                    _ => None,
                },
            }
        };
        let fibers = [
            mk_fd(fiber0, Fiber::Zero),
            mk_fd(fiber1, Fiber::One),
            mk_fd(fiber_inf, Fiber::Inf),
        ];
        let pattern = BranchingPattern::new(
            fibers[0].orders(),
            fibers[1].orders(),
            fibers[2].orders(),
        )?;
        if !pattern.hurwitz_check() {
            return Err(AlgebraError::Domain(
                "factored data violates the Hurwitz count".into(),
            ));
        }
        if pattern.degree() as usize != d {
            return Err(AlgebraError::Domain("degree mismatch".into()));
        }
        // phi = a / b0 is already in lowest terms (pairwise coprime parts)
        let phi = RationalFunction::from_coprime(a.clone(), b0.clone())?;
        Ok(BelyiMap {
            phi,
            a,
            b: b0,
            c,
            fibers,
            pattern,
            infinity,
        })
    }
}

/// Lift a rational function over Q into the trivial number field so all map
/// machinery can run on one coefficient type.
pub fn lift_ratfunc_q(
    phi: &RationalFunction<exact_algebra::Rat>,
) -> Result<RationalFunction<K>> {
    let q = NumberField::rationals();
    phi.map_coeffs(&|c| q.from_rat(c))
}

/// Parse a map from optional `field:` header plus expression lines.
pub fn parse_map_text(text: &str) -> Result<RationalFunction<K>> {
    let mut field: Option<Arc<NumberField>> = None;
    let mut expr_lines: Vec<&str> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with("field:") {
            field = Some(exact_algebra::parse::parse_field_header(t)?);
        } else {
            expr_lines.push(t);
        }
    }
    let field = field.unwrap_or_else(NumberField::rationals);
    let expr = expr_lines.join(" ");
    exact_algebra::parse::parse_ratfunc(&field, &expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::parse::parse_ratfunc;

    #[test]
    fn analyze_x_squared() {
        let q = NumberField::rationals();
        let phi = parse_ratfunc(&q, "x^2").unwrap();
        let m = BelyiMap::analyze(&phi).unwrap();
        assert_eq!(m.pattern, BranchingPattern::parse("2=1+1=2").unwrap());
        assert_eq!(m.infinity, Some((Fiber::Inf, 2)));
    }

    #[test]
    fn analyze_degree6() {
        // 4(x^2-x+1)^3 / (27 x^2 (x-1)^2): pure (2,3)-structure
        let q = NumberField::rationals();
        let phi = parse_ratfunc(&q, "4*(x^2-x+1)^3/(27*x^2*(x-1)^2)").unwrap();
        let m = BelyiMap::analyze(&phi).unwrap();
        assert_eq!(m.pattern, BranchingPattern::parse("3+3=2+2+2=2+2+2").unwrap());
        assert_eq!(m.infinity, Some((Fiber::Inf, 2)));
        assert!(m.pattern.hurwitz_check());
    }
}
