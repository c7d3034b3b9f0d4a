//! Undetermined-coefficient ansatz for the polynomial identity
//! P^l U = Q^m V + R^k W.
//!
//! The point at infinity is always arranged to lie over phi = infinity (the
//! m role); the other two fibers take the k and l roles per the
//! classification, and the arrangement is recorded so callers can map the
//! computed map's fibers back to the input pattern.

use belyi_core::pattern::{BranchingPattern, Fiber, FiberAssignment, KlmSignature};
use exact_algebra::error::{AlgebraError, Result};
use exact_algebra::multipoly::{MultiPoly, VarSet};
use exact_algebra::numberfield::AlgebraicNumber;
use exact_algebra::rational::Rat;
use exact_algebra::ring::Ring;
use exact_algebra::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A monic polynomial in x whose lower coefficients are unknowns (or fixed
/// rationals after a normalization).
#[derive(Debug, Clone)]
pub struct AnsatzPart {
    pub label: String,
    pub degree: usize,
    /// names of the coefficient unknowns: entry j (0-based) is the
    /// coefficient of x^{degree-1-j}; None when normalized away to zero
    pub coeff_names: Vec<Option<String>>,
    pub poly: MultiPoly<Rat>,
}

/// The full arranged ansatz.
#[derive(Debug, Clone)]
pub struct AnsatzPolynomials {
    pub vars: Arc<VarSet>,
    /// regular parts: p over phi=0 (power l), q over phi=inf (power m),
    /// r over phi=1 (power k)
    pub p: AnsatzPart,
    pub q: AnsatzPart,
    pub r: AnsatzPart,
    /// exceptional parts (order, monic part) per fiber of the arranged map
    pub u_parts: Vec<(u32, AnsatzPart)>,
    pub v_parts: Vec<(u32, AnsatzPart)>,
    pub w_parts: Vec<(u32, AnsatzPart)>,
    pub signature: KlmSignature,
    pub assignment: FiberAssignment,
    /// pattern of the arranged map: fiber i of the arranged map is fiber
    /// perm[i] of the input pattern
    pub arranged: BranchingPattern,
    pub perm: [Fiber; 3],
    /// weight of each unknown under x -> alpha x
    pub weights: BTreeMap<String, u32>,
    /// which part had its second-highest coefficient cleared
    pub translation_part: Option<String>,
}

impl AnsatzPolynomials {
    /// Build the arranged ansatz. The infinity point sits over phi = inf
    /// with the branching order from the assignment.
    pub fn arrange(pattern: &BranchingPattern, fa: &FiberAssignment) -> Result<Self> {
        if !pattern.hurwitz_check() {
            return Err(AlgebraError::Domain(
                "pattern fails the genus-0 Hurwitz count".into(),
            ));
        }
        fa.validate(pattern)?;
        // roles: m-fiber is the fiber containing infinity; (k,l) assignment
        // of the two remaining fibers by lexicographic minimality
        let m_fiber = fa.infinity_fiber;
        let others: Vec<Fiber> = Fiber::ALL.iter().cloned().filter(|f| *f != m_fiber).collect();
        let maj = |f: Fiber| -> u32 {
            let parts = pattern.fiber(f);
            let mut counts: Vec<(u32, usize)> = Vec::new();
            for &p in parts {
                match counts.iter_mut().find(|(v, _)| *v == p) {
                    Some((_, c)) => *c += 1,
                    None => counts.push((p, 1)),
                }
            }
            let maxc = counts.iter().map(|&(_, c)| c).max().unwrap();
            counts
                .iter()
                .filter(|&&(_, c)| c == maxc)
                .map(|&(v, _)| v)
                .max()
                .unwrap()
        };
        let (k_fiber, l_fiber) = {
            let (a, b) = (others[0], others[1]);
            let (ma, mb) = (maj(a), maj(b));
            if ma <= mb {
                (a, b)
            } else {
                (b, a)
            }
        };
        let k = maj(k_fiber);
        let l = maj(l_fiber);
        let m = maj(m_fiber);
        // arranged: fiber0 <- l_fiber, fiber1 <- k_fiber, fiberInf <- m_fiber
        let perm = [l_fiber, k_fiber, m_fiber];
        let arranged = pattern.permuted(perm);
        let sig = KlmSignature {
            k,
            l,
            m,
            n: {
                let mut n = 0;
                for (f, reg) in [(Fiber::Zero, l), (Fiber::One, k), (Fiber::Inf, m)] {
                    n += arranged.fiber(f).iter().filter(|&&o| o != reg).count() as u32;
                }
                n
            },
            exceptional_points: {
                let mut e = Vec::new();
                for (f, reg) in [(Fiber::Zero, l), (Fiber::One, k), (Fiber::Inf, m)] {
                    for &o in arranged.fiber(f) {
                        if o != reg {
                            e.push((f, o));
                        }
                    }
                }
                e.sort();
                e
            },
            fiber_roles: [Fiber::One, Fiber::Zero, Fiber::Inf],
        };

        // degrees: counts per fiber of the arranged map, with one instance of
        // the infinity order removed from the inf fiber
        let mut inf_parts: Vec<u32> = arranged.fiber(Fiber::Inf).to_vec();
        let pos = inf_parts
            .iter()
            .position(|&o| o == fa.infinity_order)
            .expect("validated assignment");
        inf_parts.remove(pos);

        let group = |parts: &[u32], regular: u32| -> (usize, Vec<(u32, usize)>) {
            let reg_count = parts.iter().filter(|&&o| o == regular).count();
            let mut exc: Vec<(u32, usize)> = Vec::new();
            for &o in parts {
                if o != regular {
                    match exc.iter_mut().find(|(v, _)| *v == o) {
                        Some((_, c)) => *c += 1,
                        None => exc.push((o, 1)),
                    }
                }
            }
            exc.sort();
            (reg_count, exc)
        };
        let (p_deg, u_groups) = group(arranged.fiber(Fiber::Zero), l);
        let (r_deg, w_groups) = group(arranged.fiber(Fiber::One), k);
        let (q_deg, v_groups) = group(&inf_parts, m);

        // translation normalization target: the lowest-degree nonconstant
        // part, preferring the regular parts in the order q, p, r then
        // exceptional groups
        let mut name_order: Vec<(String, usize)> = Vec::new();
        name_order.push(("p".into(), p_deg));
        name_order.push(("q".into(), q_deg));
        name_order.push(("r".into(), r_deg));
        for (o, c) in &u_groups {
            name_order.push((format!("u{}_", o), *c));
        }
        for (o, c) in &v_groups {
            name_order.push((format!("v{}_", o), *c));
        }
        for (o, c) in &w_groups {
            name_order.push((format!("w{}_", o), *c));
        }
        let translation_part = name_order
            .iter()
            .filter(|(_, d)| *d >= 1)
            .min_by_key(|(n, d)| (*d, n.clone()))
            .map(|(n, _)| n.clone());

        // variable names and weights
        let mut names: Vec<String> = vec!["x".into()];
        let mut weights: BTreeMap<String, u32> = BTreeMap::new();
        let mut declare =
            |label: &str, deg: usize, names: &mut Vec<String>, weights: &mut BTreeMap<String, u32>, kill_second: bool| -> Vec<Option<String>> {
                let mut out = Vec::with_capacity(deg);
                for j in 1..=deg {
                    if kill_second && j == 1 {
                        out.push(None);
                        continue;
                    }
                    let nm = format!("{}{}", label, j);
                    names.push(nm.clone());
                    weights.insert(nm.clone(), j as u32);
                    out.push(Some(nm));
                }
                out
            };
        let kill = |lbl: &str| translation_part.as_deref() == Some(lbl);
        let p_names = declare("p", p_deg, &mut names, &mut weights, kill("p"));
        let q_names = declare("q", q_deg, &mut names, &mut weights, kill("q"));
        let r_names = declare("r", r_deg, &mut names, &mut weights, kill("r"));
        let mut u_names = Vec::new();
        for (o, c) in &u_groups {
            let lbl = format!("u{}_", o);
            u_names.push((*o, lbl.clone(), declare(&lbl, *c, &mut names, &mut weights, kill(&lbl))));
        }
        let mut v_names = Vec::new();
        for (o, c) in &v_groups {
            let lbl = format!("v{}_", o);
            v_names.push((*o, lbl.clone(), declare(&lbl, *c, &mut names, &mut weights, kill(&lbl))));
        }
        let mut w_names = Vec::new();
        for (o, c) in &w_groups {
            let lbl = format!("w{}_", o);
            w_names.push((*o, lbl.clone(), declare(&lbl, *c, &mut names, &mut weights, kill(&lbl))));
        }
        let vars = VarSet::from_names(names);
        let mk_part = |label: String, deg: usize, coeff_names: Vec<Option<String>>| -> AnsatzPart {
            let one = Rat::one();
            let x = MultiPoly::var(&vars, "x", one.clone());
            let mut poly = x.pow(deg);
            for (j, nm) in coeff_names.iter().enumerate() {
                // coefficient of x^{deg-1-j}
                let e = deg - 1 - j;
                if let Some(nm) = nm {
                    let c = MultiPoly::var(&vars, nm, one.clone());
                    poly = poly.add(&c.mul(&x.pow(e)));
                }
            }
            AnsatzPart {
                label,
                degree: deg,
                coeff_names,
                poly,
            }
        };
        let p = mk_part("p".into(), p_deg, p_names);
        let q = mk_part("q".into(), q_deg, q_names);
        let r = mk_part("r".into(), r_deg, r_names);
        let u_parts: Vec<(u32, AnsatzPart)> = u_names
            .into_iter()
            .map(|(o, lbl, ns)| (o, mk_part(lbl, ns.len(), ns)))
            .collect();
        let v_parts: Vec<(u32, AnsatzPart)> = v_names
            .into_iter()
            .map(|(o, lbl, ns)| (o, mk_part(lbl, ns.len(), ns)))
            .collect();
        let w_parts: Vec<(u32, AnsatzPart)> = w_names
            .into_iter()
            .map(|(o, lbl, ns)| (o, mk_part(lbl, ns.len(), ns)))
            .collect();
        Ok(AnsatzPolynomials {
            vars,
            p,
            q,
            r,
            u_parts,
            v_parts,
            w_parts,
            signature: sig,
            assignment: *fa,
            arranged,
            perm,
            weights,
            translation_part,
        })
    }

    /// Full exceptional products U, V, W (each part to its order).
    pub fn u_full(&self) -> MultiPoly<Rat> {
        self.product(&self.u_parts)
    }
    pub fn v_full(&self) -> MultiPoly<Rat> {
        self.product(&self.v_parts)
    }
    pub fn w_full(&self) -> MultiPoly<Rat> {
        self.product(&self.w_parts)
    }

    fn product(&self, parts: &[(u32, AnsatzPart)]) -> MultiPoly<Rat> {
        let mut acc = MultiPoly::constant(&self.vars, Rat::one());
        for (o, part) in parts {
            acc = acc.mul(&part.poly.pow(*o as usize));
        }
        acc
    }

    /// Radical of UVW: the product of the squarefree parts.
    pub fn radical_uvw(&self) -> MultiPoly<Rat> {
        let mut acc = MultiPoly::constant(&self.vars, Rat::one());
        for (_, part) in self
            .u_parts
            .iter()
            .chain(&self.v_parts)
            .chain(&self.w_parts)
        {
            acc = acc.mul(&part.poly);
        }
        acc
    }

    /// A = P^l U, B = Q^m V, C = R^k W.
    pub fn a_product(&self) -> MultiPoly<Rat> {
        self.p.poly.pow(self.signature.l as usize).mul(&self.u_full())
    }
    pub fn b_product(&self) -> MultiPoly<Rat> {
        self.q.poly.pow(self.signature.m as usize).mul(&self.v_full())
    }
    pub fn c_product(&self) -> MultiPoly<Rat> {
        self.r.poly.pow(self.signature.k as usize).mul(&self.w_full())
    }

    /// Instantiate a symbolic polynomial at algebraic coordinates of the
    /// unknowns (coords[i] corresponds to vars[i+1]; x is vars[0]).
    pub fn instantiate(
        &self,
        poly: &MultiPoly<Rat>,
        coords: &[AlgebraicNumber],
    ) -> UniPoly<AlgebraicNumber> {
        let witness = coords
            .first()
            .expect("at least one unknown coordinate");
        let dx = poly.degree_in(0).map(|d| d as usize).unwrap_or(0);
        let mut out = vec![witness.zero_like(); dx + 1];
        for (mono, c) in poly.terms() {
            let mut t = witness.from_rat_like(c);
            for (i, &e) in mono.iter().enumerate().skip(1) {
                for _ in 0..e {
                    t = t.mul(&coords[i - 1]);
                }
            }
            let k = mono[0] as usize;
            out[k] = out[k].add(&t);
        }
        UniPoly::new(out)
    }

    /// The unknowns in declaration order (without x).
    pub fn unknowns(&self) -> Vec<String> {
        self.vars.names()[1..].to_vec()
    }
}

/// Logarithmic derivative of a product of ansatz parts, as a fraction with
/// the given common denominator `denom` (each part divides denom):
/// sum_e e * S_e' * (denom / S_e).
pub fn log_derivative_numerator(
    vars: &Arc<VarSet>,
    parts: &[(u32, AnsatzPart)],
    denom: &MultiPoly<Rat>,
) -> MultiPoly<Rat> {
    let mut acc = MultiPoly::zero(vars);
    for (o, part) in parts {
        if part.degree == 0 {
            continue;
        }
        let quotient = divide_in_x(denom, &part.poly).expect("part divides denominator");
        let ds = part.poly.derivative(0);
        acc = acc.add(
            &ds.mul(&quotient)
                .scale(&Rat::from_integer((*o as i64).into())),
        );
    }
    acc
}

/// Exact division of multivariate polynomials viewed as polynomials in x
/// with polynomial coefficients; the divisor must be monic in x.
pub fn divide_in_x(num: &MultiPoly<Rat>, den: &MultiPoly<Rat>) -> Option<MultiPoly<Rat>> {
    let vars = num.vars().clone();
    if den.is_constant() {
        let c = den.constant_value()?;
        if Ring::is_zero(c) {
            return None;
        }
        return Some(num.scale(&(Rat::one() / c)));
    }
    let dd = den.degree_in(0)? as usize;
    let den_coeffs = den.coeffs_wrt(0);
    // monic in x check
    let lead = &den_coeffs[dd];
    if lead.constant_value() != Some(&Rat::one()) {
        return None;
    }
    let mut rem = num.clone();
    let mut quo = MultiPoly::zero(&vars);
    loop {
        let dn = match rem.degree_in(0) {
            None => break,
            Some(d) => d as usize,
        };
        if dn < dd {
            break;
        }
        let rem_coeffs = rem.coeffs_wrt(0);
        let top = &rem_coeffs[dn];
        if top.is_zero() {
            break;
        }
        // term = top * x^{dn-dd}
        let x = MultiPoly::var(&vars, "x", Rat::one());
        let term = top.mul(&x.pow(dn - dd));
        quo = quo.add(&term);
        rem = rem.sub(&term.mul(den));
    }
    if rem.is_zero() {
        Some(quo)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrange_deg15() {
        let p = BranchingPattern::parse("5[3]=6[2]+1+1+1=2[7]+1").unwrap();
        let fa = FiberAssignment {
            infinity_fiber: Fiber::Inf,
            infinity_order: 1,
        };
        let a = AnsatzPolynomials::arrange(&p, &fa).unwrap();
        assert_eq!((a.signature.k, a.signature.l, a.signature.m), (2, 3, 7));
        assert_eq!(a.p.degree, 5);
        assert_eq!(a.q.degree, 2);
        assert_eq!(a.r.degree, 6);
        assert!(a.u_parts.is_empty());
        assert!(a.v_parts.is_empty());
        assert_eq!(a.w_parts.len(), 1);
        assert_eq!(a.w_parts[0].0, 1);
        assert_eq!(a.w_parts[0].1.degree, 3);
        // q is the lowest-degree nonconstant part: Q = x^2 + q2
        assert_eq!(a.translation_part.as_deref(), Some("q"));
        assert_eq!(format!("{}", a.q.poly), "x^2 + q2");
        // unknowns: p1..p5 (p1 killed? no: q was killed), q2, r1..r6, w1_1..: count
        assert_eq!(a.unknowns().len(), 5 + 1 + 6 + 3);
    }

    #[test]
    fn division_in_x() {
        let vars = VarSet::new(&["x", "a"]);
        let one = Rat::one();
        let f = exact_algebra::multipoly::parse_multipoly(&vars, &one, "(x^2 + a)*(x + 2*a)")
            .unwrap();
        let d = exact_algebra::multipoly::parse_multipoly(&vars, &one, "x^2 + a").unwrap();
        let q = divide_in_x(&f, &d).unwrap();
        assert_eq!(format!("{}", q), "x + 2*a");
        let bad = exact_algebra::multipoly::parse_multipoly(&vars, &one, "x + a").unwrap();
        assert!(divide_in_x(&f, &bad).is_none());
    }
}
