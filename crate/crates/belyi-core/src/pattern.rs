//! Branching patterns and their (k,l,m)-minus-n classification.

use exact_algebra::error::{AlgebraError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Fiber {
    Zero,
    One,
    Inf,
}

impl Fiber {
    pub const ALL: [Fiber; 3] = [Fiber::Zero, Fiber::One, Fiber::Inf];
    pub fn index(&self) -> usize {
        match self {
            Fiber::Zero => 0,
            Fiber::One => 1,
            Fiber::Inf => 2,
        }
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fiber::Zero => write!(f, "0"),
            Fiber::One => write!(f, "1"),
            Fiber::Inf => write!(f, "inf"),
        }
    }
}

/// Three partitions of the degree: the branching orders over 0, 1, infinity.
/// Parts are kept sorted descending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchingPattern {
    degree: u32,
    fibers: [Vec<u32>; 3],
}

impl fmt::Debug for BranchingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BranchingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl BranchingPattern {
    pub fn new(fiber0: Vec<u32>, fiber1: Vec<u32>, fiber_inf: Vec<u32>) -> Result<Self> {
        let sums: Vec<u64> = [&fiber0, &fiber1, &fiber_inf]
            .iter()
            .map(|f| f.iter().map(|&x| x as u64).sum())
            .collect();
        if sums[0] != sums[1] || sums[1] != sums[2] || sums[0] == 0 {
            return Err(AlgebraError::Domain(format!(
                "fiber sums differ: {} / {} / {}",
                sums[0], sums[1], sums[2]
            )));
        }
        if [&fiber0, &fiber1, &fiber_inf]
            .iter()
            .any(|f| f.iter().any(|&x| x == 0))
        {
            return Err(AlgebraError::Domain("branching orders must be positive".into()));
        }
        let mut fibers = [fiber0, fiber1, fiber_inf];
        for f in fibers.iter_mut() {
            f.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(BranchingPattern {
            degree: sums[0] as u32,
            fibers,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn fiber(&self, f: Fiber) -> &[u32] {
        &self.fibers[f.index()]
    }

    /// Number of distinct points over the given fiber.
    pub fn points(&self, f: Fiber) -> usize {
        self.fibers[f.index()].len()
    }

    /// Genus-0 consistency: n0 + n1 + ninf = d + 2.
    pub fn hurwitz_check(&self) -> bool {
        let n: usize = self.fibers.iter().map(|f| f.len()).sum();
        n == self.degree as usize + 2
    }

    /// Apply a permutation of the fibers: `perm[i]` is the source fiber that
    /// becomes fiber i of the result.
    pub fn permuted(&self, perm: [Fiber; 3]) -> Self {
        BranchingPattern {
            degree: self.degree,
            fibers: [
                self.fibers[perm[0].index()].clone(),
                self.fibers[perm[1].index()].clone(),
                self.fibers[perm[2].index()].clone(),
            ],
        }
    }

    /// All (fiber, order) whose order appears exactly once in its fiber.
    pub fn bachelors(&self) -> Vec<(Fiber, u32)> {
        self.by_multiplicity(1)
    }

    /// All (fiber, order) whose order appears exactly twice in its fiber.
    pub fn point_couples(&self) -> Vec<(Fiber, u32)> {
        self.by_multiplicity(2)
    }

    fn by_multiplicity(&self, want: usize) -> Vec<(Fiber, u32)> {
        let mut out = Vec::new();
        for f in Fiber::ALL {
            let parts = self.fiber(f);
            let mut i = 0;
            while i < parts.len() {
                let mut j = i;
                while j < parts.len() && parts[j] == parts[i] {
                    j += 1;
                }
                if j - i == want {
                    out.push((f, parts[i]));
                }
                i = j;
            }
        }
        out
    }

    /// A fiber where every order is 2.
    pub fn is_pure(&self) -> bool {
        self.fibers.iter().any(|f| f.iter().all(|&x| x == 2))
    }

    /// A fiber where all orders except at one point are 2.
    pub fn is_almost_pure(&self) -> bool {
        self.is_pure()
            || self
                .fibers
                .iter()
                .any(|f| f.iter().filter(|&&x| x != 2).count() == 1)
    }

    /// The (k,l,m)-minus-n classification: over all six assignments of the
    /// fibers to the roles (k: over 1, l: over 0, m: over inf) and all
    /// per-fiber majority orders, the lexicographically smallest
    /// (n, k, l, m).
    pub fn classify_klm(&self) -> KlmSignature {
        let mut best: Option<KlmSignature> = None;
        let perms: [[Fiber; 3]; 6] = [
            [Fiber::One, Fiber::Zero, Fiber::Inf],
            [Fiber::One, Fiber::Inf, Fiber::Zero],
            [Fiber::Zero, Fiber::One, Fiber::Inf],
            [Fiber::Zero, Fiber::Inf, Fiber::One],
            [Fiber::Inf, Fiber::Zero, Fiber::One],
            [Fiber::Inf, Fiber::One, Fiber::Zero],
        ];
        for roles in perms {
            // roles[0] plays k (over 1), roles[1] plays l (over 0), roles[2] m
            for k in self.majority_candidates(roles[0]) {
                for l in self.majority_candidates(roles[1]) {
                    for m in self.majority_candidates(roles[2]) {
                        let sig = self.signature_for(roles, k, l, m);
                        let better = match &best {
                            None => true,
                            Some(b) => {
                                (sig.n, sig.k, sig.l, sig.m) < (b.n, b.k, b.l, b.m)
                            }
                        };
                        if better {
                            best = Some(sig);
                        }
                    }
                }
            }
        }
        best.expect("nonempty pattern")
    }

    fn majority_candidates(&self, f: Fiber) -> Vec<u32> {
        let parts = self.fiber(f);
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for &p in parts {
            match counts.iter_mut().find(|(v, _)| *v == p) {
                Some((_, c)) => *c += 1,
                None => counts.push((p, 1)),
            }
        }
        let maxc = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
        // on a count tie the largest order is the regular one (order-1
        // points are never treated as regular branchings when avoidable)
        counts
            .iter()
            .filter(|&&(_, c)| c == maxc)
            .map(|&(v, _)| v)
            .max()
            .into_iter()
            .collect()
    }

    fn signature_for(&self, roles: [Fiber; 3], k: u32, l: u32, m: u32) -> KlmSignature {
        let mut exceptional = Vec::new();
        let mut n = 0u32;
        for (role_order, fib) in [(k, roles[0]), (l, roles[1]), (m, roles[2])] {
            for &p in self.fiber(fib) {
                if p != role_order {
                    exceptional.push((fib, p));
                    n += 1;
                }
            }
        }
        exceptional.sort();
        KlmSignature {
            k,
            l,
            m,
            n,
            exceptional_points: exceptional,
            fiber_roles: roles,
        }
    }

    /// Canonical text: fibers joined by `=`, parts descending, runs of an
    /// order >= 2 grouped as `count[order]`.
    pub fn to_text(&self) -> String {
        let fiber_text = |parts: &[u32]| -> String {
            let mut out: Vec<String> = Vec::new();
            let mut i = 0;
            while i < parts.len() {
                let mut j = i;
                while j < parts.len() && parts[j] == parts[i] {
                    j += 1;
                }
                let count = j - i;
                if count >= 2 && parts[i] >= 2 {
                    out.push(format!("{}[{}]", count, parts[i]));
                } else {
                    for _ in 0..count {
                        out.push(format!("{}", parts[i]));
                    }
                }
                i = j;
            }
            out.join("+")
        };
        format!(
            "{}={}={}",
            fiber_text(&self.fibers[0]),
            fiber_text(&self.fibers[1]),
            fiber_text(&self.fibers[2])
        )
    }

    /// Parse the text grammar `<parts>=<parts>=<parts>` with
    /// `term ::= count[order] | order`.
    pub fn parse(s: &str) -> Result<Self> {
        let chunks: Vec<&str> = s.split('=').collect();
        if chunks.len() != 3 {
            return Err(AlgebraError::Parse("pattern needs three fibers".into()));
        }
        let mut fibers = Vec::new();
        for c in chunks {
            let mut parts = Vec::new();
            for term in c.split('+') {
                let term = term.trim();
                if term.is_empty() {
                    return Err(AlgebraError::Parse("empty term".into()));
                }
                if let Some(open) = term.find('[') {
                    let close = term
                        .find(']')
                        .ok_or_else(|| AlgebraError::Parse("missing ]".into()))?;
                    let count: usize = term[..open]
                        .trim()
                        .parse()
                        .map_err(|_| AlgebraError::Parse("bad count".into()))?;
                    let order: u32 = term[open + 1..close]
                        .trim()
                        .parse()
                        .map_err(|_| AlgebraError::Parse("bad order".into()))?;
                    for _ in 0..count {
                        parts.push(order);
                    }
                } else {
                    let order: u32 = term
                        .parse()
                        .map_err(|_| AlgebraError::Parse("bad order".into()))?;
                    parts.push(order);
                }
            }
            fibers.push(parts);
        }
        let f_inf = fibers.pop().unwrap();
        let f_1 = fibers.pop().unwrap();
        let f_0 = fibers.pop().unwrap();
        BranchingPattern::new(f_0, f_1, f_inf)
    }
}

/// (k,l,m)-minus-n signature: with exactly n exceptions, all orders over 1
/// equal k, over 0 equal l, over inf equal m, relative to the recorded
/// assignment of fibers to roles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlmSignature {
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub exceptional_points: Vec<(Fiber, u32)>,
    /// fibers playing the (k, l, m) roles, in that order
    pub fiber_roles: [Fiber; 3],
}

/// Where the point at infinity goes: its fiber and branching order there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberAssignment {
    pub infinity_fiber: Fiber,
    pub infinity_order: u32,
}

impl FiberAssignment {
    pub fn validate(&self, p: &BranchingPattern) -> Result<()> {
        if p.fiber(self.infinity_fiber)
            .iter()
            .any(|&o| o == self.infinity_order)
        {
            Ok(())
        } else {
            Err(AlgebraError::Domain(format!(
                "no point of order {} over fiber {}",
                self.infinity_order, self.infinity_fiber
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg15() -> BranchingPattern {
        BranchingPattern::parse("5[3]=6[2]+1+1+1=2[7]+1").unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        let p = deg15();
        assert_eq!(p.degree(), 15);
        let s = p.to_text();
        assert_eq!(s, "5[3]=6[2]+1+1+1=2[7]+1");
        assert_eq!(BranchingPattern::parse(&s).unwrap(), p);
    }

    #[test]
    fn hurwitz_examples() {
        // degree-15 pattern: 5 + 9 + 3 = 17 = d + 2
        assert!(deg15().hurwitz_check());
        // cyclic x^3: 3 = 1+1+1 = 3, so 1+3+1 = 5 = 3+2
        assert!(BranchingPattern::parse("3=1+1+1=3").unwrap().hurwitz_check());
        // the torus pattern 3=3=3 fails genus 0 (1+1+1 = 3 != 5)
        assert!(!BranchingPattern::parse("3=3=3").unwrap().hurwitz_check());
        // 3/3/2+1: 1+1+2 = 4 != 5
        assert!(!BranchingPattern::parse("3=3=2+1").unwrap().hurwitz_check());
    }

    #[test]
    fn classify_deg15() {
        let sig = deg15().classify_klm();
        assert_eq!((sig.k, sig.l, sig.m, sig.n), (2, 3, 7, 4));
        assert_eq!(
            sig.fiber_roles,
            [Fiber::One, Fiber::Zero, Fiber::Inf]
        );
        assert_eq!(sig.exceptional_points.len(), 4);
    }

    #[test]
    fn classify_degree_one() {
        let p = BranchingPattern::parse("1=1=1").unwrap();
        let sig = p.classify_klm();
        assert_eq!((sig.k, sig.l, sig.m, sig.n), (1, 1, 1, 0));
    }

    #[test]
    fn classify_c30() {
        // the C30 pattern (computed from its map): 4+4+1+1 = 4[2]+1+1 = 5+5
        let p = BranchingPattern::parse("4+4+1+1=4[2]+1+1=5+5").unwrap();
        assert!(p.hurwitz_check());
        let sig = p.classify_klm();
        assert_eq!((sig.k, sig.l, sig.m, sig.n), (2, 4, 5, 4));
    }

    #[test]
    fn classify_invariant_under_fiber_permutation() {
        let p = deg15();
        let q = p.permuted([Fiber::Inf, Fiber::Zero, Fiber::One]);
        let sp = p.classify_klm();
        let sq = q.classify_klm();
        assert_eq!((sp.k, sp.l, sp.m, sp.n), (sq.k, sq.l, sq.m, sq.n));
    }

    #[test]
    fn bachelors_and_couples() {
        let p = deg15();
        assert_eq!(p.bachelors(), vec![(Fiber::Inf, 1)]);
        assert_eq!(p.point_couples(), vec![(Fiber::Inf, 7)]);
        // degree 2: 2 = 1+1 = 2 (the x^2 pattern up to relabeling)
        let q = BranchingPattern::parse("2=1+1=2").unwrap();
        assert_eq!(q.bachelors(), vec![(Fiber::Zero, 2), (Fiber::Inf, 2)]);
        assert_eq!(q.point_couples(), vec![(Fiber::One, 1)]);
        // couples of the C30 pattern include (0-fiber, 4) and (inf-fiber, 5)
        let c = BranchingPattern::parse("4+4+1+1=4[2]+1+1=5+5").unwrap();
        let couples = c.point_couples();
        assert!(couples.contains(&(Fiber::Zero, 4)));
        assert!(couples.contains(&(Fiber::Inf, 5)));
    }

    #[test]
    fn purity() {
        assert!(BranchingPattern::parse("2+2=2+2=4").unwrap().is_pure());
        assert!(BranchingPattern::parse("3+2+2+2=3[3]=9")
            .unwrap()
            .is_almost_pure());
    }
}
