//! Algebraic systems in undetermined coefficients, with JSON serialization.

use crate::ansatz::AnsatzPolynomials;
use exact_algebra::multipoly::{print_multipoly, MultiPoly, VarSet};
use exact_algebra::rational::Rat;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Direct,
    LogDerivative,
    Pullback,
}

/// A polynomial system for the undetermined coefficients: equations are
/// polynomials in the unknown variables (x eliminated by coefficient
/// extraction), optionally graded by the scaling action x -> alpha x.
#[derive(Debug, Clone)]
pub struct AlgebraicSystem {
    pub method: Method,
    /// equation polynomials; the variable set still contains x but every
    /// equation has x-degree zero
    pub equations: Vec<MultiPoly<Rat>>,
    pub vars: Arc<VarSet>,
    pub unknowns: Vec<String>,
    /// weight of each unknown under the scaling action (0 = invariant)
    pub weights: BTreeMap<String, u32>,
    /// h1 = h2 = branching order at infinity
    pub h: u32,
    pub ansatz: AnsatzPolynomials,
    /// recorded substitutions unknown -> expression (in the remaining
    /// unknowns and x), applied by symbolic eliminations so solutions lift
    pub substitutions: Vec<(String, MultiPoly<Rat>)>,
}

impl AlgebraicSystem {
    pub fn equation_count(&self) -> usize {
        self.equations.len()
    }

    /// Unknowns actually present in the equations.
    pub fn active_unknowns(&self) -> Vec<String> {
        let mut used: Vec<String> = Vec::new();
        for name in &self.unknowns {
            let idx = self.vars.index_of(name).unwrap();
            if self
                .equations
                .iter()
                .any(|e| e.terms().keys().any(|m| m[idx] > 0))
            {
                used.push(name.clone());
            }
        }
        used
    }

    /// Unknown count with the one-dimensional scaling redundancy removed.
    pub fn effective_unknown_count(&self) -> usize {
        let n = self.unknowns.len();
        if self.weights.values().any(|&w| w > 0) {
            n.saturating_sub(1)
        } else {
            n
        }
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        let ws: Vec<u32> = self
            .vars
            .names()
            .iter()
            .map(|n| *self.weights.get(n).unwrap_or(&0))
            .collect();
        self.equations.iter().all(|e| e.is_weighted_homogeneous(&ws))
    }

    /// Weights vector over the unknown list (for the weighted solver).
    pub fn weight_vector(&self, names: &[String]) -> Vec<u32> {
        names
            .iter()
            .map(|n| *self.weights.get(n).unwrap_or(&0))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let eqs: Vec<String> = self.equations.iter().map(print_multipoly).collect();
        let unknowns: Vec<serde_json::Value> = self
            .unknowns
            .iter()
            .map(|n| {
                serde_json::json!({
                    "name": n,
                    "weight": self.weights.get(n).cloned().unwrap_or(0),
                })
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "method": format!("{:?}", self.method),
            "unknowns": unknowns,
            "equations": eqs,
            "h": self.h,
            "signature": {
                "k": self.ansatz.signature.k,
                "l": self.ansatz.signature.l,
                "m": self.ansatz.signature.m,
                "n": self.ansatz.signature.n,
            },
            "arranged_pattern": self.ansatz.arranged.to_text(),
            "fiber_permutation": self
                .ansatz
                .perm
                .iter()
                .map(|f| format!("{}", f))
                .collect::<Vec<_>>(),
            "substitutions": self
                .substitutions
                .iter()
                .map(|(n, e)| serde_json::json!({"unknown": n, "value": print_multipoly(e)}))
                .collect::<Vec<_>>(),
        })
    }
}
