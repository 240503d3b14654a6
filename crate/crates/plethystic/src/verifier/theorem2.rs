//! Agreement of the independent routes to π-Schur functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{oracle_dual_pi_schur, oracle_pi_schur};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::{cauchy_dual_pi_schur, cauchy_pi_schur, pi_branch, pi_branch_of, pi_schur};
use crate::symfunc::{Rational, SymFunc};
use crate::vertex::{vertex_string_with, EvalConfig};

use super::Case;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Theorem2Config {
    pub pis: Vec<Partition>,
    pub max_weight: usize,
    /// Longest `λ` checked; also the vertex-string length.
    pub max_length: usize,
    /// Include the polynomial oracle route.
    pub oracle: bool,
    pub degree_budget: usize,
    /// Use `M_π^⊥` instead of `L_π^⊥` for the reference value.
    pub perturb: bool,
}

impl Default for Theorem2Config {
    fn default() -> Self {
        Theorem2Config {
            pis: (1..=4).flat_map(|w| partitions_of(w, None, None)).collect(),
            max_weight: 6,
            max_length: 3,
            oracle: true,
            degree_budget: crate::DEFAULT_DEGREE_BUDGET,
            perturb: false,
        }
    }
}

impl Theorem2Config {
    pub fn cases(&self) -> Vec<Theorem2Case> {
        let mut out = Vec::new();
        for pi in &self.pis {
            for lambda in partitions_up_to(self.max_weight, Some(self.max_length)) {
                for dual in [false, true] {
                    out.push(Theorem2Case {
                        pi: pi.clone(),
                        lambda: lambda.clone(),
                        dual,
                        oracle: self.oracle,
                        degree_budget: self.degree_budget,
                        perturb: self.perturb,
                    });
                }
            }
        }
        out
    }
}

/// One `(π, λ)` for either `s^{(π)}_λ` or `s*^{(π)}_λ`. The left side maps
/// each route to its value; the right side holds what each route should
/// give.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Theorem2Case {
    pub pi: Partition,
    pub lambda: Partition,
    pub dual: bool,
    pub oracle: bool,
    pub degree_budget: usize,
    pub perturb: bool,
}

impl Case for Theorem2Case {
    type Output = BTreeMap<String, SymFunc>;

    fn sides(&self) -> Result<(Self::Output, Self::Output)> {
        let (pi, lambda) = (&self.pi, &self.lambda);
        let sign = if lambda.weight() % 2 == 1 { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
        // The skew route, via the conjugate for the dual function.
        let target = if self.dual { lambda.conjugate() } else { lambda.clone() };
        let mut reference = if self.perturb { pi_branch(pi, &target)? } else { pi_schur(pi, &target)? };
        if self.dual {
            reference = reference.scale(&sign);
        }
        let config = EvalConfig { degree_budget: self.degree_budget, ..EvalConfig::default() };
        let vertex = vertex_string_with(pi, lambda, self.dual, lambda.len().max(1), &config)?;
        let mut lhs = BTreeMap::new();
        let mut rhs = BTreeMap::new();
        lhs.insert("cauchy".to_string(), if self.dual { cauchy_dual_pi_schur(pi, lambda)? } else { cauchy_pi_schur(pi, lambda)? });
        if self.oracle {
            let n = lambda.len().max(1);
            let value = if self.dual { oracle_dual_pi_schur(pi, lambda, n)? } else { oracle_pi_schur(pi, lambda, n)? };
            lhs.insert("oracle".to_string(), value);
        }
        // Undoing the skew with M_π^⊥ must return the plain Schur function.
        let mut undone = pi_branch_of(pi, &vertex)?;
        if self.dual {
            undone = undone.scale(&sign);
        }
        lhs.insert("branch".to_string(), undone);
        lhs.insert("vertex".to_string(), vertex);
        for key in lhs.keys() {
            rhs.insert(key.clone(), reference.clone());
        }
        rhs.insert("branch".to_string(), SymFunc::schur(target));
        Ok((lhs, rhs))
    }
}
