//! Verification suites for the operator identities.
//!
//! Each suite expands its configuration into a list of independent cases,
//! checks them in parallel, and merges the outcomes in case order, so a
//! report depends only on its configuration. A failing case is first
//! narrowed (for windowed identities, to the first differing monomial) and
//! recorded with its inputs; [`replay`] recomputes both sides from those
//! inputs alone.

mod clifford;
mod operators;
mod theorem2;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use clifford::{CliffordCase, CliffordConfig, Relation, ZeroModeCase, ZeroModeIdentity, ZeroModesConfig};
pub use operators::{
    InverseSeriesCase, InverseSeriesConfig, MultivertexCase, MultivertexConfig, ReorderingCase, ReorderingConfig,
};
pub use theorem2::{Theorem2Case, Theorem2Config};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Failure {
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub suite: Suite,
    pub config: Value,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {}: {} cases, {} failures, {} ms",
            self.suite,
            self.cases_run,
            self.failures.len(),
            self.elapsed_ms
        )?;
        for failure in &self.failures {
            writeln!(f, "  inputs: {}", failure.inputs)?;
            writeln!(f, "    lhs: {}", failure.lhs)?;
            writeln!(f, "    rhs: {}", failure.rhs)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Reordering,
    ZeroModes,
    Clifford,
    Multivertex,
    Theorem2,
    InverseSeries,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Reordering, Suite::ZeroModes, Suite::Clifford, Suite::Multivertex, Suite::Theorem2, Suite::InverseSeries];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Reordering => "reordering",
            Suite::ZeroModes => "zero-modes",
            Suite::Clifford => "clifford",
            Suite::Multivertex => "multivertex",
            Suite::Theorem2 => "theorem2",
            Suite::InverseSeries => "inverse-series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One checkable instance of an identity.
pub trait Case: Clone + Serialize + DeserializeOwned + Send + Sync {
    type Output: PartialEq + Serialize;

    /// Both sides of the identity.
    fn sides(&self) -> Result<(Self::Output, Self::Output)>;

    /// A smaller case that still exhibits the mismatch between `lhs` and `rhs`.
    fn narrow(&self, _lhs: &Self::Output, _rhs: &Self::Output) -> Self {
        self.clone()
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn check<C: Case>(case: &C) -> Result<Option<Failure>> {
    let (lhs, rhs) = case.sides()?;
    if lhs == rhs {
        return Ok(None);
    }
    let small = case.narrow(&lhs, &rhs);
    let (lhs, rhs) = small.sides()?;
    Ok(Some(Failure { inputs: to_value(&small), lhs: to_value(&lhs), rhs: to_value(&rhs) }))
}

/// Checks every case on the current rayon pool and merges in case order.
fn run_cases<C: Case, K: Serialize>(suite: Suite, config: &K, cases: Vec<C>) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcomes: Vec<Result<Option<Failure>>> = cases.par_iter().map(check).collect();
    let mut failures = Vec::new();
    for outcome in outcomes {
        if let Some(f) = outcome? {
            failures.push(f);
        }
    }
    Ok(VerificationReport {
        suite,
        config: to_value(config),
        cases_run: cases.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn replay_as<C: Case>(inputs: &Value) -> Result<(Value, Value)> {
    let case: C = serde_json::from_value(inputs.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let (lhs, rhs) = case.sides()?;
    Ok((to_value(&lhs), to_value(&rhs)))
}

/// Recomputes both sides of a recorded failure from its inputs.
pub fn replay(suite: Suite, inputs: &Value) -> Result<(Value, Value)> {
    match suite {
        Suite::Reordering => replay_as::<ReorderingCase>(inputs),
        Suite::ZeroModes => replay_as::<ZeroModeCase>(inputs),
        Suite::Clifford => replay_as::<CliffordCase>(inputs),
        Suite::Multivertex => replay_as::<MultivertexCase>(inputs),
        Suite::Theorem2 => replay_as::<Theorem2Case>(inputs),
        Suite::InverseSeries => replay_as::<InverseSeriesCase>(inputs),
    }
}

/// Any suite configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "kebab-case")]
pub enum SuiteConfig {
    Reordering(ReorderingConfig),
    ZeroModes(ZeroModesConfig),
    Clifford(CliffordConfig),
    Multivertex(MultivertexConfig),
    Theorem2(Theorem2Config),
    InverseSeries(InverseSeriesConfig),
}

impl SuiteConfig {
    pub fn default_for(suite: Suite) -> Self {
        match suite {
            Suite::Reordering => SuiteConfig::Reordering(Default::default()),
            Suite::ZeroModes => SuiteConfig::ZeroModes(Default::default()),
            Suite::Clifford => SuiteConfig::Clifford(Default::default()),
            Suite::Multivertex => SuiteConfig::Multivertex(Default::default()),
            Suite::Theorem2 => SuiteConfig::Theorem2(Default::default()),
            Suite::InverseSeries => SuiteConfig::InverseSeries(Default::default()),
        }
    }

    pub fn suite(&self) -> Suite {
        match self {
            SuiteConfig::Reordering(_) => Suite::Reordering,
            SuiteConfig::ZeroModes(_) => Suite::ZeroModes,
            SuiteConfig::Clifford(_) => Suite::Clifford,
            SuiteConfig::Multivertex(_) => Suite::Multivertex,
            SuiteConfig::Theorem2(_) => Suite::Theorem2,
            SuiteConfig::InverseSeries(_) => Suite::InverseSeries,
        }
    }

    /// The same configuration with its perturbation switched on.
    pub fn perturbed(mut self) -> Self {
        match &mut self {
            SuiteConfig::Reordering(c) => c.perturb = true,
            SuiteConfig::ZeroModes(c) => c.perturb = true,
            SuiteConfig::Clifford(c) => c.perturb = true,
            SuiteConfig::Multivertex(c) => c.perturb = true,
            SuiteConfig::Theorem2(c) => c.perturb = true,
            SuiteConfig::InverseSeries(c) => c.perturb = true,
        }
        self
    }

    pub fn run(&self) -> Result<VerificationReport> {
        match self {
            SuiteConfig::Reordering(c) => verify_reordering(c),
            SuiteConfig::ZeroModes(c) => verify_zero_modes(c),
            SuiteConfig::Clifford(c) => verify_clifford(c),
            SuiteConfig::Multivertex(c) => verify_multivertex(c),
            SuiteConfig::Theorem2(c) => verify_theorem2(c),
            SuiteConfig::InverseSeries(c) => verify_inverse_series(c),
        }
    }
}

pub fn verify_reordering(config: &ReorderingConfig) -> Result<VerificationReport> {
    run_cases(Suite::Reordering, config, config.cases())
}

pub fn verify_zero_modes(config: &ZeroModesConfig) -> Result<VerificationReport> {
    run_cases(Suite::ZeroModes, config, config.cases())
}

pub fn verify_clifford(config: &CliffordConfig) -> Result<VerificationReport> {
    run_cases(Suite::Clifford, config, config.cases())
}

pub fn verify_multivertex(config: &MultivertexConfig) -> Result<VerificationReport> {
    run_cases(Suite::Multivertex, config, config.cases())
}

pub fn verify_theorem2(config: &Theorem2Config) -> Result<VerificationReport> {
    run_cases(Suite::Theorem2, config, config.cases())
}

pub fn verify_inverse_series(config: &InverseSeriesConfig) -> Result<VerificationReport> {
    run_cases(Suite::InverseSeries, config, config.cases())
}

/// An inclusive integer range, written `[lo, hi]` in JSON.
pub type Interval = (i64, i64);

fn range(r: Interval) -> std::ops::RangeInclusive<i64> {
    r.0..=r.1
}
