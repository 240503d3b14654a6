use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::series::{Family, SeriesSpec, Shape};
use crate::vertex::zero_mode::ZeroMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    Multiply,
    Skew,
}

/// One series factor `F(u)` or `F^⊥(u)` whose argument `u` is the monomial
/// `∏ var^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub action: Action,
    pub spec: SeriesSpec,
    pub exponents: BTreeMap<String, i64>,
}

impl Factor {
    pub fn new(action: Action, spec: SeriesSpec, exponents: &[(&str, i64)]) -> Self {
        Factor {
            action,
            spec,
            exponents: exponents.iter().filter(|(_, e)| *e != 0).map(|(v, e)| (v.to_string(), *e)).collect(),
        }
    }

    pub fn multiply(family: Family, shape: Shape, exponents: &[(&str, i64)]) -> Self {
        Factor::new(Action::Multiply, SeriesSpec::new(family, shape), exponents)
    }

    pub fn skew(family: Family, shape: Shape, exponents: &[(&str, i64)]) -> Self {
        Factor::new(Action::Skew, SeriesSpec::new(family, shape), exponents)
    }

    /// `M(u)` or `L(u)` on the shape `[1]`.
    pub fn basic(action: Action, family: Family, exponents: &[(&str, i64)]) -> Self {
        Factor::new(action, SeriesSpec::plain(family, Partition::row(1)), exponents)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.family)?;
        if self.action == Action::Skew {
            write!(f, "^⊥")?;
        }
        if self.spec.shape != Shape::Plain(Partition::row(1)) {
            write!(f, "_{}", self.spec.shape)?;
        }
        write!(f, "(")?;
        if self.exponents.is_empty() {
            write!(f, "1")?;
        }
        for (i, (v, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match e {
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        write!(f, ")")
    }
}

/// An operator product written left to right and applied right to left:
/// the zero-mode suffix acts first, then the factors from last to first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorChain {
    pub factors: Vec<Factor>,
    pub zero_modes: Vec<ZeroMode>,
}

impl FactorChain {
    pub fn new(factors: Vec<Factor>) -> Self {
        FactorChain { factors, zero_modes: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// The composite `self · other`.
    pub fn then(&self, other: &FactorChain) -> FactorChain {
        assert!(self.zero_modes.is_empty(), "zero modes must stay rightmost");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        FactorChain { factors, zero_modes: other.zero_modes.clone() }
    }

    pub fn with_zero_modes(mut self, zero_modes: Vec<ZeroMode>) -> Self {
        self.zero_modes = zero_modes;
        self
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self.factors.iter().flat_map(|f| f.exponents.keys().cloned()).collect();
        vars.extend(self.zero_modes.iter().filter_map(|z| match z {
            ZeroMode::AlphaPow { var, .. } => Some(var.clone()),
            _ => None,
        }));
        vars.sort();
        vars.dedup();
        vars
    }
}

impl fmt::Display for FactorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.zero_modes.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for x in &self.factors {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        for z in &self.zero_modes {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            write!(f, "{z}")?;
        }
        Ok(())
    }
}

pub fn build_vertex(pi: &Partition) -> FactorChain {
    build_vertex_in(pi, "z")
}

/// `V_π` in the named variable. Factors whose removed row does not fit in π
/// are the identity and are omitted.
pub fn build_vertex_in(pi: &Partition, var: &str) -> FactorChain {
    let mut factors = vec![
        Factor::basic(Action::Multiply, Family::M, &[(var, 1)]),
        Factor::basic(Action::Skew, Family::L, &[(var, -1)]),
    ];
    for k in 1..=pi.largest() {
        let shape = Shape::skew(pi.clone(), Partition::row(k));
        factors.push(Factor::skew(Family::L, shape, &[(var, k as i64)]));
    }
    FactorChain::new(factors)
}

pub fn build_dual_vertex(pi: &Partition) -> FactorChain {
    build_dual_vertex_in(pi, "z")
}

/// `V*_π` in the named variable: odd columns removed give M-factors, even
/// columns L-factors.
pub fn build_dual_vertex_in(pi: &Partition, var: &str) -> FactorChain {
    let mut factors = vec![
        Factor::basic(Action::Multiply, Family::L, &[(var, 1)]),
        Factor::basic(Action::Skew, Family::M, &[(var, -1)]),
    ];
    for k in (1..=pi.len()).step_by(2) {
        let shape = Shape::skew(pi.clone(), Partition::column(k));
        factors.push(Factor::skew(Family::M, shape, &[(var, k as i64)]));
    }
    for k in (2..=pi.len()).step_by(2) {
        let shape = Shape::skew(pi.clone(), Partition::column(k));
        factors.push(Factor::skew(Family::L, shape, &[(var, k as i64)]));
    }
    FactorChain::new(factors)
}
