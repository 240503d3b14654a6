//! Zero-mode reordering identities and the Clifford relations of the modes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::SymFunc;
use crate::vertex::{
    act_directly, anticommutator_with, ChargedState, EvalConfig, Kind, ModeConvention, NormalForm, ZeroMode,
};

use super::{range, Case, Interval};

/// The four zero-mode products met when anticommuting full vertex
/// operators, each with its normal-ordered right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ZeroModeIdentity {
    /// `e^{iq} z^{α0} e^{iq} w^{α0} = z̄ w̄² (zw)^{α0} e^{2iq}`.
    XX,
    /// `z^{-α0} e^{-iq} w^{-α0} e^{-iq} = w̄ (zw)^{-α0} e^{-2iq}`.
    XstarXstar,
    /// `e^{iq} z^{α0} w^{-α0} e^{-iq} = z̄ w (z w̄)^{α0}`.
    XXstar,
    /// `w^{-α0} e^{-iq} e^{iq} z^{α0} = (z w̄)^{α0}`.
    XstarX,
}

impl ZeroModeIdentity {
    pub const ALL: [ZeroModeIdentity; 4] =
        [ZeroModeIdentity::XX, ZeroModeIdentity::XstarXstar, ZeroModeIdentity::XXstar, ZeroModeIdentity::XstarX];

    pub fn lhs(self) -> Vec<ZeroMode> {
        let (z, w) = (|p| ZeroMode::alpha("z", p), |p| ZeroMode::alpha("w", p));
        match self {
            ZeroModeIdentity::XX => vec![ZeroMode::RaiseQ, z(1), ZeroMode::RaiseQ, w(1)],
            ZeroModeIdentity::XstarXstar => vec![z(-1), ZeroMode::LowerQ, w(-1), ZeroMode::LowerQ],
            ZeroModeIdentity::XXstar => vec![ZeroMode::RaiseQ, z(1), w(-1), ZeroMode::LowerQ],
            ZeroModeIdentity::XstarX => vec![w(-1), ZeroMode::LowerQ, ZeroMode::RaiseQ, z(1)],
        }
    }

    pub fn rhs(self) -> NormalForm {
        let map = |pairs: &[(&str, i64)]| -> BTreeMap<String, i64> {
            pairs.iter().map(|(v, e)| (v.to_string(), *e)).collect()
        };
        match self {
            ZeroModeIdentity::XX => {
                NormalForm { prefactor: map(&[("z", -1), ("w", -2)]), alpha: map(&[("z", 1), ("w", 1)]), shift: 2 }
            }
            ZeroModeIdentity::XstarXstar => {
                NormalForm { prefactor: map(&[("w", -1)]), alpha: map(&[("z", -1), ("w", -1)]), shift: -2 }
            }
            ZeroModeIdentity::XXstar => {
                NormalForm { prefactor: map(&[("z", -1), ("w", 1)]), alpha: map(&[("z", 1), ("w", -1)]), shift: 0 }
            }
            ZeroModeIdentity::XstarX => {
                NormalForm { prefactor: map(&[]), alpha: map(&[("z", 1), ("w", -1)]), shift: 0 }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ZeroModesConfig {
    pub charges: Interval,
    /// Drop the monomial prefactor from every right-hand side.
    pub perturb: bool,
}

impl Default for ZeroModesConfig {
    fn default() -> Self {
        ZeroModesConfig { charges: (-3, 3), perturb: false }
    }
}

impl ZeroModesConfig {
    pub fn cases(&self) -> Vec<ZeroModeCase> {
        ZeroModeIdentity::ALL
            .into_iter()
            .flat_map(|identity| range(self.charges).map(move |charge| (identity, charge)))
            .map(|(identity, charge)| ZeroModeCase { identity, charge, perturb: self.perturb })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroModeCase {
    pub identity: ZeroModeIdentity,
    pub charge: i64,
    pub perturb: bool,
}

/// The monomial a zero-mode product produces on `|c⟩`, and the new charge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorMonomial {
    pub monomial: BTreeMap<String, i64>,
    pub charge: i64,
}

impl Case for ZeroModeCase {
    type Output = SectorMonomial;

    fn sides(&self) -> Result<(SectorMonomial, SectorMonomial)> {
        let (monomial, charge) = act_directly(&self.identity.lhs(), self.charge);
        let lhs = SectorMonomial { monomial, charge };
        let mut rhs_form = self.identity.rhs();
        if self.perturb {
            rhs_form.prefactor.clear();
        }
        let (monomial, charge) = rhs_form.act(self.charge);
        Ok((lhs, SectorMonomial { monomial, charge }))
    }
}

/// Which anticommutator is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// `{X_m, X_n} = 0`.
    XX,
    /// `{X*_m, X*_n} = 0`.
    XstarXstar,
    /// `{X_m, X*_n} = δ_{m+n,0}`.
    XXstar,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::XX, Relation::XstarXstar, Relation::XXstar];

    fn kinds(self) -> (Kind, Kind) {
        match self {
            Relation::XX => (Kind::X, Kind::X),
            Relation::XstarXstar => (Kind::Xstar, Kind::Xstar),
            Relation::XXstar => (Kind::X, Kind::Xstar),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CliffordConfig {
    pub pis: Vec<Partition>,
    pub modes: Interval,
    /// Basis states `s_λ` with `|λ|` up to this bound.
    pub degree_bound: usize,
    pub charges: Interval,
    pub degree_budget: usize,
    /// Read the charge after the shift instead of before it.
    pub perturb: bool,
}

impl Default for CliffordConfig {
    fn default() -> Self {
        CliffordConfig {
            pis: ["[]", "[2]", "[1,1]", "[3]", "[2,1]", "[4]"].iter().map(|s| s.parse().unwrap()).collect(),
            modes: (-3, 3),
            degree_bound: 5,
            charges: (-1, 1),
            degree_budget: crate::DEFAULT_DEGREE_BUDGET,
            perturb: false,
        }
    }
}

impl CliffordConfig {
    pub fn cases(&self) -> Vec<CliffordCase> {
        let convention = if self.perturb { ModeConvention::PostShift } else { ModeConvention::ChargeAware };
        let mut out = Vec::new();
        for pi in &self.pis {
            for relation in Relation::ALL {
                for m in range(self.modes) {
                    for n in range(self.modes) {
                        for charge in range(self.charges) {
                            for lambda in partitions_up_to(self.degree_bound, None) {
                                out.push(CliffordCase {
                                    pi: pi.clone(),
                                    relation,
                                    m,
                                    n,
                                    charge,
                                    lambda,
                                    convention,
                                    degree_budget: self.degree_budget,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordCase {
    pub pi: Partition,
    pub relation: Relation,
    pub m: i64,
    pub n: i64,
    pub charge: i64,
    pub lambda: Partition,
    pub convention: ModeConvention,
    pub degree_budget: usize,
}

impl Case for CliffordCase {
    type Output = ChargedState;

    fn sides(&self) -> Result<(ChargedState, ChargedState)> {
        let state = ChargedState::pure(self.charge, SymFunc::schur(self.lambda.clone()));
        let (a, b) = self.relation.kinds();
        let config = EvalConfig { degree_budget: self.degree_budget, ..EvalConfig::default() };
        let lhs = anticommutator_with((&self.pi, a, self.m), (&self.pi, b, self.n), &state, self.convention, &config)?;
        let rhs = if self.relation == Relation::XXstar && self.m + self.n == 0 { state } else { ChargedState::zero() };
        Ok((lhs, rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::zero_mode_normal_form;

    #[test]
    fn right_hand_sides_are_the_normal_forms() {
        for identity in ZeroModeIdentity::ALL {
            assert_eq!(zero_mode_normal_form(&identity.lhs()), identity.rhs(), "{identity:?}");
        }
    }

    #[test]
    fn charge_zero_example() {
        let case = ZeroModeCase { identity: ZeroModeIdentity::XX, charge: 0, perturb: false };
        let (lhs, rhs) = case.sides().unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.monomial, BTreeMap::from([("z".to_string(), 1)]));
        assert_eq!(lhs.charge, 2);
    }
}
