//! Modes of the full vertex operators `X_π(z) = V_π(z) e^{iq} z^{α_0}` and
//! `X*_π(z) = V*_π(z) z^{-α_0} e^{-iq}`, and vertex strings.
//!
//! On a sector `|c, f⟩` the zero modes contribute `z^c` (for X) or
//! `z^{-(c-1)}` (for X*), so the mode of index `m` reads the coefficient of
//! `V_π(z) f` at `z^{-m-c}` and the dual mode reads `V*_π(z) f` at
//! `z^{-m+c-1}`. With this reading `{X_m, X*_n} = δ_{m+n,0}`.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::Partition;
use crate::symfunc::SymFunc;
use crate::vertex::chain::{build_dual_vertex_in, build_vertex_in, FactorChain};
use crate::vertex::eval::{apply_operators, EvalConfig, Window};
use crate::vertex::state::ChargedState;

/// Longest vertex string evaluated by default.
pub const DEFAULT_STRING_LENGTH: usize = 4;

/// `X` is built on `V_π`, `Xstar` on `V*_π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    X,
    Xstar,
}

impl Kind {
    fn chain(self, pi: &Partition, var: &str) -> FactorChain {
        match self {
            Kind::X => build_vertex_in(pi, var),
            Kind::Xstar => build_dual_vertex_in(pi, var),
        }
    }

    fn charge_step(self) -> i64 {
        match self {
            Kind::X => 1,
            Kind::Xstar => -1,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::X => "X",
            Kind::Xstar => "Xstar",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" | "x" => Ok(Kind::X),
            "Xstar" | "xstar" | "X*" => Ok(Kind::Xstar),
            _ => Err(Error::Parse(format!("unknown mode kind {s:?}"))),
        }
    }
}

/// Which charge the `z^{±α_0}` factor reads when extracting a mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeConvention {
    /// The input charge, as the operator order dictates.
    #[default]
    ChargeAware,
    /// No charge at all: always the coefficient at `z^{-m}`.
    ChargeBlind,
    /// The charge after the shift, which misplaces every mode by one.
    PostShift,
}

impl FromStr for ModeConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "charge-aware" => Ok(ModeConvention::ChargeAware),
            "charge-blind" => Ok(ModeConvention::ChargeBlind),
            "post-shift" => Ok(ModeConvention::PostShift),
            _ => Err(Error::Parse(format!("unknown mode convention {s:?}"))),
        }
    }
}

/// Exponent of `z` in `V_π(z) f` (or `V*_π(z) f`) read by mode `m` on a
/// sector of charge `c`.
pub fn mode_exponent(kind: Kind, m: i64, c: i64, convention: ModeConvention) -> i64 {
    match (convention, kind) {
        (ModeConvention::ChargeBlind, _) => -m,
        (ModeConvention::ChargeAware, Kind::X) => -m - c,
        (ModeConvention::ChargeAware, Kind::Xstar) => -m + c - 1,
        (ModeConvention::PostShift, Kind::X) => -m - (c + 1),
        (ModeConvention::PostShift, Kind::Xstar) => -m + (c - 1) - 1,
    }
}

static COEFFS: Lazy<Memo<(Partition, Kind, i64, Partition), SymFunc>> = Lazy::new(Memo::new);

/// `[z^k] V_π(z) s_λ` (or the dual), memoized.
fn vertex_coefficient(pi: &Partition, kind: Kind, k: i64, lambda: &Partition, config: &EvalConfig) -> Result<SymFunc> {
    let key = (pi.clone(), kind, k, lambda.clone());
    let value = COEFFS.try_get_or_insert_with(&key, || {
        let out = apply_operators(
            &kind.chain(pi, "z"),
            &SymFunc::schur(lambda.clone()),
            &Window::point(&[("z", k)]),
            config,
        )?;
        Ok::<_, Error>(out.get(&[k]).cloned().unwrap_or_default())
    })?;
    Ok((*value).clone())
}

/// The mode `X^π_m` or `X*^π_m` applied to `state`.
pub fn mode(pi: &Partition, kind: Kind, m: i64, state: &ChargedState) -> Result<ChargedState> {
    mode_with(pi, kind, m, state, ModeConvention::default(), &EvalConfig::default())
}

pub fn mode_with(
    pi: &Partition,
    kind: Kind,
    m: i64,
    state: &ChargedState,
    convention: ModeConvention,
    config: &EvalConfig,
) -> Result<ChargedState> {
    let mut out = ChargedState::zero();
    for (c, f) in state.sectors() {
        let k = mode_exponent(kind, m, c, convention);
        let mut image = SymFunc::zero();
        for (lambda, coeff) in f.iter() {
            image.add_scaled(&vertex_coefficient(pi, kind, k, lambda, config)?, coeff);
        }
        out.add_sector(c + kind.charge_step(), &image);
    }
    Ok(out)
}

/// `{A_m, B_n}` applied to `state`. Both modes must share the same `π`.
pub fn anticommutator(
    a: (&Partition, Kind, i64),
    b: (&Partition, Kind, i64),
    state: &ChargedState,
) -> Result<ChargedState> {
    anticommutator_with(a, b, state, ModeConvention::default(), &EvalConfig::default())
}

pub fn anticommutator_with(
    (pi_a, kind_a, m): (&Partition, Kind, i64),
    (pi_b, kind_b, n): (&Partition, Kind, i64),
    state: &ChargedState,
    convention: ModeConvention,
    config: &EvalConfig,
) -> Result<ChargedState> {
    if pi_a != pi_b {
        return Err(Error::Unsupported(format!("modes of different partitions {pi_a} and {pi_b}")));
    }
    let apply = |kind, idx, s: &ChargedState| mode_with(pi_a, kind, idx, s, convention, config);
    let ab = apply(kind_a, m, &apply(kind_b, n, state)?)?;
    let ba = apply(kind_b, n, &apply(kind_a, m, state)?)?;
    Ok(ab + ba)
}

/// `[z_1^{λ_1} ⋯ z_m^{λ_m}] V_π(z_1) ⋯ V_π(z_m) · 1`, or the same with
/// `V*_π` when `dual` is set.
pub fn vertex_string(pi: &Partition, lambda: &Partition, dual: bool) -> Result<SymFunc> {
    vertex_string_with(pi, lambda, dual, DEFAULT_STRING_LENGTH, &EvalConfig::default())
}

pub fn vertex_string_with(
    pi: &Partition,
    lambda: &Partition,
    dual: bool,
    max_length: usize,
    config: &EvalConfig,
) -> Result<SymFunc> {
    if lambda.len() > max_length {
        return Err(Error::Unsupported(format!(
            "vertex string of length {} exceeds the bound {max_length}",
            lambda.len()
        )));
    }
    let kind = if dual { Kind::Xstar } else { Kind::X };
    let vars: Vec<String> = (1..=lambda.len()).map(|i| format!("z{i}")).collect();
    let chain = vars.iter().fold(FactorChain::identity(), |acc, v| acc.then(&kind.chain(pi, v)));
    let point: Vec<(&str, i64)> = vars.iter().zip(lambda.parts()).map(|(v, p)| (v.as_str(), *p as i64)).collect();
    let exp: Vec<i64> = lambda.parts().iter().map(|p| *p as i64).collect();
    let out = apply_operators(&chain, &SymFunc::one(), &Window::point(&point), config)?;
    Ok(out.get(&exp).cloned().unwrap_or_default())
}
