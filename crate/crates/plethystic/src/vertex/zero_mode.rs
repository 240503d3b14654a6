//! Zero modes `e^{±iq}` and `z^{tα_0}`, represented only through their action
//! on charge sectors: `α_0` reads the charge and `e^{±iq}` shifts it.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZeroMode {
    /// `e^{iq}`.
    RaiseQ,
    /// `e^{-iq}`.
    LowerQ,
    /// `var^{power·α_0}`.
    AlphaPow { var: String, power: i64 },
}

impl ZeroMode {
    pub fn alpha(var: &str, power: i64) -> Self {
        ZeroMode::AlphaPow { var: var.to_string(), power }
    }
}

impl fmt::Display for ZeroMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroMode::RaiseQ => write!(f, "e^(iq)"),
            ZeroMode::LowerQ => write!(f, "e^(-iq)"),
            ZeroMode::AlphaPow { var, power: 1 } => write!(f, "{var}^(α0)"),
            ZeroMode::AlphaPow { var, power } => write!(f, "{var}^({power}α0)"),
        }
    }
}

/// `∏ var^{prefactor} · ∏ var^{alpha·α_0} · e^{shift·iq}`, with every charge
/// shift moved to the right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub prefactor: BTreeMap<String, i64>,
    pub alpha: BTreeMap<String, i64>,
    pub shift: i64,
}

impl NormalForm {
    /// Action on `|c⟩`: the monomial produced and the resulting charge.
    pub fn act(&self, charge: i64) -> (BTreeMap<String, i64>, i64) {
        let mut mono = self.prefactor.clone();
        for (v, a) in &self.alpha {
            *mono.entry(v.clone()).or_insert(0) += a * (charge + self.shift);
        }
        mono.retain(|_, e| *e != 0);
        (mono, charge + self.shift)
    }

    pub fn to_symbols(&self) -> Vec<ZeroMode> {
        let mut out: Vec<ZeroMode> = self.alpha.iter().map(|(v, a)| ZeroMode::alpha(v, *a)).collect();
        let step = if self.shift > 0 { ZeroMode::RaiseQ } else { ZeroMode::LowerQ };
        out.extend(std::iter::repeat_n(step, self.shift.unsigned_abs() as usize));
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (v, e) in &self.prefactor {
            parts.push(if *e == 1 { v.clone() } else { format!("{v}^{e}") });
        }
        for (v, a) in &self.alpha {
            parts.push(if *a == 1 { format!("{v}^(α0)") } else { format!("{v}^({a}α0)") });
        }
        if self.shift != 0 {
            parts.push(format!("e^({}iq)", self.shift));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// Normal form of a suffix written left to right, using
/// `e^{s·iq} u^{t·α_0} = u^{-st} u^{t·α_0} e^{s·iq}`.
pub fn zero_mode_normal_form(suffix: &[ZeroMode]) -> NormalForm {
    let mut nf = NormalForm::default();
    for sym in suffix {
        match sym {
            ZeroMode::RaiseQ => nf.shift += 1,
            ZeroMode::LowerQ => nf.shift -= 1,
            ZeroMode::AlphaPow { var, power } => {
                *nf.prefactor.entry(var.clone()).or_insert(0) -= nf.shift * power;
                *nf.alpha.entry(var.clone()).or_insert(0) += power;
            }
        }
    }
    nf.prefactor.retain(|_, e| *e != 0);
    nf.alpha.retain(|_, e| *e != 0);
    nf
}

/// Applies a suffix to `|c⟩` symbol by symbol, right to left.
pub fn act_directly(suffix: &[ZeroMode], charge: i64) -> (BTreeMap<String, i64>, i64) {
    let mut mono: BTreeMap<String, i64> = BTreeMap::new();
    let mut c = charge;
    for sym in suffix.iter().rev() {
        match sym {
            ZeroMode::RaiseQ => c += 1,
            ZeroMode::LowerQ => c -= 1,
            ZeroMode::AlphaPow { var, power } => *mono.entry(var.clone()).or_insert(0) += power * c,
        }
    }
    mono.retain(|_, e| *e != 0);
    (mono, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().filter(|(_, e)| *e != 0).map(|(v, e)| (v.to_string(), *e)).collect()
    }

    #[test]
    fn two_raisings() {
        let suffix = [ZeroMode::RaiseQ, ZeroMode::alpha("z", 1), ZeroMode::RaiseQ, ZeroMode::alpha("w", 1)];
        let nf = zero_mode_normal_form(&suffix);
        assert_eq!(nf.prefactor, mono(&[("z", -1), ("w", -2)]));
        assert_eq!(nf.alpha, mono(&[("z", 1), ("w", 1)]));
        assert_eq!(nf.shift, 2);
        assert_eq!(nf.act(0), (mono(&[("z", 1)]), 2));
    }

    #[test]
    fn two_lowerings() {
        let suffix = [ZeroMode::alpha("z", -1), ZeroMode::LowerQ, ZeroMode::alpha("w", -1), ZeroMode::LowerQ];
        let nf = zero_mode_normal_form(&suffix);
        assert_eq!(nf.prefactor, mono(&[("w", -1)]));
        assert_eq!(nf.alpha, mono(&[("z", -1), ("w", -1)]));
        assert_eq!(nf.shift, -2);
    }

    #[test]
    fn empty_suffix() {
        let nf = zero_mode_normal_form(&[]);
        assert_eq!(nf, NormalForm::default());
        assert_eq!(nf.to_string(), "1");
    }

    #[test]
    fn normal_form_matches_direct_action() {
        let syms = [ZeroMode::RaiseQ, ZeroMode::LowerQ, ZeroMode::alpha("z", 1), ZeroMode::alpha("w", -2)];
        // Every suffix of length ≤ 4 over the symbol set.
        for len in 0..=4u32 {
            for code in 0..4usize.pow(len) {
                let suffix: Vec<ZeroMode> =
                    (0..len).map(|i| syms[(code / 4usize.pow(i)) % 4].clone()).collect();
                let nf = zero_mode_normal_form(&suffix);
                for c in -3..=3 {
                    assert_eq!(nf.act(c), act_directly(&suffix, c), "{suffix:?} at {c}");
                }
            }
        }
    }
}
