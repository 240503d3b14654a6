//! Suites comparing operator chains coefficient by coefficient: the
//! skew/multiply reorderings, normal ordering of vertex strings, and the
//! collapse of mutually inverse series.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::{series_term_of, Family};
use crate::symfunc::SymFunc;
use crate::vertex::{
    apply_operators, build_dual_vertex_in, build_vertex_in, diagonal_chain, diagonal_skews, hook_pairs,
    normal_order_product, reordering_lhs, reordering_rhs, EvalConfig, FactorChain, Kind, LaurentMap, ReorderCase,
    Window,
};

use super::{range, Case, Interval};

fn first_difference(lhs: &LaurentMap<SymFunc>, rhs: &LaurentMap<SymFunc>) -> Option<Vec<i64>> {
    lhs.coeffs.keys().chain(rhs.coeffs.keys()).filter(|e| lhs.get(e) != rhs.get(e)).min().cloned()
}

fn narrowed(window: &Window, exp: &[i64]) -> Window {
    let coords: Vec<(&str, i64)> = window.vars().iter().map(String::as_str).zip(exp.iter().copied()).collect();
    Window::point(&coords)
}

fn config_with(degree_budget: usize) -> EvalConfig {
    EvalConfig { degree_budget, ..EvalConfig::default() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ReorderingConfig {
    pub cases: Vec<ReorderCase>,
    pub pis: Vec<Partition>,
    /// Exponents of `z`.
    pub i_range: Interval,
    /// Exponents of `w`.
    pub j_range: Interval,
    /// Inputs `s_λ` with `|λ|` up to this bound.
    pub test_degree: usize,
    pub degree_budget: usize,
    /// Flip the family of the unpeeled skew on the right-hand side.
    pub perturb: bool,
}

impl Default for ReorderingConfig {
    fn default() -> Self {
        ReorderingConfig {
            cases: ReorderCase::ALL.to_vec(),
            pis: (1..=4).flat_map(|w| partitions_of(w, None, None)).collect(),
            i_range: (0, 4),
            j_range: (0, 4),
            test_degree: 5,
            degree_budget: crate::DEFAULT_DEGREE_BUDGET,
            perturb: false,
        }
    }
}

impl ReorderingConfig {
    pub fn cases(&self) -> Vec<ReorderingCase> {
        let window = Window::new().with("z", self.i_range.0, self.i_range.1).with("w", self.j_range.0, self.j_range.1);
        let mut out = Vec::new();
        for &case in &self.cases {
            for pi in &self.pis {
                for lambda in partitions_up_to(self.test_degree, None) {
                    out.push(ReorderingCase {
                        case,
                        pi: pi.clone(),
                        lambda,
                        window: window.clone(),
                        degree_budget: self.degree_budget,
                        perturb: self.perturb,
                    });
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReorderingCase {
    pub case: ReorderCase,
    pub pi: Partition,
    pub lambda: Partition,
    pub window: Window,
    pub degree_budget: usize,
    pub perturb: bool,
}

impl Case for ReorderingCase {
    type Output = LaurentMap<SymFunc>;

    fn sides(&self) -> Result<(Self::Output, Self::Output)> {
        let f = SymFunc::schur(self.lambda.clone());
        let config = config_with(self.degree_budget);
        let lhs = apply_operators(&reordering_lhs(self.case, &self.pi), &f, &self.window, &config)?;
        let mut rhs_chain = reordering_rhs(self.case, &self.pi);
        if self.perturb {
            let spec = &mut rhs_chain.factors[1].spec;
            spec.family = spec.family.flipped();
        }
        let rhs = apply_operators(&rhs_chain, &f, &self.window, &config)?;
        Ok((lhs, rhs))
    }

    fn narrow(&self, lhs: &Self::Output, rhs: &Self::Output) -> Self {
        match first_difference(lhs, rhs) {
            Some(exp) => ReorderingCase { window: narrowed(&self.window, &exp), ..self.clone() },
            None => self.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MultivertexConfig {
    pub pis: Vec<Partition>,
    /// Numbers of vertex operators in a string.
    pub lengths: Vec<usize>,
    /// Which strings to check: plain (`false`) and dual (`true`).
    pub duals: Vec<bool>,
    /// The exponent range of every variable.
    pub window: Interval,
    /// Inputs `s_λ`; `[]` is the vacuum `1`.
    pub inputs: Vec<Partition>,
    pub degree_budget: usize,
    /// Drop the first scalar prefactor of the normal-ordered form.
    pub perturb: bool,
}

impl Default for MultivertexConfig {
    fn default() -> Self {
        MultivertexConfig {
            pis: vec![Partition::from([2]), Partition::from([2, 1])],
            lengths: vec![2, 3],
            duals: vec![false, true],
            window: (-3, 3),
            inputs: vec![Partition::empty(), Partition::from([1])],
            degree_budget: crate::DEFAULT_DEGREE_BUDGET,
            perturb: false,
        }
    }
}

impl MultivertexConfig {
    pub fn cases(&self) -> Vec<MultivertexCase> {
        let mut out = Vec::new();
        for pi in &self.pis {
            for &length in &self.lengths {
                for &dual in &self.duals {
                    let vars: Vec<String> = (1..=length).map(|i| format!("z{i}")).collect();
                    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
                    let window = Window::uniform(&names, self.window.0, self.window.1);
                    for input in &self.inputs {
                        out.push(MultivertexCase {
                            pi: pi.clone(),
                            dual,
                            input: input.clone(),
                            window: window.clone(),
                            degree_budget: self.degree_budget,
                            perturb: self.perturb,
                        });
                    }
                }
            }
        }
        out
    }
}

/// A string `V_π(z_1) ⋯ V_π(z_m)` (or its dual) over the window's variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultivertexCase {
    pub pi: Partition,
    pub dual: bool,
    pub input: Partition,
    pub window: Window,
    pub degree_budget: usize,
    pub perturb: bool,
}

impl Case for MultivertexCase {
    type Output = LaurentMap<SymFunc>;

    fn sides(&self) -> Result<(Self::Output, Self::Output)> {
        let vars: Vec<&str> = self.window.vars().iter().map(String::as_str).collect();
        let kind = if self.dual { Kind::Xstar } else { Kind::X };
        let sequential = vars.iter().fold(FactorChain::identity(), |acc, v| {
            acc.then(&if self.dual { build_dual_vertex_in(&self.pi, v) } else { build_vertex_in(&self.pi, v) })
        });
        let mut ordered = normal_order_product(&self.pi, &vec![kind; vars.len()], &vars)?;
        if self.perturb && !ordered.prefactor.is_empty() {
            ordered.prefactor.remove(0);
        }
        let f = SymFunc::schur(self.input.clone());
        let config = config_with(self.degree_budget);
        let lhs = apply_operators(&sequential, &f, &self.window, &config)?;
        let rhs = apply_operators(&ordered.chain(), &f, &self.window, &config)?;
        Ok((lhs, rhs))
    }

    fn narrow(&self, lhs: &Self::Output, rhs: &Self::Output) -> Self {
        match first_difference(lhs, rhs) {
            Some(exp) => MultivertexCase { window: narrowed(&self.window, &exp), ..self.clone() },
            None => self.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct InverseSeriesConfig {
    /// Shapes `σ` with `|σ|` up to this weight for `M_σ L_σ = 1`.
    pub max_sigma_weight: usize,
    /// Symmetric-function degree up to which `M_σ L_σ = 1` is checked.
    pub series_degree: usize,
    /// Hook regrouping `Σ e_i h_j = Σ s_hook` checked up to this weight.
    pub hook_weight: usize,
    /// Partitions `π` with `|π|` up to this weight for the diagonal collapse.
    pub max_pi_weight: usize,
    /// Range of `z` exponents for the hook pairing.
    pub pairing_window: Interval,
    /// Range of `z` exponents for the full diagonal chain `R_π(z,z)`.
    pub diagonal_window: Interval,
    /// Inputs `s_λ` with `|λ|` up to this bound.
    pub test_degree: usize,
    pub degree_budget: usize,
    /// Replace `L_σ` by `M_σ` in the inverse-series products.
    pub perturb: bool,
}

impl Default for InverseSeriesConfig {
    fn default() -> Self {
        InverseSeriesConfig {
            max_sigma_weight: 3,
            series_degree: 12,
            hook_weight: 12,
            max_pi_weight: 4,
            pairing_window: (0, 12),
            diagonal_window: (-4, 4),
            test_degree: 6,
            degree_budget: crate::DEFAULT_DEGREE_BUDGET,
            perturb: false,
        }
    }
}

impl InverseSeriesConfig {
    pub fn cases(&self) -> Vec<InverseSeriesCase> {
        let mut out = Vec::new();
        for sigma in partitions_up_to(self.max_sigma_weight, None) {
            let top = self.series_degree / sigma.weight().max(1);
            for r in 1..=top {
                out.push(InverseSeriesCase::Series {
                    sigma: sigma.clone(),
                    r,
                    degree_budget: self.degree_budget.max(self.series_degree),
                    perturb: self.perturb,
                });
            }
        }
        for n in 1..=self.hook_weight {
            out.push(InverseSeriesCase::Hooks { n });
        }
        for w in 1..=self.max_pi_weight {
            for pi in partitions_of(w, None, None) {
                for lambda in partitions_up_to(self.test_degree, None) {
                    for (form, window) in [
                        (DiagonalForm::Pairs, self.pairing_window),
                        (DiagonalForm::Skews, self.pairing_window),
                        (DiagonalForm::Full, self.diagonal_window),
                    ] {
                        if form == DiagonalForm::Full && lambda.weight() > 3 {
                            continue;
                        }
                        out.push(InverseSeriesCase::Diagonal {
                            pi: pi.clone(),
                            lambda: lambda.clone(),
                            form,
                            window,
                            degree_budget: self.degree_budget,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Which form of `R_π(z,z)` is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagonalForm {
    /// Only the hook pairs `M^⊥_{π/η} L^⊥_{π/η}`.
    Pairs,
    /// Only the row/column skews before regrouping.
    Skews,
    /// The whole chain, multiplications included.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InverseSeriesCase {
    /// Grade `r` of `M_σ(u) L_σ(u)` vanishes.
    Series { sigma: Partition, r: usize, degree_budget: usize, perturb: bool },
    /// `Σ_{i odd} e_i h_{n-i} = Σ_{hooks} s_η = Σ_{i even, (i,n-i) ≠ (0,0)} e_i h_{n-i}`.
    Hooks { n: usize },
    /// A diagonal form applied to `s_λ` leaves only `s_λ` at `z^0`.
    Diagonal { pi: Partition, lambda: Partition, form: DiagonalForm, window: Interval, degree_budget: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InverseSeriesOutput {
    Value(SymFunc),
    Pair(BTreeMap<String, SymFunc>),
    Map(LaurentMap<SymFunc>),
}

impl Case for InverseSeriesCase {
    type Output = InverseSeriesOutput;

    fn sides(&self) -> Result<(Self::Output, Self::Output)> {
        use InverseSeriesOutput as Out;
        match self {
            InverseSeriesCase::Series { sigma, r, degree_budget, perturb } => {
                let g = SymFunc::schur(sigma.clone());
                let second = if *perturb { Family::M } else { Family::L };
                let mut total = SymFunc::zero();
                for a in 0..=*r {
                    let m = series_term_of(Family::M, &g, a, *degree_budget)?;
                    let l = series_term_of(second, &g, r - a, *degree_budget)?;
                    total += &m.product(&l);
                }
                Ok((Out::Value(total), Out::Value(SymFunc::zero())))
            }
            InverseSeriesCase::Hooks { n } => {
                let mut odd = SymFunc::zero();
                let mut even = SymFunc::zero();
                for i in 0..=*n {
                    let term = SymFunc::e(i).product(&SymFunc::h(n - i));
                    if i % 2 == 1 {
                        odd += &term;
                    } else {
                        even += &term;
                    }
                }
                let hooks = (0..*n).fold(SymFunc::zero(), |acc, leg| {
                    let parts = std::iter::once(n - leg).chain(std::iter::repeat_n(1, leg)).collect();
                    acc + SymFunc::schur(Partition::from_unsorted(parts))
                });
                // The (0,0) term only exists for n = 0, so `even` needs no correction.
                let lhs = BTreeMap::from([("odd".to_string(), odd), ("even".to_string(), even)]);
                let rhs = BTreeMap::from([("odd".to_string(), hooks.clone()), ("even".to_string(), hooks)]);
                Ok((Out::Pair(lhs), Out::Pair(rhs)))
            }
            InverseSeriesCase::Diagonal { pi, lambda, form, window, degree_budget } => {
                let chain = match form {
                    DiagonalForm::Pairs => hook_pairs(pi),
                    DiagonalForm::Skews => diagonal_skews(pi),
                    DiagonalForm::Full => diagonal_chain(pi),
                };
                let f = SymFunc::schur(lambda.clone());
                let w = Window::new().with("z", window.0, window.1);
                let lhs = apply_operators(&chain, &f, &w, &config_with(*degree_budget))?;
                let mut coeffs = BTreeMap::new();
                if range(*window).contains(&0) {
                    coeffs.insert(vec![0], f);
                }
                Ok((Out::Map(lhs), Out::Map(LaurentMap { vars: vec!["z".into()], coeffs })))
            }
        }
    }
}
