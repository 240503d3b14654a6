//! Exact evaluation of factor chains inside coefficient windows.
//!
//! Factors are applied right to left over a sparse map from exponent vectors
//! to symmetric functions. Skews are finite because a skew by degree `r|σ|`
//! kills anything of lower degree. Multiplications and scalar series are
//! infinite; they are cut off using a bound on how far the factors still to
//! the left can move each exponent, which is linear in the current degree.
//! A term that can no longer reach the window is dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plethysm::DEFAULT_DEGREE_BUDGET;
use crate::series::{scalar_term, series_term_of, Family};
use crate::symfunc::{Rational, SymFunc};
use crate::vertex::chain::{Action, FactorChain};
use crate::vertex::state::ChargedState;
use crate::vertex::zero_mode::zero_mode_normal_form;

/// Per-variable inclusive exponent ranges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Window {
    vars: Vec<String>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Window {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds (or replaces) the range `lo..=hi` for `var`.
    pub fn with(mut self, var: &str, lo: i64, hi: i64) -> Self {
        if let Some(i) = self.vars.iter().position(|v| v == var) {
            self.lo[i] = lo;
            self.hi[i] = hi;
        } else {
            self.vars.push(var.to_string());
            self.lo.push(lo);
            self.hi.push(hi);
        }
        self
    }

    /// The single exponent vector given.
    pub fn point(coords: &[(&str, i64)]) -> Self {
        coords.iter().fold(Window::new(), |w, (v, e)| w.with(v, *e, *e))
    }

    /// The same range `lo..=hi` for each variable.
    pub fn uniform(vars: &[&str], lo: i64, hi: i64) -> Self {
        vars.iter().fold(Window::new(), |w, v| w.with(v, lo, hi))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn bounds(&self, var: &str) -> Option<(i64, i64)> {
        self.vars.iter().position(|v| v == var).map(|i| (self.lo[i], self.hi[i]))
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    /// Number of exponent vectors inside the window.
    pub fn size(&self) -> u128 {
        self.lo.iter().zip(&self.hi).map(|(l, h)| if h < l { 0 } else { (h - l + 1) as u128 }).product()
    }

    /// Every exponent vector in the window, in lexicographic order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            out = out.into_iter().flat_map(|p| (*l..=*h).map(move |e| [p.clone(), vec![e]].concat())).collect();
        }
        out
    }

    fn shifted(&self, offset: &[i64]) -> Window {
        Window {
            vars: self.vars.clone(),
            lo: self.lo.iter().zip(offset).map(|(l, o)| l - o).collect(),
            hi: self.hi.iter().zip(offset).map(|(h, o)| h - o).collect(),
        }
    }

    /// Enlarged by `k` in every direction.
    pub fn widened(&self, k: i64) -> Window {
        Window {
            vars: self.vars.clone(),
            lo: self.lo.iter().map(|l| l - k).collect(),
            hi: self.hi.iter().map(|h| h + k).collect(),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.vars.len() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}∈[{},{}]", self.vars[i], self.lo[i], self.hi[i])?;
        }
        Ok(())
    }
}

/// Exact Laurent coefficients over named variables. Only coefficients inside
/// the requested window are reported; absent entries inside it are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMap<T> {
    pub vars: Vec<String>,
    pub coeffs: BTreeMap<Vec<i64>, T>,
}

impl<T> LaurentMap<T> {
    pub fn get(&self, exp: &[i64]) -> Option<&T> {
        self.coeffs.get(exp)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffRecord<T> {
    exp: Vec<i64>,
    value: T,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LaurentRecord<T> {
    vars: Vec<String>,
    coeffs: Vec<CoeffRecord<T>>,
}

impl<T: Serialize + Clone> Serialize for LaurentMap<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRecord {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|(e, v)| CoeffRecord { exp: e.clone(), value: v.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for LaurentMap<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LaurentRecord::<T>::deserialize(d)?;
        Ok(LaurentMap { vars: r.vars, coeffs: r.coeffs.into_iter().map(|c| (c.exp, c.value)).collect() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalConfig {
    /// Largest plethysm degree any series term may need.
    pub degree_budget: usize,
    /// Largest number of intermediate terms one evaluation may create.
    pub term_budget: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { degree_budget: DEFAULT_DEGREE_BUDGET, term_budget: 5_000_000 }
    }
}

/// Applies the chain to every sector of `state`. Zero modes act first: each
/// sector contributes a monomial and a charge shift, and the operator factors
/// are evaluated in the correspondingly shifted window.
pub fn apply_chain(
    chain: &FactorChain,
    state: &ChargedState,
    window: &Window,
    config: &EvalConfig,
) -> Result<LaurentMap<ChargedState>> {
    let nf = zero_mode_normal_form(&chain.zero_modes);
    let mut coeffs: BTreeMap<Vec<i64>, ChargedState> = BTreeMap::new();
    for (charge, f) in state.sectors() {
        let (mono, new_charge) = nf.act(charge);
        let mut offset = vec![0; window.vars.len()];
        for (v, e) in &mono {
            let i = window
                .vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::Unbounded(format!("variable {v} has no window")))?;
            offset[i] = *e;
        }
        let inner = apply_operators(chain, f, &window.shifted(&offset), config)?;
        for (exp, value) in inner.coeffs {
            let shifted: Vec<i64> = exp.iter().zip(&offset).map(|(e, o)| e + o).collect();
            coeffs.entry(shifted).or_default().add_sector(new_charge, &value);
        }
    }
    coeffs.retain(|_, s| !s.is_zero());
    Ok(LaurentMap { vars: window.vars.clone(), coeffs })
}

/// `a + b·d`, a bound on exponent movement for operands of degree `d`.
#[derive(Clone, Copy, Debug)]
struct Linear {
    a: i64,
    b: Ratio<i64>,
}

impl Linear {
    const ZERO: Linear = Linear { a: 0, b: Ratio::new_raw(0, 1) };

    fn at(&self, d: usize) -> i64 {
        self.a + (self.b * Ratio::from_integer(d as i64)).floor().to_integer()
    }
}

fn add_bound(slot: &mut Option<Linear>, extra: Option<Linear>) {
    *slot = match (*slot, extra) {
        (Some(x), Some(y)) => Some(Linear { a: x.a + y.a, b: x.b + y.b }),
        _ => None,
    };
}

enum Step {
    Identity,
    Operator { action: Action, family: Family, g: SymFunc, g_deg: usize, v: Vec<i64> },
    Scalar { family: Family, c: Rational, finite: Option<usize>, v: Vec<i64> },
}

impl Step {
    fn exponents(&self) -> Option<&[i64]> {
        match self {
            Step::Identity => None,
            Step::Operator { v, .. } | Step::Scalar { v, .. } => Some(v),
        }
    }
}

/// How far the steps `0..k` can still move each exponent: `dec[j]` bounds
/// the total decrease and `inc[j]` the total increase, `None` if unbounded.
#[derive(Clone)]
struct Reach {
    dec: Vec<Option<Linear>>,
    inc: Vec<Option<Linear>>,
}

fn reach_of(steps: &[Step], n_vars: usize) -> Reach {
    let mut reach = Reach { dec: vec![Some(Linear::ZERO); n_vars], inc: vec![Some(Linear::ZERO); n_vars] };
    let mut degree_bounded = true;
    for step in steps.iter().rev() {
        let Some(v) = step.exponents() else { continue };
        for (j, &vj) in v.iter().enumerate() {
            if vj == 0 {
                continue;
            }
            let extra = match step {
                Step::Operator { action: Action::Skew, g_deg, .. } => degree_bounded
                    .then(|| Linear { a: 0, b: Ratio::new(vj.abs(), *g_deg as i64) }),
                Step::Operator { action: Action::Multiply, .. } => None,
                Step::Scalar { finite: Some(c), .. } => Some(Linear { a: vj.abs() * *c as i64, b: Ratio::zero() }),
                Step::Scalar { finite: None, .. } => None,
                Step::Identity => unreachable!(),
            };
            if vj > 0 {
                add_bound(&mut reach.inc[j], extra);
            } else {
                add_bound(&mut reach.dec[j], extra);
            }
        }
        if matches!(step, Step::Operator { action: Action::Multiply, .. }) {
            degree_bounded = false;
        }
    }
    reach
}

impl Reach {
    fn can_reach(&self, e: &[i64], d: usize, lo: &[i64], hi: &[i64]) -> bool {
        for j in 0..e.len() {
            if let Some(dec) = self.dec[j] {
                if e[j] - dec.at(d) > hi[j] {
                    return false;
                }
            }
            if let Some(inc) = self.inc[j] {
                if e[j] + inc.at(d) < lo[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Number of grades `r` of an infinite factor (exponent step `v`, degree
    /// step `g`) worth applying to a term at `e` of degree `d`: past it every
    /// term is provably outside the window.
    fn grade_limit(&self, e: &[i64], d: usize, v: &[i64], g: usize, lo: &[i64], hi: &[i64]) -> Option<usize> {
        let g = Ratio::from_integer(g as i64);
        let d = Ratio::from_integer(d as i64);
        let mut best: Option<usize> = None;
        for j in 0..e.len() {
            let vj = Ratio::from_integer(v[j]);
            let ej = Ratio::from_integer(e[j]);
            // Falls out above: e + r v - (a + b(d + r g)) > hi.
            if let Some(dec) = self.dec[j] {
                let slope = vj - dec.b * g;
                if slope > Ratio::zero() {
                    let x = Ratio::from_integer(hi[j] + dec.a) + dec.b * d - ej;
                    best = min_opt(best, first_beyond(x, slope));
                }
            }
            // Falls out below: e + r v + (a + b(d + r g)) < lo.
            if let Some(inc) = self.inc[j] {
                let slope = -(vj + inc.b * g);
                if slope > Ratio::zero() {
                    let x = ej + Ratio::from_integer(inc.a) + inc.b * d - Ratio::from_integer(lo[j]);
                    best = min_opt(best, first_beyond(x, slope));
                }
            }
        }
        best
    }
}

/// Smallest `r ≥ 0` with `r·slope > x`.
fn first_beyond(x: Ratio<i64>, slope: Ratio<i64>) -> Option<usize> {
    if x < Ratio::zero() {
        return Some(0);
    }
    (x / slope).floor().to_integer().checked_add(1).and_then(|r| r.to_usize())
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn prepare(chain: &FactorChain, vars: &[String]) -> Result<Vec<Step>> {
    chain
        .factors
        .iter()
        .map(|factor| {
            let mut v = vec![0; vars.len()];
            for (name, e) in &factor.exponents {
                let j = vars
                    .iter()
                    .position(|w| w == name)
                    .ok_or_else(|| Error::Unbounded(format!("variable {name} has no window")))?;
                v[j] = *e;
            }
            let g = factor.spec.shape.symfunc();
            if g.is_zero() {
                return Ok(Step::Identity);
            }
            if !g.is_homogeneous() {
                return Err(Error::Unsupported(format!("inhomogeneous series shape {}", factor.spec.shape)));
            }
            let family = factor.spec.family;
            if let Some(c) = g.as_constant() {
                let finite = match family {
                    Family::L if c.is_integer() && c >= Rational::zero() => c.to_integer().to_usize(),
                    _ => None,
                };
                return Ok(Step::Scalar { family, c, finite, v });
            }
            let g_deg = g.max_degree().unwrap_or(0);
            Ok(Step::Operator { action: factor.action, family, g, g_deg, v })
        })
        .collect()
}

/// Applies the operator factors of `chain` (ignoring its zero modes) to `f`
/// and returns every coefficient inside `window`.
pub fn apply_operators(
    chain: &FactorChain,
    f: &SymFunc,
    window: &Window,
    config: &EvalConfig,
) -> Result<LaurentMap<SymFunc>> {
    let vars = window.vars.clone();
    let mut result = LaurentMap { vars: vars.clone(), coeffs: BTreeMap::new() };
    if window.is_empty() || f.is_zero() {
        return Ok(result);
    }
    let steps = prepare(chain, &vars)?;
    let reach: Vec<Reach> = (0..=steps.len()).map(|k| reach_of(&steps[..k], vars.len())).collect();
    let (lo, hi) = (&window.lo, &window.hi);
    let mut budget = config.term_budget;
    let mut spend = |n: usize| -> Result<()> {
        budget = budget.checked_sub(n).ok_or(Error::WindowTooLarge { budget: config.term_budget })?;
        Ok(())
    };

    let origin = vec![0i64; vars.len()];
    let mut current: HashMap<Vec<i64>, SymFunc> = HashMap::new();
    if reach[steps.len()].can_reach(&origin, f.max_degree().unwrap_or(0), lo, hi) {
        current.insert(origin, f.clone());
    }

    for (k, step) in steps.iter().enumerate().rev() {
        let remaining = &reach[k];
        let mut next: HashMap<Vec<i64>, SymFunc> = HashMap::new();
        let emit = |e: Vec<i64>, value: SymFunc, next: &mut HashMap<Vec<i64>, SymFunc>| {
            if value.is_zero() {
                return;
            }
            if !remaining.can_reach(&e, value.max_degree().unwrap_or(0), lo, hi) {
                return;
            }
            *next.entry(e).or_default() += &value;
        };
        let mut keys: Vec<Vec<i64>> = current.keys().cloned().collect();
        keys.sort();
        for e in keys {
            let f = &current[&e];
            let d = f.max_degree().unwrap_or(0);
            match step {
                Step::Identity => emit(e.clone(), f.clone(), &mut next),
                Step::Operator { action: Action::Skew, family, g, g_deg, v } => {
                    for r in 0..=d / g_deg {
                        let term = series_term_of(*family, g, r, config.degree_budget)?;
                        spend(1)?;
                        emit(shift(&e, v, r), f.skew(&term), &mut next);
                    }
                }
                Step::Operator { action: Action::Multiply, family, g, g_deg, v } => {
                    let limit = remaining
                        .grade_limit(&e, d, v, *g_deg, lo, hi)
                        .ok_or_else(|| Error::Unbounded(format!("multiplication by {family} series at step {k}")))?;
                    for r in 0..limit {
                        let term = series_term_of(*family, g, r, config.degree_budget)?;
                        spend(1)?;
                        emit(shift(&e, v, r), f.product(&term), &mut next);
                    }
                }
                Step::Scalar { family, c, finite, v } => {
                    let limit = match finite {
                        Some(n) => n + 1,
                        None => remaining
                            .grade_limit(&e, d, v, 0, lo, hi)
                            .ok_or_else(|| Error::Unbounded(format!("scalar {family} series at step {k}")))?,
                    };
                    for r in 0..limit {
                        spend(1)?;
                        emit(shift(&e, v, r), f.scale(&scalar_term(*family, c, r)), &mut next);
                    }
                }
            }
        }
        current = next;
    }
    for (e, value) in current {
        if !value.is_zero() && e.iter().enumerate().all(|(j, x)| lo[j] <= *x && *x <= hi[j]) {
            result.coeffs.insert(e, value);
        }
    }
    Ok(result)
}

fn shift(e: &[i64], v: &[i64], r: usize) -> Vec<i64> {
    e.iter().zip(v).map(|(x, s)| x + s * r as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::series::Shape;
    use crate::vertex::chain::{build_vertex, Factor};

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::from(parts.to_vec()))
    }

    #[test]
    fn classical_vertex_on_vacuum() {
        let chain = build_vertex(&Partition::empty());
        let out = apply_operators(&chain, &SymFunc::one(), &Window::new().with("z", 0, 3), &EvalConfig::default())
            .unwrap();
        for a in 0..=3usize {
            assert_eq!(out.get(&[a as i64]), Some(&s(&[a])));
        }
        assert_eq!(out.coeffs.len(), 4);
    }

    #[test]
    fn row_vertex_on_vacuum() {
        let chain = build_vertex(&Partition::from([3]));
        let out =
            apply_operators(&chain, &SymFunc::one(), &Window::point(&[("z", 3)]), &EvalConfig::default()).unwrap();
        assert_eq!(out.get(&[3]), Some(&(s(&[3]) - s(&[]))));
    }

    #[test]
    fn identity_chain() {
        let f = s(&[2, 1]) + s(&[1]);
        let out = apply_operators(&FactorChain::identity(), &f, &Window::new().with("z", -2, 2), &EvalConfig::default())
            .unwrap();
        assert_eq!(out.coeffs, BTreeMap::from([(vec![0], f)]));
    }

    #[test]
    fn geometric_series_needs_a_bound() {
        // 1/(1 - z) alone is fine; 1/(1 - z w^-1) with nothing to cap w is not.
        let geo = FactorChain::new(vec![Factor::multiply(Family::M, Shape::Plain(Partition::empty()), &[("z", 1)])]);
        let out = apply_operators(&geo, &SymFunc::one(), &Window::new().with("z", 0, 5), &EvalConfig::default())
            .unwrap();
        assert_eq!(out.coeffs.len(), 6);
        let bad = FactorChain::new(vec![Factor::multiply(
            Family::M,
            Shape::Plain(Partition::empty()),
            &[("z", 1), ("w", -1)],
        )]);
        let window = Window::new().with("z", 0, 5).with("w", -5, 0);
        assert!(apply_operators(&bad, &SymFunc::one(), &window, &EvalConfig::default()).is_ok());
        let window = Window::new().with("z", 0, 5);
        assert!(matches!(
            apply_operators(&bad, &SymFunc::one(), &window, &EvalConfig::default()),
            Err(Error::Unbounded(_))
        ));
    }

    #[test]
    fn term_budget_is_enforced() {
        let chain = build_vertex(&Partition::from([2]));
        let config = EvalConfig { term_budget: 3, ..EvalConfig::default() };
        let err = apply_operators(&chain, &s(&[2, 1]), &Window::new().with("z", -3, 6), &config).unwrap_err();
        assert_eq!(err, Error::WindowTooLarge { budget: 3 });
    }

    #[test]
    fn widening_the_window_does_not_change_coefficients() {
        let chain = build_vertex(&Partition::from([2, 1]));
        let f = s(&[2, 1]) + s(&[3, 1]);
        let window = Window::new().with("z", -2, 3);
        let narrow = apply_operators(&chain, &f, &window, &EvalConfig::default()).unwrap();
        let wide = apply_operators(&chain, &f, &window.widened(2), &EvalConfig::default()).unwrap();
        for (e, v) in &narrow.coeffs {
            assert_eq!(wide.get(e), Some(v));
        }
        for p in window.points() {
            assert_eq!(narrow.get(&p), wide.get(&p));
        }
    }
}
