//! Normal-ordered forms of vertex-operator products and of the skew/multiply
//! reordering rules they are built from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::{Family, Shape};
use crate::vertex::chain::{build_dual_vertex_in, build_vertex_in, Action, Factor, FactorChain};
use crate::vertex::modes::Kind;

/// The four skew-past-multiply reorderings: the first letter is the skewing
/// series `F^⊥_π(z)`, the second the multiplying series `G(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReorderCase {
    MM,
    LM,
    ML,
    LL,
}

impl ReorderCase {
    pub const ALL: [ReorderCase; 4] = [ReorderCase::MM, ReorderCase::LM, ReorderCase::ML, ReorderCase::LL];

    fn families(self) -> (Family, Family) {
        match self {
            ReorderCase::MM => (Family::M, Family::M),
            ReorderCase::LM => (Family::L, Family::M),
            ReorderCase::ML => (Family::M, Family::L),
            ReorderCase::LL => (Family::L, Family::L),
        }
    }
}

impl fmt::Display for ReorderCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for ReorderCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ReorderCase::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown reordering case {s:?}")))
    }
}

/// `F^⊥_π(z) G(w)` as written, before reordering.
pub fn reordering_lhs(case: ReorderCase, pi: &Partition) -> FactorChain {
    let (skew, mult) = case.families();
    FactorChain::new(vec![
        Factor::skew(skew, Shape::Plain(pi.clone()), &[("z", 1)]),
        Factor::basic(Action::Multiply, mult, &[("w", 1)]),
    ])
}

/// The reordered form `G(w) ∏ F'^⊥_{π/κ}(z w^{|κ|})`. Past `M(w)` the skew
/// keeps its family and peels rows; past `L(w)` it peels columns, and the
/// family flips on odd columns.
pub fn reordering_rhs(case: ReorderCase, pi: &Partition) -> FactorChain {
    let (skew, mult) = case.families();
    let mut factors = vec![Factor::basic(Action::Multiply, mult, &[("w", 1)])];
    let (bound, peel): (usize, fn(usize) -> Partition) = match mult {
        Family::M => (pi.largest(), Partition::row),
        Family::L => (pi.len(), Partition::column),
    };
    for k in 0..=bound {
        let family = if mult == Family::L && k % 2 == 1 { skew.flipped() } else { skew };
        push_skew(&mut factors, family, pi, &[peel(k)], &[("z", 1), ("w", k as i64)]);
    }
    FactorChain::new(factors)
}

/// Appends `F^⊥_{π/(κ_1 κ_2 ⋯)}(u)` unless the skew shape vanishes.
fn push_skew(factors: &mut Vec<Factor>, family: Family, pi: &Partition, removed: &[Partition], exps: &[(&str, i64)]) {
    let removed: Vec<Partition> = removed.iter().filter(|k| !k.is_empty()).cloned().collect();
    let shape = if removed.is_empty() {
        Shape::Plain(pi.clone())
    } else {
        Shape::Skew { outer: pi.clone(), removed }
    };
    if !shape.symfunc().is_zero() {
        factors.push(Factor::skew(family, shape, exps));
    }
}

/// A product of vertex operators brought to normal order: a scalar
/// prefactor in the variables times an operator chain with every
/// multiplication to the left of every skew.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalOrdered {
    /// Scalar series factors such as `(1 - z̄w)` or `(1 - z̄w)^{-1}`.
    pub prefactor: Vec<Factor>,
    pub body: FactorChain,
}

impl NormalOrdered {
    /// Prefactor and body as a single chain. Scalars commute with
    /// everything, so they are placed where they act first.
    pub fn chain(&self) -> FactorChain {
        let mut factors = self.body.factors.clone();
        factors.extend(self.prefactor.iter().cloned());
        FactorChain { factors, zero_modes: self.body.zero_modes.clone() }
    }
}

impl fmt::Display for NormalOrdered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.prefactor {
            let power = if factor.spec.family == Family::M { "^-1" } else { "" };
            write!(f, "(1 - ")?;
            write_monomial(f, factor)?;
            write!(f, "){power}·")?;
        }
        write!(f, "{}", self.body)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, factor: &Factor) -> fmt::Result {
    for (i, (v, e)) in factor.exponents.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        match e {
            1 => write!(f, "{v}")?,
            _ => write!(f, "{v}^{e}")?,
        }
    }
    Ok(())
}

/// `(1 - u)` or `(1 - u)^{-1}` as a scalar series factor.
fn scalar(family: Family, exps: &[(&str, i64)]) -> Factor {
    Factor::multiply(family, Shape::Plain(Partition::empty()), exps)
}

/// Normal-ordered form of `K_1(v_1) K_2(v_2) ⋯` for a string of plain vertex
/// operators `V_π` (kind X) or duals `V*_π` (kind Xstar). Homogeneous strings
/// of any length are supported, and mixed strings of length two.
pub fn normal_order_product(pi: &Partition, kinds: &[Kind], vars: &[&str]) -> Result<NormalOrdered> {
    if kinds.len() != vars.len() {
        return Err(Error::Unsupported(format!("{} kinds for {} variables", kinds.len(), vars.len())));
    }
    if kinds.is_empty() {
        return Ok(NormalOrdered { prefactor: vec![], body: FactorChain::identity() });
    }
    if kinds.iter().all(|k| *k == kinds[0]) {
        return Ok(homogeneous(pi, kinds[0], vars));
    }
    match (kinds, vars) {
        ([Kind::X, Kind::Xstar], [z, w]) => Ok(mixed(pi, Kind::X, z, w)),
        ([Kind::Xstar, Kind::X], [z, w]) => Ok(mixed(pi, Kind::Xstar, z, w)),
        _ => Err(Error::Unsupported(format!("mixed vertex strings of length {}", kinds.len()))),
    }
}

fn homogeneous(pi: &Partition, kind: Kind, vars: &[&str]) -> NormalOrdered {
    if vars.len() == 1 {
        let body = match kind {
            Kind::X => build_vertex_in(pi, vars[0]),
            Kind::Xstar => build_dual_vertex_in(pi, vars[0]),
        };
        return NormalOrdered { prefactor: vec![], body };
    }
    let mut prefactor = Vec::new();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            prefactor.push(scalar(Family::L, &[(vars[i], -1), (vars[j], 1)]));
        }
    }
    let (mult, skew, bound) = match kind {
        Kind::X => (Family::M, Family::L, pi.largest()),
        Kind::Xstar => (Family::L, Family::M, pi.len()),
    };
    let mut factors: Vec<Factor> = vars.iter().map(|v| Factor::basic(Action::Multiply, mult, &[(v, 1)])).collect();
    factors.extend(vars.iter().map(|v| Factor::basic(Action::Skew, skew, &[(v, -1)])));
    for tuple in tuples(vars.len(), bound, pi.weight()) {
        let total: usize = tuple.iter().sum();
        let (family, removed): (Family, Vec<Partition>) = match kind {
            Kind::X => (Family::L, tuple.iter().map(|&i| Partition::row(i)).collect()),
            Kind::Xstar => (
                if total % 2 == 1 { Family::M } else { Family::L },
                tuple.iter().map(|&i| Partition::column(i)).collect(),
            ),
        };
        let exps: Vec<(&str, i64)> = vars.iter().zip(&tuple).map(|(v, i)| (*v, *i as i64)).collect();
        push_skew(&mut factors, family, pi, &removed, &exps);
    }
    NormalOrdered { prefactor, body: FactorChain::new(factors) }
}

/// Nonzero tuples of length `m` with entries at most `bound` and total at
/// most `total`, in lexicographic order.
fn tuples(m: usize, bound: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                let used: usize = t.iter().sum();
                (0..=bound.min(total - used)).map(move |i| [t.clone(), vec![i]].concat())
            })
            .collect();
    }
    out.retain(|t| t.iter().any(|&i| i > 0));
    out
}

/// `V_π(z) V*_π(w) = (1 - z̄w)^{-1} R_π(z,w)` and
/// `V*_π(z) V_π(w) = (1 - z̄w)^{-1} S_π(z,w)`.
fn mixed(pi: &Partition, first: Kind, z: &str, w: &str) -> NormalOrdered {
    let prefactor = vec![scalar(Family::M, &[(z, -1), (w, 1)])];
    let (fz, fw) = match first {
        Kind::X => (Family::M, Family::L),
        Kind::Xstar => (Family::L, Family::M),
    };
    let mut factors = vec![
        Factor::basic(Action::Multiply, fz, &[(z, 1)]),
        Factor::basic(Action::Multiply, fw, &[(w, 1)]),
        Factor::basic(Action::Skew, fw, &[(z, -1)]),
        Factor::basic(Action::Skew, fz, &[(w, -1)]),
    ];
    // The V side peels rows and the V* side peels columns; odd columns give M.
    for i in 0..=pi.largest() {
        for j in 0..=pi.len() {
            if i == 0 && j == 0 {
                continue;
            }
            let family = if j % 2 == 1 { Family::M } else { Family::L };
            let removed = [Partition::row(i), Partition::column(j)];
            let exps = match first {
                Kind::X => [(z, i as i64), (w, j as i64)],
                Kind::Xstar => [(z, j as i64), (w, i as i64)],
            };
            push_skew(&mut factors, family, pi, &removed, &exps);
        }
    }
    NormalOrdered { prefactor, body: FactorChain::new(factors) }
}

/// `R_π(z,z)`: the mixed normal-ordered body at coincident arguments. It
/// collapses to the identity.
pub fn diagonal_chain(pi: &Partition) -> FactorChain {
    FactorChain::new(diagonal_head()).then(&diagonal_skews(pi))
}

/// `R_π(z,z)` with its row/column factors regrouped by hooks.
pub fn hook_collapsed_chain(pi: &Partition) -> FactorChain {
    FactorChain::new(diagonal_head()).then(&hook_pairs(pi))
}

/// The row/column skews of `R_π(z,z)`: `F^⊥_{π/((i)(1^j))}(z^{i+j})` with
/// `F = M` for odd `j`.
pub fn diagonal_skews(pi: &Partition) -> FactorChain {
    let mut factors = Vec::new();
    for i in 0..=pi.largest() {
        for j in 0..=pi.len() {
            if i == 0 && j == 0 {
                continue;
            }
            let family = if j % 2 == 1 { Family::M } else { Family::L };
            push_skew(&mut factors, family, pi, &[Partition::row(i), Partition::column(j)], &[("z", (i + j) as i64)]);
        }
    }
    FactorChain::new(factors)
}

/// The same skews regrouped by hooks `η`: each hook contributes the
/// mutually inverse pair `M^⊥_{π/η}(z^{|η|}) L^⊥_{π/η}(z^{|η|})`.
pub fn hook_pairs(pi: &Partition) -> FactorChain {
    let mut factors = Vec::new();
    for n in 1..=pi.weight() {
        for leg in 0..n {
            let hook = Partition::from_unsorted(std::iter::once(n - leg).chain(std::iter::repeat_n(1, leg)).collect());
            let exps = [("z", n as i64)];
            push_skew(&mut factors, Family::M, pi, std::slice::from_ref(&hook), &exps);
            push_skew(&mut factors, Family::L, pi, std::slice::from_ref(&hook), &exps);
        }
    }
    FactorChain::new(factors)
}

fn diagonal_head() -> Vec<Factor> {
    vec![
        Factor::basic(Action::Multiply, Family::M, &[("z", 1)]),
        Factor::basic(Action::Multiply, Family::L, &[("z", 1)]),
        Factor::basic(Action::Skew, Family::L, &[("z", -1)]),
        Factor::basic(Action::Skew, Family::M, &[("z", -1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::SymFunc;
    use crate::vertex::eval::{apply_operators, EvalConfig, Window};

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts.to_vec())
    }

    fn agree(lhs: &FactorChain, rhs: &FactorChain, f: &SymFunc, window: &Window) {
        let config = EvalConfig::default();
        let a = apply_operators(lhs, f, window, &config).unwrap();
        let b = apply_operators(rhs, f, window, &config).unwrap();
        assert_eq!(a, b, "{lhs} vs {rhs} on {f}");
    }

    #[test]
    fn reordering_rules_hold_on_small_inputs() {
        let window = Window::new().with("z", 0, 3).with("w", 0, 3);
        for case in ReorderCase::ALL {
            for pi in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                for f in [SymFunc::one(), SymFunc::schur(p(&[1])), SymFunc::schur(p(&[2, 1]))] {
                    agree(&reordering_lhs(case, &pi), &reordering_rhs(case, &pi), &f, &window);
                }
            }
        }
    }

    #[test]
    fn singleton_strings_are_the_vertex_itself() {
        let pi = p(&[2, 1]);
        let v = normal_order_product(&pi, &[Kind::X], &["z"]).unwrap();
        assert!(v.prefactor.is_empty());
        assert_eq!(v.body, build_vertex_in(&pi, "z"));
    }

    #[test]
    fn pair_products_match_sequential_application() {
        let window = Window::new().with("z", -2, 3).with("w", -2, 3);
        for pi in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            for kinds in [[Kind::X, Kind::X], [Kind::Xstar, Kind::Xstar], [Kind::X, Kind::Xstar], [Kind::Xstar, Kind::X]]
            {
                let single = |k: Kind, v: &str| match k {
                    Kind::X => build_vertex_in(&pi, v),
                    Kind::Xstar => build_dual_vertex_in(&pi, v),
                };
                let lhs = single(kinds[0], "z").then(&single(kinds[1], "w"));
                let rhs = normal_order_product(&pi, &kinds, &["z", "w"]).unwrap().chain();
                for f in [SymFunc::one(), SymFunc::schur(p(&[1])), SymFunc::schur(p(&[1, 1]))] {
                    agree(&lhs, &rhs, &f, &window);
                }
            }
        }
    }

    #[test]
    fn long_mixed_strings_are_rejected() {
        let err = normal_order_product(&p(&[2]), &[Kind::X, Kind::Xstar, Kind::X], &["a", "b", "c"]).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn diagonal_forms_collapse_to_identity() {
        let window = Window::new().with("z", -6, 6);
        for pi in [p(&[1]), p(&[2]), p(&[2, 1])] {
            for f in [SymFunc::one(), SymFunc::schur(p(&[2, 1]))] {
                let expected = apply_operators(&FactorChain::identity(), &f, &window, &EvalConfig::default()).unwrap();
                agree(&diagonal_chain(&pi), &hook_collapsed_chain(&pi), &f, &window);
                assert_eq!(
                    apply_operators(&hook_collapsed_chain(&pi), &f, &window, &EvalConfig::default()).unwrap(),
                    expected
                );
            }
        }
    }
}
