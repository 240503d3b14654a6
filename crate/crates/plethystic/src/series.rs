//! The plethystic series `M_σ(z) = Σ z^r h_r[s_σ]` and
//! `L_σ(z) = Σ (-z)^r e_r[s_σ]`, their perp action, and the direct
//! computation of π-Schur functions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{partitions_of, Partition};
use crate::plethysm::{plethysm_with_budget, DEFAULT_DEGREE_BUDGET};
use crate::symfunc::{Rational, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M,
    L,
}

impl Family {
    pub fn flipped(self) -> Family {
        match self {
            Family::M => Family::L,
            Family::L => Family::M,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::M => "M",
            Family::L => "L",
        })
    }
}

/// The plethysm shape of a series: `s_σ`, or a skew `s_{π/κ}`. Several removed
/// shapes mean skewing by their product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Plain(Partition),
    Skew { outer: Partition, removed: Vec<Partition> },
}

impl Shape {
    pub fn skew(outer: Partition, removed: Partition) -> Shape {
        Shape::Skew { outer, removed: vec![removed] }
    }

    /// The Schur expansion of the shape.
    pub fn symfunc(&self) -> SymFunc {
        match self {
            Shape::Plain(sigma) => SymFunc::schur(sigma.clone()),
            Shape::Skew { outer, removed } => removed
                .iter()
                .fold(SymFunc::schur(outer.clone()), |f, kappa| f.skew(&SymFunc::schur(kappa.clone()))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Plain(sigma) => write!(f, "{sigma}"),
            Shape::Skew { outer, removed } if removed.len() == 1 => write!(f, "{outer}/{}", removed[0]),
            Shape::Skew { outer, removed } => {
                write!(f, "{outer}/(")?;
                for (i, k) in removed.iter().enumerate() {
                    if i > 0 {
                        write!(f, "·")?;
                    }
                    write!(f, "{k}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeriesSpec {
    pub family: Family,
    pub shape: Shape,
}

impl SeriesSpec {
    pub fn new(family: Family, shape: Shape) -> Self {
        SeriesSpec { family, shape }
    }

    pub fn plain(family: Family, sigma: Partition) -> Self {
        SeriesSpec { family, shape: Shape::Plain(sigma) }
    }

    pub fn skew(family: Family, outer: Partition, removed: Partition) -> Self {
        SeriesSpec { family, shape: Shape::skew(outer, removed) }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.shape)
    }
}

static TERMS: Lazy<Memo<(Family, SymFunc, usize), SymFunc>> = Lazy::new(Memo::new);

/// Term `r` of the series: `h_r[g]` for M, `(-1)^r e_r[g]` for L.
pub fn series_term(spec: &SeriesSpec, r: usize) -> Result<Arc<SymFunc>> {
    series_term_of(spec.family, &spec.shape.symfunc(), r, DEFAULT_DEGREE_BUDGET)
}

/// Term `r` of the series with an arbitrary plethysm argument `g`.
pub fn series_term_of(family: Family, g: &SymFunc, r: usize, budget: usize) -> Result<Arc<SymFunc>> {
    if r == 0 {
        return Ok(Arc::new(SymFunc::one()));
    }
    let needed = r * g.max_degree().unwrap_or(0);
    if needed > budget {
        return Err(Error::DegreeBudget { needed, budget });
    }
    TERMS.try_get_or_insert_with(&(family, g.clone(), r), || {
        let outer = match family {
            Family::M => SymFunc::h(r),
            Family::L => SymFunc::e(r),
        };
        let value = plethysm_with_budget(&outer, g, budget)?;
        Ok(if family == Family::L && r % 2 == 1 { -value } else { value })
    })
}

/// Coefficient `a_r` of a scalar series `M(c u) = (1-u)^{-c}` or
/// `L(c u) = (1-u)^c`, for a nonnegative integer `c`.
pub fn scalar_term(family: Family, c: &Rational, r: usize) -> Rational {
    let mut value = Rational::one();
    for i in 0..r {
        let i = Rational::from_integer(BigInt::from(i));
        value = match family {
            Family::M => value * (c + &i),
            Family::L => value * (c - &i),
        };
        value /= &i + Rational::one();
    }
    if family == Family::L && r % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Grade `r` holds `term_r^⊥ f`; zero grades are omitted.
pub fn series_perp_apply(spec: &SeriesSpec, f: &SymFunc) -> Result<BTreeMap<usize, SymFunc>> {
    let g = spec.shape.symfunc();
    let mut out = BTreeMap::new();
    let Some(top) = f.max_degree() else { return Ok(out) };
    let step = g.max_degree().unwrap_or(0);
    let last = if g.is_zero() {
        0
    } else if let Some(last) = top.checked_div(step) {
        last
    } else {
        let c = g.constant_term();
        match spec.family {
            Family::L if c.is_integer() && c >= Rational::zero() => {
                c.to_integer().try_into().map_err(|_| Error::Unbounded(format!("scalar series {spec}")))?
            }
            _ => return Err(Error::Unbounded(format!("scalar series {spec} does not terminate"))),
        }
    };
    for r in 0..=last {
        let term = series_term_of(spec.family, &g, r, DEFAULT_DEGREE_BUDGET.max(r * step))?;
        let value = f.skew(&term);
        if !value.is_zero() {
            out.insert(r, value);
        }
    }
    Ok(out)
}

/// The series perp at `z = 1`: the sum of all grades.
pub fn series_perp_total(spec: &SeriesSpec, f: &SymFunc) -> Result<SymFunc> {
    Ok(series_perp_apply(spec, f)?.values().fold(SymFunc::zero(), |acc, g| acc + g.clone()))
}

fn require_nonempty(pi: &Partition) -> Result<()> {
    if pi.is_empty() {
        Err(Error::Degenerate("π = [] makes the series vanish at z = 1".into()))
    } else {
        Ok(())
    }
}

/// `s^{(π)}_λ = L_π^⊥ s_λ`.
pub fn pi_schur(pi: &Partition, lambda: &Partition) -> Result<SymFunc> {
    pi_schur_of(pi, &SymFunc::schur(lambda.clone()))
}

pub fn pi_schur_of(pi: &Partition, f: &SymFunc) -> Result<SymFunc> {
    require_nonempty(pi)?;
    series_perp_total(&SeriesSpec::plain(Family::L, pi.clone()), f)
}

/// `M_π^⊥ s_λ`, the inverse of [`pi_schur`].
pub fn pi_branch(pi: &Partition, lambda: &Partition) -> Result<SymFunc> {
    pi_branch_of(pi, &SymFunc::schur(lambda.clone()))
}

pub fn pi_branch_of(pi: &Partition, f: &SymFunc) -> Result<SymFunc> {
    require_nonempty(pi)?;
    series_perp_total(&SeriesSpec::plain(Family::M, pi.clone()), f)
}

/// `s*^{(π)}_λ = (-1)^{|λ|} L_π^⊥ s_{λ'}`.
pub fn dual_pi_schur(pi: &Partition, lambda: &Partition) -> Result<SymFunc> {
    let value = pi_schur(pi, &lambda.conjugate())?;
    Ok(if lambda.weight() % 2 == 1 { -value } else { value })
}

/// The coefficient of `s_λ(Z)` in `M(XZ) L_π(Z)`, from the Cauchy kernel
/// `Σ_μ s_μ(X) s_μ(Z)` and outer products in `Z`.
pub fn cauchy_pi_schur(pi: &Partition, lambda: &Partition) -> Result<SymFunc> {
    require_nonempty(pi)?;
    let spec = SeriesSpec::plain(Family::L, pi.clone());
    cauchy_route(&spec, lambda, |mu| (mu.clone(), Rational::one()))
}

/// The coefficient of `s_λ(Z)` in `L(XZ) L_{π'}(Z)` (`|π|` even) or
/// `L(XZ) M_{π'}(Z)` (`|π|` odd), using `L(XZ) = Σ_μ (-1)^{|μ|} s_μ(X) s_{μ'}(Z)`.
pub fn cauchy_dual_pi_schur(pi: &Partition, lambda: &Partition) -> Result<SymFunc> {
    require_nonempty(pi)?;
    let family = if pi.weight().is_multiple_of(2) { Family::L } else { Family::M };
    let spec = SeriesSpec::plain(family, pi.conjugate());
    cauchy_route(&spec, lambda, |mu| {
        let sign = if mu.weight() % 2 == 0 { Rational::one() } else { -Rational::one() };
        (mu.conjugate(), sign)
    })
}

/// `Σ_μ sign(μ) s_μ(X) [s_λ](s_{ζ(μ)} · series_{|λ|-|μ|})`, where `kernel`
/// maps μ to its Z-side shape `ζ(μ)` and sign.
fn cauchy_route(
    spec: &SeriesSpec,
    lambda: &Partition,
    kernel: impl Fn(&Partition) -> (Partition, Rational),
) -> Result<SymFunc> {
    let n = lambda.weight();
    let step = match &spec.shape {
        Shape::Plain(sigma) => sigma.weight(),
        Shape::Skew { .. } => return Err(Error::Unsupported("skew shapes in the Cauchy route".into())),
    };
    let mut out = SymFunc::zero();
    let mut r = 0;
    while r * step <= n {
        let term = series_term(spec, r)?;
        for mu in partitions_of(n - r * step, None, None) {
            let (z_shape, sign) = kernel(&mu);
            let c = SymFunc::schur(z_shape).product(&term).coeff(lambda);
            out.add_term(mu, c * sign);
        }
        r += 1;
    }
    Ok(out)
}

/// `ℓ_{πν}`: the coefficient of `s_ν` in the L_π term of degree `|ν|`.
pub fn ell_coefficient(pi: &Partition, nu: &Partition) -> Result<Rational> {
    series_coefficient(Family::L, pi, nu)
}

/// `m_{πν}`: the coefficient of `s_ν` in the M_π term of degree `|ν|`.
pub fn m_coefficient(pi: &Partition, nu: &Partition) -> Result<Rational> {
    series_coefficient(Family::M, pi, nu)
}

fn series_coefficient(family: Family, pi: &Partition, nu: &Partition) -> Result<Rational> {
    let w = pi.weight();
    if w == 0 {
        return Ok(if nu.is_empty() { Rational::one() } else { Rational::zero() });
    }
    if !nu.weight().is_multiple_of(w) {
        return Ok(Rational::zero());
    }
    let term = series_term(&SeriesSpec::plain(family, pi.clone()), nu.weight() / w)?;
    Ok(term.coeff(nu))
}
