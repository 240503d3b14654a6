//! The power-sum basis and the change of basis to Schur functions via
//! symmetric-group characters (Murnaghan-Nakayama rule).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::memo::Memo;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{write_terms, Rational, SymFunc};

/// A finite combination of products of power sums `p_ρ = p_{ρ1} p_{ρ2} ⋯`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PowerExpr {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::power(Partition::empty())
    }

    pub fn power(rho: Partition) -> Self {
        let mut q = Self::zero();
        q.add_term(rho, Rational::one());
        q
    }

    pub fn add_term(&mut self, rho: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(rho.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&rho);
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn product(&self, other: &PowerExpr) -> PowerExpr {
        let mut out = PowerExpr::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// Replaces every `p_m` by `p_{mk}`: the plethysm `p_k[self]`. Constants
    /// are fixed.
    pub fn dilate(&self, k: usize) -> PowerExpr {
        PowerExpr { terms: self.terms.iter().map(|(p, c)| (p.scaled(k), c.clone())).collect() }
    }

    /// `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
    pub fn inner(&self, other: &PowerExpr) -> Rational {
        self.terms
            .iter()
            .filter_map(|(p, a)| other.terms.get(p).map(|b| a * b * Rational::from_integer(z_factor(p))))
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for PowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "p_", self.terms.iter().rev())
    }
}

impl fmt::Debug for PowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `z_λ = ∏ i^{m_i} m_i!`, the size of the centralizer of a permutation of
/// cycle type λ.
pub fn z_factor(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

static CHARACTERS: Lazy<Memo<(Partition, Partition), BigInt>> = Lazy::new(Memo::new);
static SCHUR_TO_POWER: Lazy<Memo<Partition, Vec<(Partition, Rational)>>> = Lazy::new(Memo::new);
static POWER_TO_SCHUR: Lazy<Memo<Partition, Vec<(Partition, BigInt)>>> = Lazy::new(Memo::new);

/// The irreducible character `χ^λ(ρ)` of the symmetric group.
pub fn character(lambda: &Partition, rho: &Partition) -> BigInt {
    if lambda.weight() != rho.weight() {
        return BigInt::zero();
    }
    (*CHARACTERS.get_or_insert_with(&(lambda.clone(), rho.clone()), || mn_recursion(lambda, rho))).clone()
}

/// Removes a rim hook of length `ρ_1` in every possible way, working on the
/// beta-set of λ: a hook of length k is a bead moved from b to b - k, with
/// sign given by the parity of beads jumped.
fn mn_recursion(lambda: &Partition, rho: &Partition) -> BigInt {
    if rho.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let k = rho.parts()[0];
    let rest = Partition::from_vec_unchecked(rho.parts()[1..].to_vec());
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = next.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).filter(|&p| p > 0).collect();
        let chi = character(&Partition::from_vec_unchecked(parts), &rest);
        if jumped % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    total
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
pub fn schur_in_power_basis(lambda: &Partition) -> Arc<Vec<(Partition, Rational)>> {
    SCHUR_TO_POWER.get_or_insert_with(lambda, || {
        partitions_of(lambda.weight(), None, None)
            .into_iter()
            .filter_map(|rho| {
                let chi = character(lambda, &rho);
                (!chi.is_zero()).then(|| {
                    let c = Rational::new(chi, z_factor(&rho));
                    (rho, c)
                })
            })
            .collect()
    })
}

/// `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
pub fn power_in_schur_basis(rho: &Partition) -> Arc<Vec<(Partition, BigInt)>> {
    POWER_TO_SCHUR.get_or_insert_with(rho, || {
        partitions_of(rho.weight(), None, None)
            .into_iter()
            .filter_map(|lambda| {
                let chi = character(&lambda, rho);
                (!chi.is_zero()).then_some((lambda, chi))
            })
            .collect()
    })
}

pub fn to_power_basis(f: &SymFunc) -> PowerExpr {
    let mut out = PowerExpr::zero();
    for (lambda, a) in f.iter() {
        for (rho, c) in schur_in_power_basis(lambda).iter() {
            out.add_term(rho.clone(), a * c);
        }
    }
    out
}

pub fn from_power_basis(q: &PowerExpr) -> SymFunc {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (rho, a) in q.iter() {
        for (lambda, chi) in power_in_schur_basis(rho).iter() {
            *acc.entry(lambda.clone()).or_insert_with(Rational::zero) += a * Rational::from_integer(chi.clone());
        }
    }
    SymFunc::from_terms(acc)
}
