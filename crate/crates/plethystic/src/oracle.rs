//! Brute-force symmetric functions over a finite alphabet.
//!
//! Everything here works with explicit polynomials in `x_1, …, x_n` built
//! from semistandard tableaux, and converts back to the Schur basis by
//! peeling off leading monomials. Nothing is shared with the ring code
//! beyond [`Partition`], so agreement between the two is real evidence.
//!
//! Truncating to `n` variables kills exactly the `s_λ` with `ℓ(λ) > n`, so
//! a computation is faithful once `n` bounds the length of every
//! constituent that matters.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Rational, SymFunc};

/// Largest alphabet supported: monomials are packed into a `u64`.
pub const MAX_VARIABLES: usize = 12;
/// Largest total degree supported by the packing.
pub const MAX_DEGREE: usize = 31;
const BITS: usize = 5;
const MASK: u64 = (1 << BITS) - 1;

fn pack(exps: &[usize]) -> u64 {
    exps.iter().enumerate().fold(0, |acc, (i, e)| acc | ((*e as u64) << (BITS * i)))
}

fn unpack(key: u64, n: usize) -> Vec<usize> {
    (0..n).map(|i| ((key >> (BITS * i)) & MASK) as usize).collect()
}

fn key_degree(key: u64, n: usize) -> usize {
    unpack(key, n).iter().sum()
}

fn overflow() -> Error {
    Error::Oracle("integer coefficient overflow".into())
}

/// An exact polynomial in `n` variables with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: HashMap<u64, i128>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARIABLES, "at most {MAX_VARIABLES} variables");
        MultiPoly { n, terms: HashMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, &vec![0; n], 1).expect("constant monomial")
    }

    pub fn monomial(n: usize, exps: &[usize], coeff: i128) -> Result<Self> {
        if exps.len() != n || exps.iter().sum::<usize>() > MAX_DEGREE {
            return Err(Error::Oracle(format!("monomial {exps:?} out of range for {n} variables")));
        }
        let mut p = Self::zero(n);
        if coeff != 0 {
            p.terms.insert(pack(exps), coeff);
        }
        Ok(p)
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self::monomial(n, &exps, 1).expect("linear monomial")
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn coeff(&self, exps: &[usize]) -> i128 {
        self.terms.get(&pack(exps)).copied().unwrap_or(0)
    }

    /// Terms sorted by exponent vector, lexicographically descending.
    pub fn terms(&self) -> Vec<(Vec<usize>, i128)> {
        let mut out: Vec<_> = self.terms.iter().map(|(k, c)| (unpack(*k, self.n), *c)).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| key_degree(*k, self.n)).max()
    }

    fn add_key(&mut self, key: u64, c: i128) -> Result<()> {
        let slot = self.terms.entry(key).or_insert(0);
        *slot = slot.checked_add(c).ok_or_else(overflow)?;
        if *slot == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: i128) -> Result<()> {
        assert_eq!(self.n, other.n);
        for (k, v) in &other.terms {
            self.add_key(*k, v.checked_mul(c).ok_or_else(overflow)?)?;
        }
        Ok(())
    }

    /// Product, keeping only terms of total degree at most `max_degree`.
    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: usize) -> Result<MultiPoly> {
        assert_eq!(self.n, other.n);
        if max_degree > MAX_DEGREE {
            return Err(Error::Oracle(format!("degree {max_degree} exceeds {MAX_DEGREE}")));
        }
        let degs_a: Vec<(u64, i128, usize)> = self.terms.iter().map(|(k, c)| (*k, *c, key_degree(*k, self.n))).collect();
        let degs_b: Vec<(u64, i128, usize)> =
            other.terms.iter().map(|(k, c)| (*k, *c, key_degree(*k, other.n))).collect();
        let mut out = MultiPoly::zero(self.n);
        for (ka, ca, da) in &degs_a {
            for (kb, cb, db) in &degs_b {
                if da + db <= max_degree {
                    out.add_key(ka + kb, ca.checked_mul(*cb).ok_or_else(overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let d = self.degree().unwrap_or(0) + other.degree().unwrap_or(0);
        self.mul_truncated(other, d)
    }

    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        let terms = self.terms.iter().filter(|(k, _)| key_degree(**k, self.n) == d).map(|(k, c)| (*k, *c)).collect();
        MultiPoly { n: self.n, terms }
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(k, c)| {
                let mut e = unpack(*k, self.n);
                e.swap(i, i + 1);
                self.terms.get(&pack(&e)) == Some(c)
            })
        })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(j, e)| if *e == 1 { format!("x{}", j + 1) } else { format!("x{}^{e}", j + 1) })
                .collect();
            match (c.abs(), vars.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                (a, false) => write!(f, "{a}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.n)
    }
}

/// Shapes `ν` with `μ ⊆ ν ⊆ λ` and `ν/μ` a horizontal strip.
fn strips_within(mu: &[usize], lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..lambda.len() {
        let lo = mu.get(i).copied().unwrap_or(0);
        let hi = if i == 0 { lambda[0] } else { lambda[i].min(mu.get(i - 1).copied().unwrap_or(0)) };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| (lo..=hi).map(move |v| [prefix.clone(), vec![v]].concat()))
            .collect();
    }
    for nu in &mut out {
        while nu.last() == Some(&0) {
            nu.pop();
        }
    }
    out
}

/// `s_λ` evaluated on an alphabet of monomials: letter by letter, each
/// letter fills a horizontal strip of the tableau.
fn schur_in_letters(lambda: &Partition, letters: &[u64], n: usize) -> Result<MultiPoly> {
    let target: Vec<usize> = lambda.parts().to_vec();
    let mut states: HashMap<Vec<usize>, MultiPoly> = HashMap::from([(Vec::new(), MultiPoly::one(n))]);
    for &letter in letters {
        let mut next: HashMap<Vec<usize>, MultiPoly> = HashMap::new();
        for (mu, poly) in &states {
            let size_mu: usize = mu.iter().sum();
            for nu in strips_within(mu, &target) {
                let k = nu.iter().sum::<usize>() - size_mu;
                let shift = letter * k as u64;
                let entry = next.entry(nu).or_insert_with(|| MultiPoly::zero(n));
                for (key, c) in &poly.terms {
                    entry.add_key(key + shift, *c)?;
                }
            }
        }
        states = next;
    }
    Ok(states.remove(&target).unwrap_or_else(|| MultiPoly::zero(n)))
}

/// `s_λ(x_1, …, x_n)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    if n > MAX_VARIABLES || lambda.weight() > MAX_DEGREE {
        return Err(Error::Oracle(format!("s{lambda} in {n} variables exceeds the packing")));
    }
    let letters: Vec<u64> = (0..n).map(|i| 1u64 << (BITS * i)).collect();
    schur_in_letters(lambda, &letters, n)
}

/// The Schur expansion of a symmetric polynomial, exact modulo the `s_λ`
/// with `ℓ(λ) > n` that vanish in `n` variables. The lexicographically
/// largest monomial with weakly decreasing exponents is always the leading
/// term of a Schur constituent; its Schur polynomial is subtracted until
/// nothing remains.
pub fn decompose(p: &MultiPoly) -> Result<SymFunc> {
    if !p.is_symmetric() {
        return Err(Error::Oracle("polynomial is not symmetric".into()));
    }
    let n = p.n;
    let mut rest = p.clone();
    let mut out = SymFunc::zero();
    let mut cache: HashMap<Vec<usize>, MultiPoly> = HashMap::new();
    while !rest.is_zero() {
        let lead = rest
            .terms
            .keys()
            .map(|k| unpack(*k, n))
            .filter(|e| e.windows(2).all(|w| w[0] >= w[1]))
            .max()
            .ok_or_else(|| Error::Oracle(format!("nonzero remainder without a dominant term: {rest}")))?;
        let c = rest.coeff(&lead);
        let lambda = Partition::from_unsorted(lead.clone());
        let s = match cache.get(&lead) {
            Some(s) => s,
            None => {
                let s = schur_poly(&lambda, n)?;
                cache.entry(lead.clone()).or_insert(s)
            }
        };
        rest.add_scaled(s, -c)?;
        out.add_term(lambda, Rational::from_integer(BigInt::from(c)));
    }
    Ok(out)
}

/// Alphabet size that keeps `s_μ s_ν` faithful: no constituent is longer
/// than `ℓ(μ) + ℓ(ν)` or heavier than `|μ| + |ν|`.
pub fn product_alphabet(mu: &Partition, nu: &Partition) -> usize {
    (mu.len() + nu.len()).min(mu.weight() + nu.weight()).max(1)
}

/// `s_μ s_ν` by multiplying Schur polynomials.
pub fn oracle_product(mu: &Partition, nu: &Partition) -> Result<SymFunc> {
    let n = product_alphabet(mu, nu);
    decompose(&schur_poly(mu, n)?.mul(&schur_poly(nu, n)?)?)
}

/// `s_{λ/μ} = Σ_ν ⟨s_λ, s_μ s_ν⟩ s_ν`, each pairing read off a product.
pub fn oracle_skew(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    if mu.weight() > lambda.weight() {
        return Ok(out);
    }
    for nu in partitions_of(lambda.weight() - mu.weight(), Some(lambda.len()), Some(lambda.largest())) {
        let prod = oracle_product(mu, &nu)?;
        let c = prod.coeff(lambda);
        if !c.is_zero() {
            out.add_term(nu, c);
        }
    }
    Ok(out)
}

/// Alphabet size that keeps `s_outer[s_inner]` faithful.
pub fn plethysm_alphabet(outer: &Partition, inner: &Partition) -> usize {
    (outer.weight() * inner.weight()).min(outer.weight() * inner.len()).max(1)
}

/// `s_outer[s_inner]` in `n` variables: the monomials of `s_inner`, with
/// multiplicity, become the letters of a new alphabet on which `s_outer`
/// is evaluated by tableaux.
pub fn oracle_plethysm(outer: &Partition, inner: &Partition, n: usize) -> Result<SymFunc> {
    let needed = plethysm_alphabet(outer, inner);
    if n < needed {
        return Err(Error::Oracle(format!("{n} variables cannot resolve s{outer}[s{inner}]; need {needed}")));
    }
    let inner_poly = schur_poly(inner, n)?;
    if inner_poly.terms.values().any(|c| *c < 0) {
        return Err(Error::Oracle("inner Schur polynomial has a negative coefficient".into()));
    }
    let mut letters: Vec<u64> = Vec::new();
    for (exps, c) in inner_poly.terms() {
        letters.extend(std::iter::repeat_n(pack(&exps), c as usize));
    }
    if outer.weight() * inner.weight() > MAX_DEGREE {
        return Err(Error::Oracle(format!("s{outer}[s{inner}] exceeds the packing")));
    }
    decompose(&schur_in_letters(outer, &letters, n)?)
}

/// `∏_T (1 - Z^T)^{±1}` over tableaux `T` of shape `σ` in `n` letters,
/// truncated above degree `max_degree`.
fn tableau_product(sigma: &Partition, n: usize, inverse: bool, max_degree: usize) -> Result<MultiPoly> {
    let mut out = MultiPoly::one(n);
    let step = sigma.weight();
    for (exps, mult) in schur_poly(sigma, n)?.terms() {
        let mono = pack(&exps);
        let mut factor = MultiPoly::one(n);
        if inverse {
            for k in 1..=max_degree / step.max(1) {
                factor.add_key(mono * k as u64, 1)?;
            }
        } else {
            factor.add_key(mono, -1)?;
        }
        for _ in 0..mult {
            out = out.mul_truncated(&factor, max_degree)?;
        }
    }
    Ok(out)
}

/// Partitions contained in `lambda`.
fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    (0..=lambda.weight())
        .flat_map(|w| partitions_of(w, Some(lambda.len()), Some(lambda.largest())))
        .filter(|mu| lambda.contains(mu))
        .collect()
}

/// `Σ_μ sign(μ) s_{κ(μ)}(X) [s_λ(Z)] s_μ(Z) F(Z)` for a Cauchy-type kernel.
fn cauchy_extract(
    lambda: &Partition,
    n: usize,
    series: &MultiPoly,
    kernel: impl Fn(&Partition) -> (Partition, i128),
) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for mu in subpartitions(lambda) {
        let rest = series.homogeneous_part(lambda.weight() - mu.weight());
        let coeff = decompose(&schur_poly(&mu, n)?.mul(&rest)?)?.coeff(lambda);
        if !coeff.is_zero() {
            let (shape, sign) = kernel(&mu);
            out.add_term(shape, coeff * Rational::from_integer(BigInt::from(sign)));
        }
    }
    Ok(out)
}

/// `[s_λ(Z)] M(XZ) L_π(Z)` with `L_π(Z) = ∏_T (1 - Z^T)` as a literal
/// product over tableaux in `n ≥ ℓ(λ)` letters.
pub fn oracle_pi_schur(pi: &Partition, lambda: &Partition, n: usize) -> Result<SymFunc> {
    check_alphabet(lambda, n)?;
    let series = tableau_product(pi, n, false, lambda.weight())?;
    cauchy_extract(lambda, n, &series, |mu| (mu.clone(), 1))
}

/// `[s_λ(Z)] L(XZ) L_{π'}(Z)` for even `|π|`, with `M_{π'}` for odd `|π|`.
pub fn oracle_dual_pi_schur(pi: &Partition, lambda: &Partition, n: usize) -> Result<SymFunc> {
    check_alphabet(lambda, n)?;
    let inverse = pi.weight() % 2 == 1;
    let series = tableau_product(&pi.conjugate(), n, inverse, lambda.weight())?;
    cauchy_extract(lambda, n, &series, |mu| (mu.conjugate(), if mu.weight() % 2 == 0 { 1 } else { -1 }))
}

fn check_alphabet(lambda: &Partition, n: usize) -> Result<()> {
    if n < lambda.len().max(1) {
        return Err(Error::Oracle(format!("{n} variables cannot resolve s{lambda}")));
    }
    Ok(())
}
