//! Littlewood-Richardson coefficients.
//!
//! Products are expanded by adding the rows of the second factor as labelled
//! horizontal strips subject to the lattice-word condition. Skews enumerate
//! LR fillings of the skew diagram directly. The two enumerations are
//! independent, which the tests exploit.

use std::collections::BTreeMap;
use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::memo::Memo;
use crate::partition::Partition;

type Terms = Vec<(Partition, u64)>;

static PRODUCTS: Lazy<Memo<(Partition, Partition), Terms>> = Lazy::new(Memo::new);
static SKEWS: Lazy<Memo<(Partition, Partition), Terms>> = Lazy::new(Memo::new);

/// `s_mu * s_nu = Σ c^λ_{mu nu} s_λ`, as `(λ, c)` pairs.
pub fn product_terms(mu: &Partition, nu: &Partition) -> Arc<Terms> {
    // Adding the factor with fewer rows keeps the search shallow.
    let (base, added) = if (nu.len(), nu) <= (mu.len(), mu) { (mu, nu) } else { (nu, mu) };
    let key = (base.clone(), added.clone());
    PRODUCTS.get_or_insert_with(&key, || lr_product(base, added).into_iter().collect())
}

/// `s_mu^⊥ s_lambda = s_{λ/μ} = Σ c^λ_{mu nu} s_nu`, as `(nu, c)` pairs.
pub fn skew_terms(lambda: &Partition, mu: &Partition) -> Arc<Terms> {
    let key = (lambda.clone(), mu.clone());
    SKEWS.get_or_insert_with(&key, || lr_skew(lambda, mu).into_iter().collect())
}

/// A single coefficient `c^λ_{μν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    skew_terms(lambda, mu).iter().find(|(p, _)| p == nu).map_or(0, |(_, c)| *c)
}

/// The generalized coefficient `c^π_{(i_1)(i_2)⋯}`: the multiplicity of
/// `s_π` in `h_{i_1} h_{i_2} ⋯`, or in `e_{i_1} e_{i_2} ⋯` when `column_mode`.
pub fn multi_lr(pi: &Partition, sizes: &[usize], column_mode: bool) -> u64 {
    if sizes.iter().sum::<usize>() != pi.weight() {
        return 0;
    }
    let mut current: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for &i in sizes {
        let factor = if column_mode { Partition::column(i) } else { Partition::row(i) };
        let mut next = BTreeMap::new();
        for (shape, mult) in &current {
            for (lambda, c) in product_terms(shape, &factor).iter() {
                if pi.contains(lambda) {
                    *next.entry(lambda.clone()).or_insert(0) += mult * c;
                }
            }
        }
        current = next;
    }
    current.get(pi).copied().unwrap_or(0)
}

struct ProductSearch<'a> {
    added: &'a [usize],
    shape: Vec<usize>,
    out: BTreeMap<Partition, u64>,
}

impl ProductSearch<'_> {
    /// Places label `k`, given the row counts of label `k - 1`.
    fn place_label(&mut self, k: usize, prev: &[usize]) {
        if k == self.added.len() {
            let mut parts = self.shape.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            *self.out.entry(Partition::from_vec_unchecked(parts)).or_insert(0) += 1;
            return;
        }
        let old = self.shape.clone();
        let mut counts = vec![0; old.len() + 1];
        self.place_rows(k, prev, &old, &mut counts, 0, self.added[k], 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn place_rows(
        &mut self,
        k: usize,
        prev: &[usize],
        old: &[usize],
        counts: &mut Vec<usize>,
        r: usize,
        remaining: usize,
        cum_here: usize,
        cum_prev: usize,
    ) {
        if remaining == 0 {
            let saved = self.shape.clone();
            self.shape = old.to_vec();
            self.shape.push(0);
            for (row, &c) in counts.iter().enumerate() {
                self.shape[row] += c;
            }
            self.place_label(k + 1, &counts.clone());
            self.shape = saved;
            return;
        }
        if r > old.len() {
            return;
        }
        let here = old.get(r).copied().unwrap_or(0);
        let strip_cap = if r == 0 { remaining } else { old[r - 1] - here };
        let lattice_cap = if k == 0 { remaining } else { cum_prev.saturating_sub(cum_here) };
        let cap = remaining.min(strip_cap).min(lattice_cap);
        let prev_here = prev.get(r).copied().unwrap_or(0);
        for a in (0..=cap).rev() {
            counts[r] = a;
            self.place_rows(k, prev, old, counts, r + 1, remaining - a, cum_here + a, cum_prev + prev_here);
        }
        counts[r] = 0;
    }
}

fn lr_product(base: &Partition, added: &Partition) -> BTreeMap<Partition, u64> {
    let mut search =
        ProductSearch { added: added.parts(), shape: base.parts().to_vec(), out: BTreeMap::new() };
    search.place_label(0, &[]);
    search.out
}

struct SkewSearch<'a> {
    lambda: &'a [usize],
    mu: Vec<usize>,
    /// Cells in reading order: rows top to bottom, each row right to left.
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    content: Vec<usize>,
    out: BTreeMap<Partition, u64>,
}

impl SkewSearch<'_> {
    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            let parts: Vec<usize> = self.content.iter().copied().filter(|&c| c > 0).collect();
            *self.out.entry(Partition::from_vec_unchecked(parts)).or_insert(0) += 1;
            return;
        }
        let (r, c) = self.cells[idx];
        // Labels are 1-based; 0 marks an unfilled or non-skew cell.
        let upper = if c + 1 < self.lambda[r] { self.grid[r][c + 1] } else { self.content.len() + 1 };
        let lower = if r > 0 && c >= self.mu[r - 1] { self.grid[r - 1][c] + 1 } else { 1 };
        for label in lower..=upper {
            if label >= 2 && self.content.get(label - 1).copied().unwrap_or(0) + 1 > self.content[label - 2] {
                continue;
            }
            if label > self.content.len() {
                self.content.push(0);
            }
            self.content[label - 1] += 1;
            self.grid[r][c] = label;
            self.fill(idx + 1);
            self.grid[r][c] = 0;
            self.content[label - 1] -= 1;
            if self.content.last() == Some(&0) {
                self.content.pop();
            }
        }
    }
}

fn lr_skew(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    if !lambda.contains(mu) {
        return BTreeMap::new();
    }
    let lam = lambda.parts();
    let mu_parts: Vec<usize> = (0..lam.len()).map(|i| mu.part(i)).collect();
    let mut cells = Vec::new();
    for r in 0..lam.len() {
        for c in (mu_parts[r]..lam[r]).rev() {
            cells.push((r, c));
        }
    }
    let mut search = SkewSearch {
        lambda: lam,
        mu: mu_parts,
        cells,
        grid: lam.iter().map(|&l| vec![0; l]).collect(),
        content: Vec::new(),
        out: BTreeMap::new(),
    };
    search.fill(0);
    search.out
}
