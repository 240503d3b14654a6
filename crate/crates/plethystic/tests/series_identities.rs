//! Plethysm and plethystic-series identities over exhaustive small ranges.

use num_traits::{One, Zero};
use proptest::prelude::*;

use plethystic::series::{
    cauchy_dual_pi_schur, cauchy_pi_schur, dual_pi_schur, ell_coefficient, m_coefficient, pi_schur, series_term,
};
use plethystic::{partitions_of, plethysm, Family, Partition, Rational, SeriesSpec, SymFunc};

fn nonempty(max_weight: usize) -> Vec<Partition> {
    (1..=max_weight).flat_map(|w| partitions_of(w, None, None)).collect()
}

/// Pairs `(ρ, ξ)` of nonempty partitions with `|ρ|·|ξ| ≤ bound`.
fn plethysm_pairs(bound: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound / a {
            for rho in partitions_of(a, None, None) {
                for xi in partitions_of(b, None, None) {
                    out.push((rho.clone(), xi));
                }
            }
        }
    }
    out
}

fn schur_plethysm(outer: &Partition, inner: &Partition) -> SymFunc {
    plethysm(&SymFunc::schur(outer.clone()), &SymFunc::schur(inner.clone())).unwrap()
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

#[test]
fn m_and_l_series_are_mutually_inverse() {
    for sigma in nonempty(3) {
        let m = SeriesSpec::plain(Family::M, sigma.clone());
        let l = SeriesSpec::plain(Family::L, sigma.clone());
        for r in 1..=12 / sigma.weight() {
            let mut total = SymFunc::zero();
            for a in 0..=r {
                total += &series_term(&m, a).unwrap().product(&series_term(&l, r - a).unwrap());
            }
            assert!(total.is_zero(), "σ = {sigma}, r = {r}: {total}");
        }
    }
}

#[test]
fn row_and_column_appear_once_or_not_at_all() {
    for (rho, xi) in plethysm_pairs(10) {
        let (r, k) = (rho.weight(), xi.weight());
        let value = schur_plethysm(&rho, &xi);
        let row = rho == Partition::row(r) && xi == Partition::row(k);
        assert_eq!(value.coeff(&Partition::row(k * r)), indicator(row), "row in s_{rho}[s_{xi}]");
        let column = (rho == Partition::row(r) && xi == Partition::column(k) && k % 2 == 0)
            || (rho == Partition::column(r) && xi == Partition::column(k) && k % 2 == 1);
        assert_eq!(value.coeff(&Partition::column(k * r)), indicator(column), "column in s_{rho}[s_{xi}]");
    }
}

#[test]
fn skewing_a_row_or_column_by_a_plethysm() {
    for m in 0..=8usize {
        for (rho, xi) in plethysm_pairs(m) {
            let (r, k) = (rho.weight(), xi.weight());
            let p = schur_plethysm(&rho, &xi);

            let row = SymFunc::schur(Partition::row(m)).skew(&p);
            let expected = if rho == Partition::row(r) && xi == Partition::row(k) {
                SymFunc::schur(Partition::row(m - k * r))
            } else {
                SymFunc::zero()
            };
            assert_eq!(row, expected, "s[{m}] / s_{rho}[s_{xi}]");

            let column = SymFunc::schur(Partition::column(m)).skew(&p);
            let survives = (rho == Partition::row(r) && xi == Partition::column(k) && k % 2 == 0)
                || (rho == Partition::column(r) && xi == Partition::column(k) && k % 2 == 1);
            let expected = if survives { SymFunc::schur(Partition::column(m - k * r)) } else { SymFunc::zero() };
            assert_eq!(column, expected, "s[1^{m}] / s_{rho}[s_{xi}]");
        }
    }
}

#[test]
fn conjugating_plethysms() {
    for (mu, nu) in plethysm_pairs(10) {
        let outer = if nu.weight() % 2 == 0 { mu.clone() } else { mu.conjugate() };
        assert_eq!(schur_plethysm(&mu, &nu).omega(), schur_plethysm(&outer, &nu.conjugate()), "μ = {mu}, ν = {nu}");
    }
}

#[test]
fn series_coefficients_under_conjugation() {
    for pi in nonempty(3) {
        for w in 0..=9 {
            for nu in partitions_of(w, None, None) {
                let ell = ell_coefficient(&pi, &nu).unwrap();
                if pi.weight() % 2 == 0 {
                    assert_eq!(ell_coefficient(&pi.conjugate(), &nu.conjugate()).unwrap(), ell, "π = {pi}, ν = {nu}");
                } else {
                    let sign = if w % 2 == 0 { ell.clone() } else { -ell.clone() };
                    assert_eq!(m_coefficient(&pi.conjugate(), &nu.conjugate()).unwrap(), sign, "π = {pi}, ν = {nu}");
                }
            }
        }
    }
}

#[test]
fn skew_and_cauchy_routes_agree() {
    for pi in nonempty(4) {
        for w in 0..=6 {
            for lambda in partitions_of(w, None, None) {
                assert_eq!(pi_schur(&pi, &lambda).unwrap(), cauchy_pi_schur(&pi, &lambda).unwrap(), "π = {pi}, λ = {lambda}");
                assert_eq!(
                    dual_pi_schur(&pi, &lambda).unwrap(),
                    cauchy_dual_pi_schur(&pi, &lambda).unwrap(),
                    "π = {pi}, λ = {lambda}"
                );
            }
        }
    }
}

#[test]
fn empty_pi_is_rejected_by_the_series_routes() {
    assert!(pi_schur(&Partition::empty(), &Partition::row(1)).is_err());
    assert!(dual_pi_schur(&Partition::empty(), &Partition::row(1)).is_err());
}

fn small_partition() -> impl Strategy<Value = Partition> {
    let all = nonempty(3);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // f ↦ f[g] is a ring map, and composing plethysms is associative.
    #[test]
    fn plethysm_respects_products_and_composition(a in small_partition(), b in small_partition(), c in small_partition()) {
        let (sa, sb, sc) = (SymFunc::schur(a.clone()), SymFunc::schur(b.clone()), SymFunc::schur(c.clone()));
        if a.weight() + b.weight() <= 4 && c.weight() <= 2 {
            let lhs = plethysm(&sa.product(&sb), &sc).unwrap();
            let rhs = plethysm(&sa, &sc).unwrap().product(&plethysm(&sb, &sc).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
        if a.weight() * b.weight() * c.weight() <= 12 {
            let left = plethysm(&plethysm(&sa, &sb).unwrap(), &sc).unwrap();
            let right = plethysm(&sa, &plethysm(&sb, &sc).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
