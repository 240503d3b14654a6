//! Plethysm by power-sum substitution: `p_n[g]` replaces every `p_m` in `g`
//! by `p_{mn}`, and scalars are fixed (`p_n[c] = c`).

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::Partition;
use crate::power::{from_power_basis, schur_in_power_basis, to_power_basis, PowerExpr};
use crate::symfunc::{Rational, SymFunc};

pub const DEFAULT_DEGREE_BUDGET: usize = 14;

static PLETHYSMS: Lazy<Memo<(SymFunc, SymFunc), SymFunc>> = Lazy::new(Memo::new);

/// `outer[inner]` with the default degree budget.
pub fn plethysm(outer: &SymFunc, inner: &SymFunc) -> Result<SymFunc> {
    plethysm_with_budget(outer, inner, DEFAULT_DEGREE_BUDGET)
}

/// `outer[inner]`, failing if the result degree would exceed `budget`.
pub fn plethysm_with_budget(outer: &SymFunc, inner: &SymFunc, budget: usize) -> Result<SymFunc> {
    let needed = outer.max_degree().unwrap_or(0) * inner.max_degree().unwrap_or(0);
    if needed > budget {
        return Err(Error::DegreeBudget { needed, budget });
    }
    if *inner == SymFunc::schur(Partition::row(1)) {
        return Ok(outer.clone());
    }
    if *outer == SymFunc::schur(Partition::row(1)) {
        return Ok(inner.clone());
    }
    if let Some(c) = inner.as_constant() {
        let mut value = Rational::zero();
        for (lambda, a) in outer.iter() {
            value += a * specialize_schur(lambda, &c);
        }
        return Ok(SymFunc::constant(value));
    }
    let key = (outer.clone(), inner.clone());
    let out = PLETHYSMS.get_or_insert_with(&key, || substitute(outer, inner));
    Ok((*out).clone())
}

/// `s_λ[c]` for a scalar `c`, by the hook-content formula, which is a
/// polynomial identity in `c`.
pub fn specialize_schur(lambda: &Partition, c: &Rational) -> Rational {
    let conj = lambda.conjugate();
    let mut value = Rational::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = Rational::from_integer(BigInt::from(j as i64 - i as i64));
            let hook = (row - j) + (conj.part(j) - i) - 1;
            value *= (c + content) / Rational::from_integer(BigInt::from(hook));
        }
    }
    value
}

fn substitute(outer: &SymFunc, inner: &SymFunc) -> SymFunc {
    let g = to_power_basis(inner);
    let mut dilates: HashMap<usize, Arc<PowerExpr>> = HashMap::new();
    let mut powers: HashMap<Partition, Arc<PowerExpr>> = HashMap::new();
    let mut total = PowerExpr::zero();
    for (lambda, a) in outer.iter() {
        for (rho, c) in schur_in_power_basis(lambda).iter() {
            let value = power_of(rho, &g, &mut dilates, &mut powers);
            let coeff = a * c;
            for (sigma, b) in value.iter() {
                total.add_term(sigma.clone(), &coeff * b);
            }
        }
    }
    from_power_basis(&total)
}

/// `p_ρ[g]`, built from shorter prefixes of ρ so shared prefixes are reused.
fn power_of(
    rho: &Partition,
    g: &PowerExpr,
    dilates: &mut HashMap<usize, Arc<PowerExpr>>,
    powers: &mut HashMap<Partition, Arc<PowerExpr>>,
) -> Arc<PowerExpr> {
    if let Some(v) = powers.get(rho) {
        return v.clone();
    }
    let value = match rho.parts().split_last() {
        None => Arc::new(PowerExpr::one()),
        Some((&last, init)) => {
            let prefix = power_of(&Partition::from_vec_unchecked(init.to_vec()), g, dilates, powers);
            let d = dilates.entry(last).or_insert_with(|| Arc::new(g.dilate(last))).clone();
            Arc::new(prefix.product(&d))
        }
    };
    powers.insert(rho.clone(), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::symfunc::rational;

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::from(parts.to_vec()))
    }

    #[test]
    fn small_plethysms() {
        assert_eq!(plethysm(&s(&[2]), &s(&[2])).unwrap(), s(&[4]) + s(&[2, 2]));
        assert_eq!(plethysm(&s(&[1, 1]), &s(&[2])).unwrap(), s(&[3, 1]));
        assert_eq!(plethysm(&s(&[2]), &s(&[1, 1])).unwrap(), s(&[2, 2]) + s(&[1, 1, 1, 1]));
        let g = s(&[2, 1]) - s(&[3]);
        assert_eq!(plethysm(&s(&[1]), &g).unwrap(), g);
        assert_eq!(plethysm(&g, &s(&[1])).unwrap(), g);
    }

    #[test]
    fn scalar_inner() {
        // h_r[1] = 1, e_r[1] = 0 for r ≥ 2, h_2[3] = 6, e_2[3] = 3.
        assert_eq!(plethysm(&s(&[5]), &SymFunc::one()).unwrap(), SymFunc::one());
        assert_eq!(plethysm(&s(&[1, 1]), &SymFunc::one()).unwrap(), SymFunc::zero());
        let three = SymFunc::constant(rational(3));
        assert_eq!(plethysm(&s(&[2]), &three).unwrap(), SymFunc::constant(rational(6)));
        assert_eq!(plethysm(&s(&[1, 1]), &three).unwrap(), SymFunc::constant(rational(3)));
        assert_eq!(plethysm(&s(&[2]), &SymFunc::zero()).unwrap(), SymFunc::zero());
    }

    #[test]
    fn scalar_inner_matches_power_sum_rule() {
        for n in 0..=6 {
            for lambda in partitions_of(n, None, None) {
                for c in -2i64..=3 {
                    let c = rational(c);
                    let direct: Rational = schur_in_power_basis(&lambda)
                        .iter()
                        .map(|(rho, a)| a * num_traits::pow(c.clone(), rho.len()))
                        .fold(Rational::zero(), |x, y| x + y);
                    assert_eq!(specialize_schur(&lambda, &c), direct);
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = plethysm(&s(&[5]), &s(&[3])).unwrap_err();
        assert_eq!(err, Error::DegreeBudget { needed: 15, budget: 14 });
        assert!(plethysm_with_budget(&s(&[2]), &s(&[2]), 3).is_err());
    }

    #[test]
    fn plethysm_is_an_algebra_map_in_the_outer_argument() {
        let g = s(&[2]) + s(&[1]);
        let a = s(&[2]);
        let b = s(&[1, 1]);
        let lhs = plethysm(&(&a * &b), &g).unwrap();
        let rhs = &plethysm(&a, &g).unwrap() * &plethysm(&b, &g).unwrap();
        assert_eq!(lhs, rhs);
    }
}
