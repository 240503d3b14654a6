//! Symmetric functions in the Schur basis with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lr;
use crate::partition::Partition;

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A finite linear combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Partition::empty(), c)
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::term(lambda, Rational::one())
    }

    /// `h_n = s[(n)]`.
    pub fn h(n: usize) -> Self {
        Self::schur(Partition::row(n))
    }

    /// `e_n = s[(1^n)]`.
    pub fn e(n: usize) -> Self {
        Self::schur(Partition::column(n))
    }

    pub fn term(lambda: Partition, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * f` in place.
    pub fn add_scaled(&mut self, f: &SymFunc, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (p, a) in &f.terms {
            self.add_term(p.clone(), a * c);
        }
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

    /// Terms in increasing partition order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// The scalar this function equals, if it has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.max_degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.constant_term()),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn degree_part(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect() }
    }

    /// Outer product.
    pub fn product(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let ab = a * b;
                for (lambda, c) in lr::product_terms(mu, nu).iter() {
                    out.add_term(lambda.clone(), &ab * Rational::from_integer(BigInt::from(*c)));
                }
            }
        }
        out
    }

    /// `g^⊥ self`, the adjoint of multiplication by `g`.
    pub fn skew(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, b) in &g.terms {
            for (lambda, a) in &self.terms {
                if lambda.weight() < mu.weight() || !lambda.contains(mu) {
                    continue;
                }
                let ab = a * b;
                for (nu, c) in lr::skew_terms(lambda, mu).iter() {
                    out.add_term(nu.clone(), &ab * Rational::from_integer(BigInt::from(*c)));
                }
            }
        }
        out
    }

    /// Hall inner product, for which the Schur functions are orthonormal.
    pub fn inner(&self, other: &SymFunc) -> Rational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small
            .terms
            .iter()
            .filter_map(|(p, a)| large.terms.get(p).map(|b| a * b))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// The involution `s[λ] ↦ s[λ']`.
    pub fn omega(&self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect() }
    }

    /// Keeps only the terms whose partition satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().filter(|(p, _)| keep(p)).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }
}

impl From<Partition> for SymFunc {
    fn from(p: Partition) -> Self {
        SymFunc::schur(p)
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c);
        }
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.product(rhs)
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        self.product(&rhs)
    }
}

/// Formats `c·x` terms as `s[2] - 1/2*s[1,1]`; shared with the power-sum basis.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    prefix: &str,
    terms: impl Iterator<Item = (&'a Partition, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (p, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "{prefix}{p}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for SymFunc {
    /// Terms in reverse-lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "s", self.terms.iter().rev())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct TermRecord {
    pub partition: Partition,
    pub num: String,
    pub den: String,
}

pub(crate) fn rational_to_record(partition: &Partition, c: &Rational) -> TermRecord {
    TermRecord { partition: partition.clone(), num: c.numer().to_string(), den: c.denom().to_string() }
}

pub(crate) fn record_to_rational(r: &TermRecord) -> Result<Rational, String> {
    let num: BigInt = r.num.parse().map_err(|_| format!("bad numerator {:?}", r.num))?;
    let den: BigInt = r.den.parse().map_err(|_| format!("bad denominator {:?}", r.den))?;
    if !den.is_positive() {
        return Err(format!("denominator must be positive, got {den}"));
    }
    Ok(Rational::new(num, den))
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> =
            self.terms.iter().rev().map(|(p, c)| rational_to_record(p, c)).collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut f = SymFunc::zero();
        for r in &records {
            let c = record_to_rational(r).map_err(serde::de::Error::custom)?;
            f.add_term(r.partition.clone(), c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::from(parts.to_vec()))
    }

    #[test]
    fn display() {
        assert_eq!((s(&[2]) - s(&[])).to_string(), "s[2] - s[]");
        let f = s(&[2, 1]).scale(&Rational::new(BigInt::from(-1), BigInt::from(2))) + s(&[3]);
        assert_eq!(f.to_string(), "s[3] - 1/2*s[2,1]");
        assert_eq!(SymFunc::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let f = s(&[3]) + s(&[2, 1]).scale(&Rational::new(BigInt::from(-3), BigInt::from(4))) + s(&[]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"[{"partition":[3],"num":"1","den":"1"},{"partition":[2,1],"num":"-3","den":"4"},{"partition":[],"num":"1","den":"1"}]"#
        );
        let back: SymFunc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<SymFunc>(r#"[{"partition":[1],"num":"1","den":"0"}]"#).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(s(&[2]).omega(), s(&[1, 1]));
        assert_eq!(s(&[2, 2]).omega(), s(&[2, 2]));
        let f = s(&[3]) + s(&[2, 1]).scale(&rational(2));
        assert_eq!(f.omega(), s(&[1, 1, 1]) + s(&[2, 1]).scale(&rational(2)));
    }

    #[test]
    fn inner_products() {
        assert_eq!(s(&[2, 1]).inner(&s(&[2, 1])), rational(1));
        assert_eq!(s(&[2]).inner(&s(&[1, 1])), rational(0));
    }
}
