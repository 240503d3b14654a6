use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symfunc::{Rational, SymFunc};

/// A Fock-space state: a symmetric function in each charge sector. Zero
/// sectors are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ChargedState {
    sectors: BTreeMap<i64, SymFunc>,
}

impl ChargedState {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `|c, f⟩`.
    pub fn pure(charge: i64, f: SymFunc) -> Self {
        let mut s = Self::zero();
        s.add_sector(charge, &f);
        s
    }

    /// The vacuum `|0, 1⟩`.
    pub fn vacuum() -> Self {
        Self::pure(0, SymFunc::one())
    }

    pub fn add_sector(&mut self, charge: i64, f: &SymFunc) {
        if f.is_zero() {
            return;
        }
        let slot = self.sectors.entry(charge).or_default();
        *slot += f;
        if slot.is_zero() {
            self.sectors.remove(&charge);
        }
    }

    pub fn sector(&self, charge: i64) -> SymFunc {
        self.sectors.get(&charge).cloned().unwrap_or_default()
    }

    pub fn sectors(&self) -> impl Iterator<Item = (i64, &SymFunc)> {
        self.sectors.iter().map(|(c, f)| (*c, f))
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> ChargedState {
        let mut out = ChargedState::zero();
        for (q, f) in &self.sectors {
            out.add_sector(*q, &f.scale(c));
        }
        out
    }
}

impl AddAssign<&ChargedState> for ChargedState {
    fn add_assign(&mut self, rhs: &ChargedState) {
        for (c, f) in &rhs.sectors {
            self.add_sector(*c, f);
        }
    }
}

impl Add for ChargedState {
    type Output = ChargedState;
    fn add(mut self, rhs: ChargedState) -> ChargedState {
        self += &rhs;
        self
    }
}

impl fmt::Display for ChargedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sectors.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.sectors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "|{c}, {v}⟩")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChargedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SectorRecord {
    charge: i64,
    value: SymFunc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateRecord {
    sectors: Vec<SectorRecord>,
}

impl Serialize for ChargedState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StateRecord {
            sectors: self.sectors.iter().map(|(c, v)| SectorRecord { charge: *c, value: v.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChargedState {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let record = StateRecord::deserialize(d)?;
        let mut out = ChargedState::zero();
        for r in record.sectors {
            out.add_sector(r.charge, &r.value);
        }
        Ok(out)
    }
}
