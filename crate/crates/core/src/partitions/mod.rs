//! PDO partitions: partitions into odd parts in which exactly one occurrence
//! of each distinct part size is designated.
//!
//! Text form lists parts in non-increasing order and marks the designated
//! occurrence with an apostrophe, e.g. `3+3'+1'+1`. The empty partition is
//! written `∅`.

mod bijection;
mod enumerate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use bijection::{
    bijection_forward, bijection_inverse, fe_inverse, fe_map, fo_inverse, fo_map, in_domain,
    shared_size_designations,
};
pub use enumerate::{
    ak_enumerated, ck_enumerated, ck_enumerated_all, enumerate_pdo, odd_partitions, p1_enumerated,
    p2_enumerated, OddPartition,
};

/// The run of equal parts of one size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartRun {
    pub multiplicity: u32,
    /// 1-based position of the designated occurrence within the run.
    pub designated: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PdoPartition {
    parts: BTreeMap<u32, PartRun>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PdoStats {
    pub weight: u64,
    /// Number of distinct part sizes.
    pub ell_d: u32,
    /// Number of part sizes occurring an odd number of times.
    pub ell_d_odd: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PdoPair {
    pub mu: PdoPartition,
    pub nu: PdoPartition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PairStats {
    pub weight: u64,
    pub ell_d_sum: u32,
    /// Number of part sizes present in both components.
    pub ell_r: u32,
}

impl PdoPartition {
    pub fn empty() -> Self {
        PdoPartition::default()
    }

    /// Builds a partition from `(size, multiplicity, designated)` runs.
    pub fn from_runs(runs: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<Self> {
        let mut parts = BTreeMap::new();
        for (size, multiplicity, designated) in runs {
            if size % 2 == 0 {
                return Err(Error::Parse(format!("part size {size} is not odd")));
            }
            if multiplicity == 0 || designated == 0 || designated > multiplicity {
                return Err(Error::Parse(format!(
                    "size {size}: designation {designated} outside 1..={multiplicity}"
                )));
            }
            let run = PartRun {
                multiplicity,
                designated,
            };
            if parts.insert(size, run).is_some() {
                return Err(Error::Parse(format!("part size {size} listed twice")));
            }
        }
        Ok(PdoPartition { parts })
    }

    pub(crate) fn from_map(parts: BTreeMap<u32, PartRun>) -> Self {
        PdoPartition { parts }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Runs in increasing size order.
    pub fn runs(&self) -> impl DoubleEndedIterator<Item = (u32, PartRun)> + '_ {
        self.parts.iter().map(|(&s, &r)| (s, r))
    }

    pub fn run(&self, size: u32) -> Option<PartRun> {
        self.parts.get(&size).copied()
    }

    pub fn contains_size(&self, size: u32) -> bool {
        self.parts.contains_key(&size)
    }

    pub fn weight(&self) -> u64 {
        self.parts
            .iter()
            .map(|(&s, r)| s as u64 * r.multiplicity as u64)
            .sum()
    }

    pub fn stats(&self) -> PdoStats {
        PdoStats {
            weight: self.weight(),
            ell_d: self.parts.len() as u32,
            ell_d_odd: self
                .parts
                .values()
                .filter(|r| r.multiplicity % 2 == 1)
                .count() as u32,
        }
    }
}

pub fn pdo_stats(lambda: &PdoPartition) -> PdoStats {
    lambda.stats()
}

impl PdoPair {
    pub fn new(mu: PdoPartition, nu: PdoPartition) -> Self {
        PdoPair { mu, nu }
    }

    pub fn stats(&self) -> PairStats {
        PairStats {
            weight: self.mu.weight() + self.nu.weight(),
            ell_d_sum: (self.mu.parts.len() + self.nu.parts.len()) as u32,
            ell_r: self
                .mu
                .parts
                .keys()
                .filter(|s| self.nu.contains_size(**s))
                .count() as u32,
        }
    }
}

pub fn pair_stats(p: &PdoPair) -> PairStats {
    p.stats()
}

impl fmt::Display for PdoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let mut first = true;
        for (size, run) in self.parts.iter().rev() {
            for pos in 1..=run.multiplicity {
                if !first {
                    write!(f, "+")?;
                }
                first = false;
                write!(f, "{size}")?;
                if pos == run.designated {
                    write!(f, "'")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for PdoPartition {
    type Err = Error;

    /// Accepts parts in any order; the designated occurrence of a size is its
    /// position among the occurrences of that size, read left to right.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "∅" {
            return Ok(PdoPartition::empty());
        }
        // size -> (occurrences so far, designated positions)
        let mut seen: BTreeMap<u32, (u32, Vec<u32>)> = BTreeMap::new();
        for token in compact.split('+') {
            let (digits, marked) = match token.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (token, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("malformed part {token:?}")));
            }
            let size: u32 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("part {digits} is out of range")))?;
            if size == 0 || size.is_multiple_of(2) {
                return Err(Error::Parse(format!("part size {size} is not odd")));
            }
            let entry = seen.entry(size).or_insert((0, Vec::new()));
            entry.0 += 1;
            if marked {
                entry.1.push(entry.0);
            }
        }
        let mut parts = BTreeMap::new();
        for (size, (count, marks)) in seen {
            match marks.as_slice() {
                [pos] => {
                    parts.insert(
                        size,
                        PartRun {
                            multiplicity: count,
                            designated: *pos,
                        },
                    );
                }
                [] => {
                    return Err(Error::Parse(format!(
                        "part size {size} has no designated occurrence"
                    )))
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "part size {size} has {} designated occurrences",
                        marks.len()
                    )))
                }
            }
        }
        Ok(PdoPartition { parts })
    }
}

impl fmt::Display for PdoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.mu, self.nu)
    }
}

impl FromStr for PdoPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("pair must be written (mu | nu), got {t:?}")))?;
        let mut sides = inner.split('|');
        match (sides.next(), sides.next(), sides.next()) {
            (Some(mu), Some(nu), None) => Ok(PdoPair {
                mu: mu.parse()?,
                nu: nu.parse()?,
            }),
            _ => Err(Error::Parse(format!(
                "pair needs exactly one '|', got {t:?}"
            ))),
        }
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(PdoPartition);
serde_via_text!(PdoPair);
