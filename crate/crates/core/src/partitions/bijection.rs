//! The `y = 0` bijection between PDO partitions with only even
//! multiplicities and pairs with no shared part size, and the two index maps
//! `f_e`, `f_o` on `{(n, m) : n > m >= 1}`.

use std::collections::BTreeMap;

use super::{PartRun, PdoPair, PdoPartition};
use crate::error::{Error, Result};

/// Halves every run of `lambda`: a run of `2m` copies whose `i`-th copy is
/// designated goes to `mu` (designated at `i`) when `i <= m`, and to `nu`
/// (designated at `i - m`) otherwise.
pub fn bijection_forward(lambda: &PdoPartition) -> Result<PdoPair> {
    let mut mu = BTreeMap::new();
    let mut nu = BTreeMap::new();
    for (size, run) in lambda.runs() {
        if run.multiplicity % 2 == 1 {
            return Err(Error::OddMultiplicity {
                size,
                multiplicity: run.multiplicity,
            });
        }
        let half = run.multiplicity / 2;
        if run.designated <= half {
            mu.insert(
                size,
                PartRun {
                    multiplicity: half,
                    designated: run.designated,
                },
            );
        } else {
            nu.insert(
                size,
                PartRun {
                    multiplicity: half,
                    designated: run.designated - half,
                },
            );
        }
    }
    Ok(PdoPair::new(
        PdoPartition::from_map(mu),
        PdoPartition::from_map(nu),
    ))
}

pub fn bijection_inverse(pair: &PdoPair) -> Result<PdoPartition> {
    let mut parts = BTreeMap::new();
    for (size, run) in pair.mu.runs() {
        if pair.nu.contains_size(size) {
            return Err(Error::SharedPartSize { size });
        }
        parts.insert(
            size,
            PartRun {
                multiplicity: 2 * run.multiplicity,
                designated: run.designated,
            },
        );
    }
    for (size, run) in pair.nu.runs() {
        parts.insert(
            size,
            PartRun {
                multiplicity: 2 * run.multiplicity,
                designated: run.designated + run.multiplicity,
            },
        );
    }
    Ok(PdoPartition::from_map(parts))
}

/// Membership in `S = {(n, m) : n > m >= 1}`.
pub fn in_domain(n: i64, m: i64) -> bool {
    m >= 1 && n > m
}

fn check_domain(n: i64, m: i64) -> Result<()> {
    if in_domain(n, m) {
        Ok(())
    } else {
        Err(Error::NotInDomain { n, m })
    }
}

/// `f_e(n, m) = (n + m, n - m)`, onto the same-parity pairs of `S`.
pub fn fe_map(n: i64, m: i64) -> Result<(i64, i64)> {
    check_domain(n, m)?;
    Ok((n + m, n - m))
}

/// `f_o(n, m) = (n + m - 1, n - m)`, onto the opposite-parity pairs of `S`.
pub fn fo_map(n: i64, m: i64) -> Result<(i64, i64)> {
    check_domain(n, m)?;
    Ok((n + m - 1, n - m))
}

pub fn fe_inverse(a: i64, b: i64) -> Result<(i64, i64)> {
    if !in_domain(a, b) || (a - b) % 2 != 0 {
        return Err(Error::NotInDomain { n: a, m: b });
    }
    Ok(((a + b) / 2, (a - b) / 2))
}

pub fn fo_inverse(a: i64, b: i64) -> Result<(i64, i64)> {
    if !in_domain(a, b) || (a - b) % 2 == 0 {
        return Err(Error::NotInDomain { n: a, m: b });
    }
    Ok(((a + b + 1) / 2, (a - b + 1) / 2))
}

/// Number of ways to split `t` copies of one size between both components
/// (each getting at least one) and designate one copy on each side, counted
/// by listing every split and designation pair.
pub fn shared_size_designations(t: u32) -> u64 {
    let mut count = 0;
    for in_mu in 1..t {
        let in_nu = t - in_mu;
        for _designated_mu in 1..=in_mu {
            for _designated_nu in 1..=in_nu {
                count += 1;
            }
        }
    }
    count
}
