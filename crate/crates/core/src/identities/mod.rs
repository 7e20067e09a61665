//! Registry of named identity checks.
//!
//! Every check compares two sides computed by separate code paths and
//! produces an [`IdentityReport`]. The truncation `N` of a report is the
//! order of the compared series: coefficients of `q^0 .. q^{N-1}` are checked
//! (for the combinatorial property checks it is the size bound instead, see
//! each entry's summary).
//!
//! Every identity is checked in Dickson form, `D_n(t) = 2 T_n(t/2)`:
//!
//! | displayed form                                   | checked form                          |
//! |--------------------------------------------------|---------------------------------------|
//! | `1 + 2 sum T_{2n}(x/2) q^{n^2}`                  | `1 + sum D_{2n}(x) q^{n^2}`           |
//! | `4q f8^2/f4 sum T_{4n-2} q^{2n^2-2n}`            | `2q f8^2/f4 sum D_{4n-2} q^{2n^2-2n}` |
//! | `4q^2 (sum T_{4n-2} q^{4n(n-1)})^2`              | `q^2 (sum D_{4n-2} q^{4n(n-1)})^2`    |
//! | `(sum q^{2n(n-1)})(sum T_{4n-2} q^{2n(n-1)})`    | both sides doubled                    |
//! | `2 (sum T_{4n-2}(x/2) ..)(sum T_{4n-2}(y/2) ..)` | both sides doubled                    |
//! | `2 sum T_{2n+1}(x/2) q^{n^2+n}`                  | `sum D_{2n+1}(x) q^{n^2+n}`           |

mod checks;
pub mod forms;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::Ring;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub power: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub truncation: usize,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} (N = {})", self.id, self.truncation)?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                ": first mismatch at q^{}: expected {}, actual {}",
                m.power, m.expected, m.actual
            )?;
        }
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Overrides every check's default truncation.
    pub truncation: Option<usize>,
    /// Harness self-test: perturbs the computed side of the first series
    /// comparison at this power so that the check must fail there.
    pub corrupt_power: Option<usize>,
    /// Seed for randomized checks.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            truncation: None,
            corrupt_power: None,
            seed: 0x5EED_CAFE,
        }
    }
}

/// One registered identity.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_truncation: usize,
    run: fn(&mut Check) -> Result<()>,
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("default_truncation", &self.default_truncation)
            .finish()
    }
}

impl IdentityCheck {
    pub fn run(&self, config: &RunConfig) -> IdentityReport {
        let truncation = config.truncation.unwrap_or(self.default_truncation);
        let mut check = Check {
            truncation,
            seed: config.seed,
            corrupt_power: config.corrupt_power,
            mismatch: None,
            notes: Vec::new(),
        };
        if let Err(err) = (self.run)(&mut check) {
            check.fail_with_error(0, &err);
        }
        check.into_report(self.id)
    }
}

pub fn registry() -> &'static [IdentityCheck] {
    checks::REGISTRY
}

pub fn find(id: &str) -> Option<&'static IdentityCheck> {
    registry().iter().find(|c| c.id == id)
}

pub fn run_check(id: &str, config: &RunConfig) -> Result<IdentityReport> {
    find(id)
        .map(|c| c.run(config))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs every registered check (in parallel); reports keep registry order.
pub fn run_all(config: &RunConfig) -> Vec<IdentityReport> {
    registry().par_iter().map(|c| c.run(config)).collect()
}

/// Mutable state of one running check.
pub(crate) struct Check {
    pub truncation: usize,
    pub seed: u64,
    corrupt_power: Option<usize>,
    mismatch: Option<Mismatch>,
    notes: Vec<String>,
}

impl Check {
    pub fn failed(&self) -> bool {
        self.mismatch.is_some()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn fail(&mut self, label: &str, power: usize, expected: String, actual: String) {
        if self.mismatch.is_none() {
            self.mismatch = Some(Mismatch {
                power,
                expected,
                actual,
            });
            self.notes.push(format!("failed: {label}"));
        }
    }

    pub fn fail_with_error(&mut self, power: usize, err: &Error) {
        self.fail("error", power, "no error".into(), err.to_string());
    }

    /// Compares the coefficients of `q^0 .. q^{upto-1}`. `actual` is the side
    /// under test and is the one perturbed in self-test mode.
    pub fn series<C: Ring>(
        &mut self,
        label: &str,
        expected: &TruncatedSeries<C>,
        actual: &TruncatedSeries<C>,
        upto: usize,
    ) {
        if self.failed() {
            return;
        }
        assert!(
            expected.order() >= upto && actual.order() >= upto,
            "{label}: sides known to q^{} and q^{}, need q^{upto}",
            expected.order(),
            actual.order()
        );
        let expected = expected.truncate(upto);
        let mut actual = actual.truncate(upto);
        if let Some(p) = self.corrupt_power {
            if p < upto {
                if let Some(c) = actual.coeff_mut(p) {
                    c.add_assign_ref(&C::one());
                }
                self.corrupt_power = None;
            }
        }
        if let Some((power, e, a)) = expected.first_mismatch(&actual) {
            self.fail(label, power, e.to_string(), a.to_string());
        }
    }

    /// Scalar comparison for the combinatorial checks; `index` locates the
    /// failing case.
    pub fn equal<T: PartialEq + fmt::Display>(
        &mut self,
        label: &str,
        index: usize,
        expected: T,
        actual: T,
    ) {
        if self.failed() {
            return;
        }
        if self.take_corruption(index) {
            self.fail(
                label,
                index,
                expected.to_string(),
                format!("{actual} (corrupted)"),
            );
        } else if expected != actual {
            self.fail(label, index, expected.to_string(), actual.to_string());
        }
    }

    pub fn ensure(&mut self, label: &str, index: usize, ok: bool, what: impl FnOnce() -> String) {
        if self.failed() {
            return;
        }
        if self.take_corruption(index) {
            self.fail(label, index, "true".into(), "corrupted".into());
        } else if !ok {
            self.fail(label, index, "true".into(), what());
        }
    }

    /// Scalar comparisons have nothing to perturb, so the self-test forces a
    /// failure at the first case whose index equals the corrupted power.
    fn take_corruption(&mut self, index: usize) -> bool {
        if self.corrupt_power == Some(index) {
            self.corrupt_power = None;
            true
        } else {
            false
        }
    }

    fn into_report(self, id: &str) -> IdentityReport {
        IdentityReport {
            id: id.to_string(),
            truncation: self.truncation,
            pass: self.mismatch.is_none(),
            first_mismatch: self.mismatch,
            note: (!self.notes.is_empty()).then(|| self.notes.join("; ")),
        }
    }
}
