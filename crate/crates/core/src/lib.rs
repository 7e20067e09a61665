//! Exact verification kit for identities about partitions into odd parts with
//! designated summands (PDO partitions).
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: exact integers, sparse polynomials in `x`, `y`, and the
//!   quadratic extension holding the conjugate pair `u`, `v`.
//! - [`series`]: truncated q-series, eta quotients, theta series and the
//!   m-dissection operator.
//! - [`chebyshev`]: Dickson polynomials `D_n = 2 T_n(t/2)` and the series
//!   `G(t, q)`, `F(t, q)` built from them.
//! - [`partitions`]: brute-force enumeration of PDO partitions, their
//!   statistics, and the bijections between them.
//! - [`identities`]: a registry of named checks, each comparing two
//!   independently computed sides modulo `q^N`.

pub mod arith;
pub mod chebyshev;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod series;

pub use arith::{Int, Monomial, MultiPoly, QuadExt, Ring, Var};
pub use error::{Error, Result};
pub use identities::{IdentityReport, Mismatch, RunConfig};
pub use partitions::{PairStats, PdoPair, PdoPartition, PdoStats};
pub use series::{EtaQuotient, IntSeries, PolySeries, TruncatedSeries};
