//! Exact q-series toolkit for MacMahon's divisor-sum series.
//!
//! * [`series`]: truncated power series over `Z`, the arithmetic substrate.
//! * [`qfunc`]: q-Pochhammer products, Gaussian binomials, binomials.
//! * [`macmahon`]: the `A`/`C` families and their truncations.
//! * [`sides`]: both sides of every series identity.
//! * [`oracles`]: brute-force partition counts used as independent checks.
//! * [`identity`]: the identity registry and verification runner.

pub mod error;
pub mod identity;
pub mod macmahon;
pub mod oracles;
pub mod qfunc;
pub mod series;
pub mod sides;
pub mod weights;

pub use error::{Error, Result};
pub use identity::{
    limit_consistency, verify, verify_suite, GridSpec, IdentityId, IdentityReport, Params, Status,
};
pub use macmahon::{macmahon_a, macmahon_c, Family, SeriesSpec, Truncation};
pub use oracles::{Oracle, PartitionMultiset};
pub use qfunc::{binomial, q_binomial, QPolynomial, Sign};
pub use series::{Coefficient, TruncatedSeries};
