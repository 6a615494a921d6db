//! Exact p-rank statistics for Artin-Schreier covers `y^p - y = f(x)` of the
//! projective line that are unramified at infinity.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`]: arithmetic in `F_{p^n}` and in residue fields `F_q[t]/(pi)`;
//! * [`poly`]: polynomials, squarefree decomposition, irreducibles, partial
//!   fractions, and the admissible normal form of a rational function;
//! * [`partitions`]: the partition families indexing p-rank strata;
//! * [`census`]: exact counts of admissible functions per multiplicity vector,
//!   by a fast constructive formula and by brute-force enumeration;
//! * [`densities`]: limiting p-rank distributions and their finite-field
//!   counterparts.

pub mod census;
pub mod densities;
pub mod error;
pub mod field;
pub mod partitions;
pub mod poly;
mod text_serde;

pub use error::{Error, Result};
