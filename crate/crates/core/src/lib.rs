//! Signed Eulerian numbers on involutions.
//!
//! `f(n,k)` is the number of even involutions of `S_n` with `k` rises minus
//! the number of odd ones. This crate computes it, together with the
//! surrounding counts of generalized involutions, from closed formulas and
//! checks every formula against exhaustive enumeration:
//!
//! - [`exact`]: big-integer binomials and factorials,
//! - [`perm`]: permutation statistics and enumeration oracles,
//! - [`geninv`]: generalized involutions and their polarization,
//! - [`closed`]: closed forms, inversions and recurrences,
//! - [`series`]: truncated bivariate series for the generating functions,
//! - [`verify`]: range checks producing machine-readable reports.

pub mod caps;
pub mod closed;
pub mod error;
pub mod exact;
pub mod geninv;
pub mod perm;
pub mod series;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use exact::{binomial, factorial, ExactInt};
pub use geninv::{GeneralizedInvolution, SymMatrix};
pub use perm::{Permutation, StatTable, TableKind};
pub use series::Series;
pub use verify::{Identity, RangeArgs, Report, Status};
