//! Spectral region of 4-cycle row-stochastic matrices.
//!
//! The matrices have self-loops `alpha_1..alpha_4` in `[0, 1)` and one cycle
//! edge per row. Their eigenvalues fill `[-1, 1]` on the real axis and, off
//! it, the set `{a + ib : 0 <= a < 1, a + |b| <= 1, G(a, b) >= 0}` with
//! `G(a, b) = (b^2 + a^2 + a)^2 + 2a^2 - b^2`.
//!
//! - [`region`] decides membership and traces the two boundary pieces.
//! - [`synthesis`] builds a matrix realizing any admissible point.
//! - [`criterion`] exposes the argument parametrization and solves the
//!   realization problem a second, independent way.
//! - [`identities`] checks the supporting algebra in exact arithmetic.

pub mod criterion;
pub mod cycle;
pub mod error;
pub mod identities;
pub mod region;
pub mod scalar;
pub mod synthesis;

pub use criterion::{solve_criterion, CriterionContext, Regime};
pub use cycle::CycleMatrix4;
pub use error::{Error, Result};
pub use region::{membership, RegionStatus, RegionVerdict};
pub use scalar::{principal_arg, solve_quartic, Complex, Tolerance};
pub use synthesis::{realize, realize_via_criterion, Method, Realization};
