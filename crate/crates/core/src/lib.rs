//! Numerical evaluation and stress-testing of reverse bounds for the
//! Schwarz, triangle, and Grüss-type inequalities, together with upper
//! bounds on orthogonal-expansion defects, over finite-dimensional real and
//! complex inner product spaces and quadrature-discretized weighted
//! function spaces.
//!
//! The crate is organized in three layers:
//!
//! * **Spaces and constraints** — [`scalar`], [`vector`], [`tolerance`],
//!   [`constraints`]: exact `f64` scalars over ℝ or ℂ, inner products
//!   (linear in the first slot), closed-ball and two-endpoint segment
//!   constraints with three-way verdicts.
//! * **Evaluators** — [`schwarz`], [`triangle`], [`gruss`], [`bessel`],
//!   [`integral`]: each bound takes an instance, checks its hypotheses,
//!   evaluates every link of the inequality chain, and returns a
//!   [`report::BoundReport`]; `force = true` downgrades hypothesis failures
//!   to untrusted diagnostics.
//! * **Harness** — [`harness`]: counter-based seeded generators, batch
//!   sweeps (parallel when the `parallel` feature is on, byte-identical
//!   output either way), and empirical sharpness curves.

pub mod bessel;
pub mod constraints;
pub mod error;
pub mod gruss;
pub mod harness;
pub mod integral;
pub mod report;
pub mod scalar;
pub mod schwarz;
pub mod tolerance;
pub mod triangle;
pub mod vector;

pub use constraints::Verdict;
pub use error::Error;
pub use report::BoundReport;
pub use scalar::{Field, Scalar};
pub use tolerance::{Tolerance, DEFAULT_ETA};
pub use vector::{OrthonormalFamily, Vector};
