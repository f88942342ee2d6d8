//! Error taxonomy shared by every evaluator in the crate.
//!
//! Two families matter to callers:
//!
//! * **Domain errors** — the requested computation is undefined on the given
//!   data (mismatched spaces, zero reference vector, bad radius/interval,
//!   wrong sign regime, invalid orthonormal family, negative radicand).
//!   These are never bypassed by diagnostics mode.
//! * **[`Error::HypothesisViolated`]** — the data is well-formed but sits
//!   outside the admissible set of the bound being evaluated. Evaluators
//!   compute both sides anyway when they can and attach the full report for
//!   diagnostics; passing `force = true` converts this error into an
//!   untrusted `Ok` report instead.

use crate::report::BoundReport;
use thiserror::Error;

/// Everything that can go wrong while evaluating a bound or a check.
#[derive(Debug, Error)]
pub enum Error {
    /// Dimension or field mismatch between vectors that must share a space,
    /// or malformed numeric input (non-finite coordinate, empty vector).
    #[error("input mismatch: {0}")]
    InputMismatch(String),

    /// An orthonormal family must contain at least one member.
    #[error("orthonormal family is empty")]
    EmptyFamily,

    /// The family failed its Gram-matrix validation and a downstream
    /// operation refused to use it.
    #[error("family fails orthonormality: max Gram deviation {max_deviation:.3e} exceeds tolerance {ortho_tol:.3e}")]
    InvalidFamily { max_deviation: f64, ortho_tol: f64 },

    /// The reference vector of a segment constraint is exactly zero.
    #[error("reference vector {label} must be nonzero")]
    ZeroReference { label: &'static str },

    /// A ball radius outside its admissible range.
    #[error("bad radius {value}: {requirement}")]
    BadRadius { value: f64, requirement: &'static str },

    /// A scalar interval with `lo ≥ hi` (or a quadrature interval with
    /// `hi ≤ lo`), or a nonpositive lower endpoint where positivity is
    /// required.
    #[error("bad interval [{lo}, {hi}]: {requirement}")]
    BadInterval {
        lo: f64,
        hi: f64,
        requirement: &'static str,
    },

    /// A vector that must have unit norm does not (beyond the tolerance
    /// band).
    #[error("{label} must have unit norm, got {norm}")]
    NotUnit { label: &'static str, norm: f64 },

    /// A density that must integrate to one against the measure does not,
    /// or cannot be renormalized because its total mass is nonpositive.
    #[error("density is not unit-mass: total {total}")]
    NotUnitDensity { total: f64 },

    /// Density negative at a quadrature node.
    #[error("density is negative at node {node}: {value}")]
    NegativeDensity { node: usize, value: f64 },

    /// Total mass `Σ wᵢρᵢ ≤ 0`, so the measure cannot be renormalized.
    #[error("nonpositive total mass {total}")]
    NonpositiveMass { total: f64 },

    /// The evaluator dispatches on a sign case/regime and the data is in a
    /// different one (e.g. an evaluator that divides by `Re(Γγ̄)` was handed
    /// endpoints with `Re(Γγ̄) ≤ 0`).
    #[error("regime mismatch: requires {required}, found {found}")]
    RegimeMismatch {
        required: &'static str,
        found: &'static str,
    },

    /// The instance sits outside the admissible set of the bound. `label`
    /// names the failing condition; `report` carries the fully computed
    /// diagnostics when the formulas were still evaluable.
    #[error("hypothesis '{label}' violated for {theorem_id} (margin {margin:.6e})")]
    HypothesisViolated {
        theorem_id: &'static str,
        label: &'static str,
        margin: f64,
        report: Option<Box<BoundReport>>,
    },

    /// A square root of a negative quantity was requested; only reachable
    /// through forced evaluation outside the admissible set.
    #[error("negative radicand in {label}: {value}")]
    NegativeRadicand { label: &'static str, value: f64 },

    /// A sharpness curve was asked for an `ε` outside `(0, 1)`.
    #[error("bad epsilon {0}: must lie strictly between 0 and 1")]
    BadEpsilon(f64),

    /// A randomized search exhausted its trial budget without a witness.
    #[error("no witness found within {trials} trials")]
    NotFound { trials: u64 },

    /// A tolerance configuration that is not a positive finite number.
    #[error("bad tolerance {0}: must be positive and finite")]
    BadTolerance(f64),
}

impl Error {
    /// Mismatch constructor used pervasively by space checks.
    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::InputMismatch(msg.into())
    }
}
