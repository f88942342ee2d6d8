//! Numerical tolerance policy.
//!
//! A single relative tolerance `eta` drives every verdict in the crate. A
//! margin `m` measured at natural scale `s` is classified as boundary when
//! `|m| <= eta * max(1, s)`: absolute for quantities of order one or below,
//! relative above that. The default `eta` is `1e-9`; the CLI lets the
//! environment override it.

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// Default relative tolerance.
pub const DEFAULT_ETA: f64 = 1e-9;

/// Tolerance context threaded through every evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    eta: f64,
}

impl Tolerance {
    /// A tolerance must be a finite, strictly positive number below 1.
    pub fn new(eta: f64) -> Result<Tolerance, Error> {
        if eta.is_finite() && eta > 0.0 && eta < 1.0 {
            Ok(Tolerance { eta })
        } else {
            Err(Error::BadTolerance(eta))
        }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Half-width of the boundary band for a quantity whose natural scale is
    /// `scale`: `eta * max(1, scale)`.
    pub fn band(&self, scale: f64) -> f64 {
        self.eta * scale.abs().max(1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eta: DEFAULT_ETA }
    }
}
