//! Empirical sharpness curves.
//!
//! For selected bounds this module builds explicit witness families indexed
//! by a shrink parameter `ε` and shows the bound's tightness ratio
//! approaching 1 as `ε → 0`. The reported ratios come from closed-form
//! algebra on the witness (so they are exact in `f64` down to `ε = 1e-12`),
//! while `pipeline_max_dev` records how far the full evaluator pipeline
//! strays from those closed forms on the same witnesses.

use crate::constraints::{DiscConstraint, SegmentConstraint};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::schwarz::{reverse_schwarz_disc, reverse_schwarz_segment};
use crate::tolerance::Tolerance;
use crate::vector::Vector;
use serde::Serialize;

/// One tightness-versus-`ε` curve with its limit statement.
#[derive(Clone, Debug, Serialize)]
pub struct SharpnessCurve {
    pub theorem_id: String,
    pub epsilons: Vec<f64>,
    /// Closed-form tightness ratio of the bound on the `ε`-witness.
    pub ratios: Vec<f64>,
    pub limit_claim: String,
    /// Worst absolute deviation between the evaluator pipeline's ratio and
    /// the closed form, across all ε.
    pub pipeline_max_dev: f64,
}

fn require_epsilon(eps: f64) -> Result<(), Error> {
    if eps.is_finite() && eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::BadEpsilon(eps))
    }
}

fn require_some(epsilons: &[f64]) -> Result<(), Error> {
    if epsilons.is_empty() {
        Err(Error::mismatch("sharpness curve needs at least one epsilon"))
    } else {
        Ok(())
    }
}

/// Ball-constraint witness family: `x = (1, √ε)` in the ball of radius `√ε`
/// around `(1, 0)`. The bound's gap-to-bound ratio is exactly `1/(1+ε)`.
pub fn sharpness_disc(epsilons: &[f64], tol: &Tolerance) -> Result<SharpnessCurve, Error> {
    require_some(epsilons)?;
    let mut ratios = Vec::with_capacity(epsilons.len());
    let mut max_dev: f64 = 0.0;
    for &eps in epsilons {
        require_epsilon(eps)?;
        let ratio = 1.0 / (1.0 + eps);
        let s = eps.sqrt();
        let x = Vector::real(&[1.0, s])?;
        let disc = DiscConstraint::new(Vector::real(&[1.0, 0.0])?, s)?;
        let rep = reverse_schwarz_disc(&x, &disc, tol, false)?;
        let evaluated = rep
            .tightness
            .ok_or_else(|| Error::mismatch("ball-constraint report lacks a tightness ratio"))?;
        max_dev = max_dev.max((evaluated - ratio).abs());
        ratios.push(ratio);
    }
    Ok(SharpnessCurve {
        theorem_id: "schwarz-disc".to_owned(),
        epsilons: epsilons.to_vec(),
        ratios,
        limit_claim: "gap/bound -> 1 as epsilon -> 0".to_owned(),
        pipeline_max_dev: max_dev,
    })
}

/// Segment-constraint witness family: `y = (1)`, endpoints `1−ε` and `1+ε`,
/// `x = (1−ε)·y` sitting on the constraint sphere. The ratio between the
/// chain's first and middle links is exactly `1 − ε²`.
pub fn sharpness_segment(epsilons: &[f64], tol: &Tolerance) -> Result<SharpnessCurve, Error> {
    require_some(epsilons)?;
    let mut ratios = Vec::with_capacity(epsilons.len());
    let mut max_dev: f64 = 0.0;
    for &eps in epsilons {
        require_epsilon(eps)?;
        let ratio = 1.0 - eps * eps;
        let y = Vector::real(&[1.0])?;
        let seg = SegmentConstraint::new(
            Scalar::real(1.0 - eps),
            Scalar::real(1.0 + eps),
            y.clone(),
        )?;
        let x = Vector::real(&[1.0 - eps])?;
        let rep = reverse_schwarz_segment(&x, &seg, tol, false)?;
        let mid = rep
            .value("chain:normalized-re-square")
            .ok_or_else(|| Error::mismatch("segment report lacks its middle link"))?;
        if mid <= 0.0 {
            return Err(Error::mismatch(
                "segment witness degenerated: middle link is nonpositive",
            ));
        }
        let evaluated = rep.lhs / mid;
        max_dev = max_dev.max((evaluated - ratio).abs());
        ratios.push(ratio);
    }
    Ok(SharpnessCurve {
        theorem_id: "schwarz-segment".to_owned(),
        epsilons: epsilons.to_vec(),
        ratios,
        limit_claim: "lhs/middle -> 1 as epsilon -> 0".to_owned(),
        pipeline_max_dev: max_dev,
    })
}

/// Dispatch by theorem id.
pub fn sharpness_for(
    theorem_id: &str,
    epsilons: &[f64],
    tol: &Tolerance,
) -> Result<SharpnessCurve, Error> {
    match theorem_id {
        "schwarz-disc" => sharpness_disc(epsilons, tol),
        "schwarz-segment" => sharpness_segment(epsilons, tol),
        other => Err(Error::mismatch(format!(
            "no sharpness demonstration for '{other}' (available: schwarz-disc, schwarz-segment)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_ratios_approach_one() {
        let eps = [0.5, 1e-3, 1e-6];
        let curve = sharpness_disc(&eps, &Tolerance::default()).unwrap();
        assert_eq!(curve.ratios[0], 1.0 / 1.5);
        assert_eq!(curve.ratios[1], 1.0 / (1.0 + 1e-3));
        assert_eq!(curve.ratios[2], 1.0 / (1.0 + 1e-6));
        assert!(curve.ratios[2] > 0.999999);
        assert!(
            curve.pipeline_max_dev < 1e-9,
            "pipeline deviated by {}",
            curve.pipeline_max_dev
        );
    }

    #[test]
    fn segment_ratios_approach_one() {
        let eps = [0.5, 1e-2, 1e-3, 1e-12];
        let curve = sharpness_segment(&eps, &Tolerance::default()).unwrap();
        assert_eq!(curve.ratios[0], 0.75);
        assert_eq!(curve.ratios[1], 1.0 - 1e-4);
        assert_eq!(curve.ratios[2], 1.0 - 1e-6);
        assert!(curve.ratios[2] >= 0.999999 - 1e-12);
        assert_eq!(curve.ratios[3], 1.0 - 1e-24);
        assert!(
            curve.pipeline_max_dev < 1e-9,
            "pipeline deviated by {}",
            curve.pipeline_max_dev
        );
    }

    #[test]
    fn epsilon_domain_is_enforced() {
        let tol = Tolerance::default();
        for bad in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(matches!(
                sharpness_disc(&[bad], &tol),
                Err(Error::BadEpsilon(_))
            ));
            assert!(matches!(
                sharpness_segment(&[bad], &tol),
                Err(Error::BadEpsilon(_))
            ));
        }
        assert!(sharpness_disc(&[], &tol).is_err());
    }

    #[test]
    fn dispatch_knows_its_ids() {
        let tol = Tolerance::default();
        assert_eq!(
            sharpness_for("schwarz-disc", &[0.25], &tol).unwrap().theorem_id,
            "schwarz-disc"
        );
        assert_eq!(
            sharpness_for("schwarz-segment", &[0.25], &tol)
                .unwrap()
                .theorem_id,
            "schwarz-segment"
        );
        assert!(sharpness_for("triangle-disc", &[0.25], &tol).is_err());
    }
}
