//! Constraint types, hypothesis checks, and the three-way verdict.
//!
//! Two constraint shapes recur throughout the crate:
//!
//! * **disc**: `x` lies in the closed ball of radius `r` around a center
//!   vector `a`;
//! * **segment**: two scalars `lower = γ`, `upper = Γ` and a nonzero
//!   reference vector `y` bound a vector `x` through
//!   `Re inner(Γ·y − x, x − γ·y) >= 0`, equivalently
//!   `‖x − ((Γ+γ)/2)·y‖ <= ½·|Γ−γ|·‖y‖`.
//!
//! Every check reports a signed margin (nonnegative means satisfied) and a
//! [`Verdict`] obtained by folding the margin against the tolerance band at
//! the margin's own scale. `BOUNDARY` counts as satisfied.
//!
//! JSON wire forms: `{"disc": {"a": [...], "r": 0.5}}` and
//! `{"segment": {"gamma": ..., "Gamma": ..., "y": [...]}}` (see
//! [`Constraint`]).

use crate::error::Error;
use crate::scalar::{Field, Scalar};
use crate::tolerance::Tolerance;
use crate::vector::{inner_unchecked, norm, Vector};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Three-way outcome of any margin test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    Boundary,
}

impl Verdict {
    /// `HOLDS` and `BOUNDARY` both count as satisfied.
    pub fn satisfied(self) -> bool {
        self != Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Boundary => "BOUNDARY",
        })
    }
}

/// Fold a signed margin against a band half-width into a verdict.
pub fn classify(margin: f64, band: f64) -> Verdict {
    if margin.abs() <= band {
        Verdict::Boundary
    } else if margin >= 0.0 {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// A margin together with its folded verdict.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisStatus {
    pub verdict: Verdict,
    /// Signed margin; nonnegative means the constraint is satisfied exactly.
    pub margin: f64,
}

impl HypothesisStatus {
    pub fn from_margin(margin: f64, band: f64) -> HypothesisStatus {
        HypothesisStatus {
            verdict: classify(margin, band),
            margin,
        }
    }

    /// Strict variant: satisfied only when the margin clears the band on
    /// the positive side. Used for hypotheses whose bound degenerates at
    /// equality, so the band folds into FAILS instead of BOUNDARY.
    pub fn strict_from_margin(margin: f64, band: f64) -> HypothesisStatus {
        HypothesisStatus {
            verdict: if margin > band {
                Verdict::Holds
            } else {
                Verdict::Fails
            },
            margin,
        }
    }

    pub fn satisfied(&self) -> bool {
        self.verdict.satisfied()
    }
}

// ---------------------------------------------------------------------------
// Disc constraint
// ---------------------------------------------------------------------------

/// Closed ball `{ v : ‖v − a‖ <= r }` with center `a` and radius `r > 0`.
///
/// JSON form: `{"a": [...], "r": 0.5}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DiscRaw")]
pub struct DiscConstraint {
    #[serde(rename = "a")]
    center: Vector,
    #[serde(rename = "r")]
    radius: f64,
}

#[derive(Deserialize)]
struct DiscRaw {
    a: Vector,
    r: f64,
}

impl TryFrom<DiscRaw> for DiscConstraint {
    type Error = Error;
    fn try_from(raw: DiscRaw) -> Result<Self, Error> {
        DiscConstraint::new(raw.a, raw.r)
    }
}

impl DiscConstraint {
    pub fn new(center: Vector, radius: f64) -> Result<DiscConstraint, Error> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::BadRadius {
                value: radius,
                requirement: "finite and > 0",
            });
        }
        Ok(DiscConstraint { center, radius })
    }

    pub fn center(&self) -> &Vector {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn center_norm(&self) -> f64 {
        norm(&self.center)
    }
}

/// Position of the disc's center norm relative to its radius; the reverse
/// bounds for disc-constrained vectors split into these three cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscCase {
    NormAboveRadius,
    NormEqualRadius,
    NormBelowRadius,
}

impl DiscCase {
    pub fn tag(self) -> &'static str {
        match self {
            DiscCase::NormAboveRadius => "norm-above-radius",
            DiscCase::NormEqualRadius => "norm-equal-radius",
            DiscCase::NormBelowRadius => "norm-below-radius",
        }
    }
}

/// Which of the three disc cases applies, with equality resolved inside the
/// tolerance band at scale `max(1, ‖a‖, r)`.
pub fn disc_case(disc: &DiscConstraint, tol: &Tolerance) -> DiscCase {
    let a = disc.center_norm();
    let r = disc.radius();
    let band = tol.band(a.max(r));
    if (a - r).abs() <= band {
        DiscCase::NormEqualRadius
    } else if a > r {
        DiscCase::NormAboveRadius
    } else {
        DiscCase::NormBelowRadius
    }
}

/// Membership check `‖x − a‖ <= r`.
///
/// Margin is `r − ‖x − a‖`, banded at scale `max(1, r, ‖x − a‖)`.
pub fn check_disc(
    x: &Vector,
    disc: &DiscConstraint,
    tol: &Tolerance,
) -> Result<HypothesisStatus, Error> {
    if !x.same_space(disc.center()) {
        return Err(Error::mismatch(format!(
            "vector (dim {}, {}) and disc center (dim {}, {}) must share a space",
            x.dim(),
            x.field().name(),
            disc.center().dim(),
            disc.center().field().name()
        )));
    }
    let d = norm(&x.sub(disc.center()));
    let margin = disc.radius() - d;
    let band = tol.band(disc.radius().max(d));
    Ok(HypothesisStatus::from_margin(margin, band))
}

// ---------------------------------------------------------------------------
// Segment constraint
// ---------------------------------------------------------------------------

/// Scalar pair `lower = γ`, `upper = Γ` with a nonzero reference vector `y`,
/// used in the bilinear form `Re inner(Γ·y − x, x − γ·y)`.
///
/// JSON form: `{"gamma": ..., "Gamma": ..., "y": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SegmentRaw")]
pub struct SegmentConstraint {
    #[serde(rename = "gamma")]
    lower: Scalar,
    #[serde(rename = "Gamma")]
    upper: Scalar,
    #[serde(rename = "y")]
    reference: Vector,
}

#[derive(Deserialize)]
struct SegmentRaw {
    gamma: Scalar,
    #[serde(rename = "Gamma")]
    upper: Scalar,
    y: Vector,
}

impl TryFrom<SegmentRaw> for SegmentConstraint {
    type Error = Error;
    fn try_from(raw: SegmentRaw) -> Result<Self, Error> {
        SegmentConstraint::new(raw.gamma, raw.upper, raw.y)
    }
}

impl SegmentConstraint {
    pub fn new(
        lower: Scalar,
        upper: Scalar,
        reference: Vector,
    ) -> Result<SegmentConstraint, Error> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::mismatch("segment endpoints must be finite"));
        }
        if reference.is_zero() {
            return Err(Error::ZeroReference {
                label: "segment reference",
            });
        }
        Ok(SegmentConstraint {
            lower,
            upper,
            reference,
        })
    }

    /// Real endpoints `[lo, hi]` around the given reference vector.
    pub fn real(lo: f64, hi: f64, reference: Vector) -> Result<SegmentConstraint, Error> {
        SegmentConstraint::new(Scalar::real(lo), Scalar::real(hi), reference)
    }

    /// Lower endpoint γ.
    pub fn lower(&self) -> Scalar {
        self.lower
    }

    /// Upper endpoint Γ.
    pub fn upper(&self) -> Scalar {
        self.upper
    }

    /// The reference vector `y`.
    pub fn reference(&self) -> &Vector {
        &self.reference
    }

    pub fn field(&self) -> Field {
        self.lower
            .field()
            .join(self.upper.field())
            .join(self.reference.field())
    }

    /// Midpoint `(Γ + γ) / 2`.
    pub fn mid(&self) -> Scalar {
        (self.upper + self.lower).scale(0.5)
    }

    /// Half-difference `(Γ − γ) / 2`.
    pub fn half_diff(&self) -> Scalar {
        (self.upper - self.lower).scale(0.5)
    }

    /// `Re(Γ · conj(γ))`, the quantity whose sign splits the segment bounds
    /// into regimes.
    pub fn re_product(&self) -> f64 {
        (self.upper * self.lower.conj()).re()
    }

    /// `|Γ + γ|`.
    pub fn sum_abs(&self) -> f64 {
        (self.upper + self.lower).abs()
    }

    /// `|Γ − γ|`.
    pub fn diff_abs(&self) -> f64 {
        (self.upper - self.lower).abs()
    }

    /// Largest endpoint magnitude, the natural linear scale of the
    /// endpoints.
    pub fn endpoint_scale(&self) -> f64 {
        self.upper.abs().max(self.lower.abs())
    }

    /// The equivalent ball description: center `((Γ+γ)/2)·y` and radius
    /// `½·|Γ−γ|·‖y‖`.
    pub fn ball_center(&self) -> Vector {
        self.reference.scaled(self.mid())
    }

    pub fn ball_radius(&self) -> f64 {
        0.5 * self.diff_abs() * norm(&self.reference)
    }
}

/// Sign of `Re(Γ · conj(γ))`; the segment-constrained reverse bounds take a
/// different shape in each regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentRegime {
    RePositive,
    ReZero,
    ReNegative,
}

impl SegmentRegime {
    pub fn tag(self) -> &'static str {
        match self {
            SegmentRegime::RePositive => "re-positive",
            SegmentRegime::ReZero => "re-zero",
            SegmentRegime::ReNegative => "re-negative",
        }
    }
}

/// Regime split for a raw endpoint pair, with zero resolved inside the
/// tolerance band at scale `max(1, |Γ|·|γ|)`.
pub fn endpoint_regime(lower: Scalar, upper: Scalar, tol: &Tolerance) -> SegmentRegime {
    let p = (upper * lower.conj()).re();
    let band = tol.band(upper.abs() * lower.abs());
    if p.abs() <= band {
        SegmentRegime::ReZero
    } else if p > 0.0 {
        SegmentRegime::RePositive
    } else {
        SegmentRegime::ReNegative
    }
}

/// Which regime a segment constraint falls in.
pub fn segment_regime(seg: &SegmentConstraint, tol: &Tolerance) -> SegmentRegime {
    endpoint_regime(seg.lower, seg.upper, tol)
}

fn require_pair(x: &Vector, seg: &SegmentConstraint) -> Result<(), Error> {
    if x.same_space(seg.reference()) {
        Ok(())
    } else {
        Err(Error::mismatch(format!(
            "vector (dim {}, {}) and segment reference (dim {}, {}) must share a space",
            x.dim(),
            x.field().name(),
            seg.reference().dim(),
            seg.reference().field().name()
        )))
    }
}

/// Bilinear form `Re inner(Γ·y − x, x − γ·y)`.
pub fn segment_form(x: &Vector, seg: &SegmentConstraint) -> Result<f64, Error> {
    require_pair(x, seg)?;
    let left = seg.reference().scaled(seg.upper()).sub(x);
    let right = x.sub(&seg.reference().scaled(seg.lower()));
    Ok(inner_unchecked(&left, &right).re())
}

/// Segment hypothesis in bilinear form: margin `Re inner(Γy − x, x − γy)`,
/// banded at scale `max(1, ‖Γy − x‖·‖x − γy‖)` — the natural magnitude of
/// the form.
pub fn check_segment_re(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
) -> Result<HypothesisStatus, Error> {
    require_pair(x, seg)?;
    let left = seg.reference().scaled(seg.upper()).sub(x);
    let right = x.sub(&seg.reference().scaled(seg.lower()));
    let margin = inner_unchecked(&left, &right).re();
    let band = tol.band(norm(&left) * norm(&right));
    Ok(HypothesisStatus::from_margin(margin, band))
}

/// Segment hypothesis in distance form: margin
/// `½·|Γ−γ|·‖y‖ − ‖x − ((Γ+γ)/2)·y‖`, banded at scale
/// `max(1, bound, distance)`.
///
/// Its margin and the bilinear margin satisfy
/// `re_margin = bound² − distance²` exactly, so the two forms agree on
/// satisfaction up to rounding.
pub fn check_segment_norm(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
) -> Result<HypothesisStatus, Error> {
    require_pair(x, seg)?;
    let bound = seg.ball_radius();
    let dist = norm(&x.sub(&seg.ball_center()));
    let margin = bound - dist;
    let band = tol.band(bound.max(dist));
    Ok(HypothesisStatus::from_margin(margin, band))
}

// ---------------------------------------------------------------------------
// Wire form
// ---------------------------------------------------------------------------

/// Either constraint shape, as read from configuration or CLI files:
/// `{"disc": {...}}` or `{"segment": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Disc(DiscConstraint),
    Segment(SegmentConstraint),
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn disc_membership_margins() {
        // x=(1,0.3), a=(1,0), r=0.5: distance 0.3, margin 0.2.
        let a = Vector::real(&[1.0, 0.0]).unwrap();
        let x = Vector::real(&[1.0, 0.3]).unwrap();
        let disc = DiscConstraint::new(a.clone(), 0.5).unwrap();
        let st = check_disc(&x, &disc, &tol()).unwrap();
        assert_eq!(st.verdict, Verdict::Holds);
        assert_abs_diff_eq!(st.margin, 0.2, epsilon = 1e-15);

        // Center of the ball: margin r.
        let st = check_disc(&a, &disc, &tol()).unwrap();
        assert_eq!(st.verdict, Verdict::Holds);
        assert_abs_diff_eq!(st.margin, 0.5, epsilon = 1e-15);

        // Far outside: x=(2,0), a=(0,0), r=1, margin −1.
        let far = DiscConstraint::new(Vector::real(&[0.0, 0.0]).unwrap(), 1.0).unwrap();
        let x2 = Vector::real(&[2.0, 0.0]).unwrap();
        let st = check_disc(&x2, &far, &tol()).unwrap();
        assert_eq!(st.verdict, Verdict::Fails);
        assert_abs_diff_eq!(st.margin, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn disc_rejects_bad_radius() {
        let a = Vector::real(&[1.0]).unwrap();
        assert!(matches!(
            DiscConstraint::new(a.clone(), 0.0),
            Err(Error::BadRadius { .. })
        ));
        assert!(matches!(
            DiscConstraint::new(a, -1.0),
            Err(Error::BadRadius { .. })
        ));
    }

    #[test]
    fn disc_case_splits_on_center_norm() {
        let t = tol();
        let mk = |coords: &[f64], r| {
            DiscConstraint::new(Vector::real(coords).unwrap(), r).unwrap()
        };
        assert_eq!(disc_case(&mk(&[1.0, 0.0], 0.5), &t), DiscCase::NormAboveRadius);
        assert_eq!(disc_case(&mk(&[0.5, 0.0], 0.5), &t), DiscCase::NormEqualRadius);
        assert_eq!(disc_case(&mk(&[0.2, 0.0], 1.0), &t), DiscCase::NormBelowRadius);
    }

    #[test]
    fn segment_checks_on_reference_instance() {
        // y=(1,0), x=(1.5,0.2), lower 1, upper 2:
        //   re margin = Re<(2,0)-(1.5,0.2), (1.5,0.2)-(1,0)> = 0.5*0.5 - 0.2*0.2 = 0.21
        //   norm margin = 0.5*1*1 - |(0, 0.2)| = 0.3.
        let y = Vector::real(&[1.0, 0.0]).unwrap();
        let x = Vector::real(&[1.5, 0.2]).unwrap();
        let seg = SegmentConstraint::real(1.0, 2.0, y).unwrap();
        let re = check_segment_re(&x, &seg, &tol()).unwrap();
        assert_eq!(re.verdict, Verdict::Holds);
        assert_abs_diff_eq!(re.margin, 0.21, epsilon = 1e-15);
        let nm = check_segment_norm(&x, &seg, &tol()).unwrap();
        assert_eq!(nm.verdict, Verdict::Holds);
        assert_abs_diff_eq!(nm.margin, 0.3, epsilon = 1e-15);

        // x = γy: endpoint of the segment, margin 0 → BOUNDARY.
        let x_end = seg.reference().clone();
        let re = check_segment_re(&x_end, &seg, &tol()).unwrap();
        assert_eq!(re.verdict, Verdict::Boundary);
        assert_abs_diff_eq!(re.margin, 0.0, epsilon = 1e-15);

        // x = (3, 0): outside, re margin (2-3)(3-1) = −2, norm margin −1.
        let x_out = Vector::real(&[3.0, 0.0]).unwrap();
        let re = check_segment_re(&x_out, &seg, &tol()).unwrap();
        assert_eq!(re.verdict, Verdict::Fails);
        assert_abs_diff_eq!(re.margin, -2.0, epsilon = 1e-15);
        let nm = check_segment_norm(&x_out, &seg, &tol()).unwrap();
        assert_abs_diff_eq!(nm.margin, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn segment_rejects_zero_reference() {
        let zero = Vector::real(&[0.0, 0.0]).unwrap();
        assert!(matches!(
            SegmentConstraint::real(1.0, 2.0, zero),
            Err(Error::ZeroReference { .. })
        ));
    }

    #[test]
    fn segment_regime_tracks_sign_of_endpoint_product() {
        let t = tol();
        let y = Vector::real(&[1.0]).unwrap();
        let pos = SegmentConstraint::real(1.0, 2.0, y.clone()).unwrap();
        assert_eq!(segment_regime(&pos, &t), SegmentRegime::RePositive);

        // upper = 1, lower = i: Re(1 · conj(i)) = Re(−i) = 0.
        let yc = Vector::complex(&[(1.0, 0.0)]).unwrap();
        let zero =
            SegmentConstraint::new(Scalar::complex(0.0, 1.0), Scalar::real(1.0), yc).unwrap();
        assert_eq!(segment_regime(&zero, &t), SegmentRegime::ReZero);

        let neg = SegmentConstraint::real(-1.0, 2.0, y).unwrap();
        assert_eq!(segment_regime(&neg, &t), SegmentRegime::ReNegative);
    }

    #[test]
    fn segment_helpers() {
        let y = Vector::complex(&[(1.0, 0.0)]).unwrap();
        let seg =
            SegmentConstraint::new(Scalar::complex(1.0, -1.0), Scalar::complex(3.0, 1.0), y)
                .unwrap();
        let mid = seg.mid();
        assert_eq!((mid.re(), mid.im()), (2.0, 0.0));
        let hd = seg.half_diff();
        assert_eq!((hd.re(), hd.im()), (1.0, 1.0));
        // Re((3+i) · conj(1−i)) = Re((3+i)(1+i)) = Re(2+4i) = 2.
        assert_abs_diff_eq!(seg.re_product(), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(seg.diff_abs(), 8.0f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(seg.ball_radius(), 0.5 * 8.0f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn translation_invariance_of_disc_margin() {
        let x = Vector::real(&[0.4, -0.7, 1.1]).unwrap();
        let a = Vector::real(&[0.5, -0.5, 1.0]).unwrap();
        let t = Vector::real(&[10.0, -3.0, 0.25]).unwrap();
        let d1 = DiscConstraint::new(a.clone(), 0.6).unwrap();
        let d2 = DiscConstraint::new(a.add(&t), 0.6).unwrap();
        let m1 = check_disc(&x, &d1, &tol()).unwrap().margin;
        let m2 = check_disc(&x.add(&t), &d2, &tol()).unwrap().margin;
        assert_abs_diff_eq!(m1, m2, epsilon = 1e-12);
    }

    #[test]
    fn constraint_json_shapes() {
        let c: Constraint =
            serde_json::from_str(r#"{"disc":{"a":[1.0,0.0],"r":0.5}}"#).unwrap();
        match c {
            Constraint::Disc(d) => assert_eq!(d.radius(), 0.5),
            _ => panic!("expected disc"),
        }
        assert!(
            serde_json::from_str::<Constraint>(r#"{"disc":{"a":[1.0],"r":-1.0}}"#).is_err()
        );

        let c: Constraint = serde_json::from_str(
            r#"{"segment":{"gamma":1.0,"Gamma":[2.0,1.0],"y":[1.0,0.0]}}"#,
        )
        .unwrap();
        match c {
            Constraint::Segment(s) => {
                assert_eq!(s.lower().re(), 1.0);
                assert_eq!(s.upper().im(), 1.0);
                assert_eq!(s.field(), Field::Complex);
                // Round trip preserves the field names.
                let text = serde_json::to_string(&Constraint::Segment(s)).unwrap();
                assert!(text.contains("\"gamma\""));
                assert!(text.contains("\"Gamma\""));
                assert!(text.contains("\"y\""));
            }
            _ => panic!("expected segment"),
        }
    }

    #[test]
    fn classify_is_three_way() {
        assert_eq!(classify(0.5, 1e-9), Verdict::Holds);
        assert_eq!(classify(-0.5, 1e-9), Verdict::Fails);
        assert_eq!(classify(5e-10, 1e-9), Verdict::Boundary);
        assert_eq!(classify(-5e-10, 1e-9), Verdict::Boundary);
        assert!(classify(-5e-10, 1e-9).satisfied());
    }
}
