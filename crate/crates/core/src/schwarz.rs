//! Reverse Schwarz bounds.
//!
//! The Cauchy–Schwarz inequality `|inner(x, y)|² <= ‖x‖²·‖y‖²` cannot be
//! reversed without extra information. The evaluators here quantify the
//! reversal that becomes available when the vector is confined to a closed
//! ball ([`reverse_schwarz_disc`]) or when it sits between two scalar
//! multiples of a reference vector in the bilinear-form sense
//! ([`reverse_schwarz_segment`], [`additive_reverse_segment`]).
//!
//! [`baseline_bounds`] evaluates the four classical segment-style reversals
//! that predate the sharper forms, so the two generations can be compared on
//! the same instance.

use crate::constraints::{
    check_disc, check_segment_norm, check_segment_re, disc_case, segment_regime, DiscCase,
    DiscConstraint, HypothesisStatus, SegmentConstraint, SegmentRegime,
};
use crate::error::Error;
use crate::report::{BoundReport, ReportSpec};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;
use crate::vector::{inner, norm_sq, Vector};

fn chain_scale(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

/// Reverse Schwarz bound for `x` in the closed ball around `a` of radius
/// `r`, against the reference vector `a` itself.
///
/// The bound takes one of three shapes depending on how `‖a‖` compares to
/// `r` (the `case_tag` records which):
///
/// * `norm-above-radius` (`‖a‖ > r`): the Schwarz gap obeys
///   `‖x‖²‖a‖² − |inner(x,a)|² <= ‖x‖²‖a‖² − (Re inner(x,a))² <= r²‖x‖²`;
/// * `norm-equal-radius`: `‖x‖² <= 2·Re inner(x,a) <= 2·|inner(x,a)|`;
/// * `norm-below-radius`: `‖x‖² <= r² − ‖a‖² + 2·Re inner(x,a)
///   <= r² − ‖a‖² + 2·|inner(x,a)|`.
pub fn reverse_schwarz_disc(
    x: &Vector,
    disc: &DiscConstraint,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    let membership = check_disc(x, disc, tol)?;
    let case = disc_case(disc, tol);
    let z = inner(x, disc.center())?;
    let ns_x = norm_sq(x);
    let ns_a = norm_sq(disc.center());
    let r = disc.radius();
    let re = z.re();

    let (lhs, mid, rhs, mid_label): (f64, f64, f64, &'static str) = match case {
        DiscCase::NormAboveRadius => {
            let gap_mod = ns_x * ns_a - z.abs_sq();
            let gap_re = ns_x * ns_a - re * re;
            (gap_mod, gap_re, r * r * ns_x, "chain:gap-re")
        }
        DiscCase::NormEqualRadius => (ns_x, 2.0 * re, 2.0 * z.abs(), "chain:twice-re"),
        DiscCase::NormBelowRadius => {
            let shift = r * r - ns_a;
            (
                ns_x,
                shift + 2.0 * re,
                shift + 2.0 * z.abs(),
                "chain:shifted-twice-re",
            )
        }
    };
    let mut intermediate = vec![(mid_label, mid), ("re-inner", re)];
    if let DiscCase::NormAboveRadius = case {
        // Companion fact in this case: Re inner(x,a) >= ‖x‖·√(‖a‖²−r²).
        intermediate.push(("re-inner-floor", ns_x.sqrt() * (ns_a - r * r).max(0.0).sqrt()));
    }
    BoundReport::build(
        ReportSpec {
            theorem_id: "schwarz-disc",
            case_tag: Some(case.tag()),
            hypothesis: vec![("ball-membership", membership)],
            lhs,
            rhs,
            scale: chain_scale(&[lhs, mid, rhs]),
            intermediate,
            ratio_bound: None,
        },
        tol,
        force,
    )
}

struct SegmentData {
    hypothesis: Vec<(&'static str, HypothesisStatus)>,
    regime: SegmentRegime,
    z: Scalar,
    ns_x: f64,
    ns_y: f64,
    /// `Re[(conj(Γ) + conj(γ)) · inner(x,y)]`.
    weighted_re: f64,
    /// `Re(Γ·conj(γ))`.
    p: f64,
}

fn segment_data(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
) -> Result<SegmentData, Error> {
    let hyp_re = check_segment_re(x, seg, tol)?;
    let hyp_norm = check_segment_norm(x, seg, tol)?;
    let z = inner(x, seg.reference())?;
    let sum = seg.upper() + seg.lower();
    Ok(SegmentData {
        hypothesis: vec![("segment-re", hyp_re), ("segment-norm", hyp_norm)],
        regime: segment_regime(seg, tol),
        z,
        ns_x: norm_sq(x),
        ns_y: norm_sq(seg.reference()),
        weighted_re: (sum.conj() * z).re(),
        p: seg.re_product(),
    })
}

/// Reverse Schwarz bound for a segment-constrained vector, in the regime
/// selected by the sign of `Re(Γ·conj(γ))` (the `case_tag`):
///
/// * `re-positive`: `‖x‖²‖y‖² <= ¼·(Re[(Γ̄+γ̄)·inner(x,y)])²/Re(Γγ̄)
///   <= ¼·|Γ+γ|²·|inner(x,y)|²/Re(Γγ̄)`;
/// * `re-zero`: `‖x‖² <= Re[(Γ̄+γ̄)·inner(x,y)] <= |Γ+γ|·|inner(x,y)|`;
/// * `re-negative`: the same two links with `−Re(Γγ̄)·‖y‖²` added to each
///   right-hand quantity.
pub fn reverse_schwarz_segment(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    let d = segment_data(x, seg, tol)?;
    let sum_abs = seg.sum_abs();
    let (lhs, mid, rhs, mid_label): (f64, f64, f64, &'static str) = match d.regime {
        SegmentRegime::RePositive => {
            let lhs = d.ns_x * d.ns_y;
            let mid = 0.25 * d.weighted_re * d.weighted_re / d.p;
            let rhs = 0.25 * sum_abs * sum_abs * d.z.abs_sq() / d.p;
            (lhs, mid, rhs, "chain:normalized-re-square")
        }
        SegmentRegime::ReZero => (
            d.ns_x,
            d.weighted_re,
            sum_abs * d.z.abs(),
            "chain:weighted-re",
        ),
        SegmentRegime::ReNegative => {
            let shift = -d.p * d.ns_y;
            (
                d.ns_x,
                d.weighted_re + shift,
                sum_abs * d.z.abs() + shift,
                "chain:shifted-weighted-re",
            )
        }
    };
    let mut intermediate = vec![(mid_label, mid), ("re-product", d.p)];
    if d.regime == SegmentRegime::RePositive {
        // The additive companion bound on the Schwarz gap, for comparison.
        intermediate.push(("schwarz-gap", d.ns_x * d.ns_y - d.z.abs_sq()));
        intermediate.push((
            "schwarz-gap-bound",
            0.25 * seg.diff_abs() * seg.diff_abs() * d.z.abs_sq() / d.p,
        ));
    }
    BoundReport::build(
        ReportSpec {
            theorem_id: "schwarz-segment",
            case_tag: Some(d.regime.tag()),
            hypothesis: d.hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, mid, rhs]),
            intermediate,
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Additive reverse Schwarz bound
/// `‖x‖²‖y‖² − |inner(x,y)|² <= ¼·|Γ−γ|²/Re(Γγ̄)·|inner(x,y)|²`,
/// defined only in the `re-positive` regime (outside it the evaluator
/// returns [`Error::RegimeMismatch`]).
pub fn additive_reverse_segment(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    let d = segment_data(x, seg, tol)?;
    if d.regime != SegmentRegime::RePositive {
        return Err(Error::RegimeMismatch {
            required: "re-positive",
            found: d.regime.tag(),
        });
    }
    let lhs = d.ns_x * d.ns_y - d.z.abs_sq();
    let rhs = 0.25 * seg.diff_abs() * seg.diff_abs() * d.z.abs_sq() / d.p;
    BoundReport::build(
        ReportSpec {
            theorem_id: "schwarz-additive",
            case_tag: None,
            hypothesis: d.hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, rhs, d.ns_x * d.ns_y]),
            intermediate: vec![("re-product", d.p), ("inner-abs-sq", d.z.abs_sq())],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// The four classical segment-style reversals evaluated on one instance,
/// in a fixed order:
///
/// 1. `baseline-additive`: Schwarz gap `<= ¼·|Γ−γ|²·‖y‖⁴` (any regime);
/// 2. `baseline-multiplicative`: `‖x‖²‖y‖² <= ¼·(Re[(Γ̄+γ̄)z])²/Re(Γγ̄)
///    <= ¼·(|Γ|+|γ|)²·|z|²/Re(Γγ̄)` (re-positive only);
/// 3. `baseline-additive-ratio`: gap `<= ¼·[(|Γ|−|γ|)² + 4(|Γγ| −
///    Re(Γγ̄))]/Re(Γγ̄)·|z|²` (re-positive only);
/// 4. `baseline-additive-refined`: gap `<= ¼·|Γ−γ|²·‖y‖⁴ −
///    |((Γ+γ)/2)·‖y‖² − z|²` (any regime),
///
/// with `z = inner(x, y)`. Entries 2 and 3 come back as
/// [`Error::RegimeMismatch`] outside the `re-positive` regime; input-shape
/// problems fail the whole call.
pub fn baseline_bounds(
    x: &Vector,
    seg: &SegmentConstraint,
    tol: &Tolerance,
    force: bool,
) -> Result<Vec<Result<BoundReport, Error>>, Error> {
    let d = segment_data(x, seg, tol)?;
    let gap = d.ns_x * d.ns_y - d.z.abs_sq();
    let diff_sq = seg.diff_abs() * seg.diff_abs();
    let abs_sum = seg.upper().abs() + seg.lower().abs();
    let abs_prod = seg.upper().abs() * seg.lower().abs();
    let in_pos = d.regime == SegmentRegime::RePositive;

    let mut out: Vec<Result<BoundReport, Error>> = Vec::with_capacity(4);

    // 1. Quarter-diff bound on the gap.
    {
        let rhs = 0.25 * diff_sq * d.ns_y * d.ns_y;
        out.push(BoundReport::build(
            ReportSpec {
                theorem_id: "baseline-additive",
                case_tag: None,
                hypothesis: d.hypothesis.clone(),
                lhs: gap,
                rhs,
                scale: chain_scale(&[gap, rhs, d.ns_x * d.ns_y]),
                intermediate: vec![],
                ratio_bound: None,
            },
            tol,
            force,
        ));
    }

    // 2. Multiplicative chain with the endpoint-magnitude sum.
    out.push(if in_pos {
        let lhs = d.ns_x * d.ns_y;
        let mid = 0.25 * d.weighted_re * d.weighted_re / d.p;
        let rhs = 0.25 * abs_sum * abs_sum * d.z.abs_sq() / d.p;
        BoundReport::build(
            ReportSpec {
                theorem_id: "baseline-multiplicative",
                case_tag: None,
                hypothesis: d.hypothesis.clone(),
                lhs,
                rhs,
                scale: chain_scale(&[lhs, mid, rhs]),
                intermediate: vec![("chain:normalized-re-square", mid), ("re-product", d.p)],
                ratio_bound: None,
            },
            tol,
            force,
        )
    } else {
        Err(Error::RegimeMismatch {
            required: "re-positive",
            found: d.regime.tag(),
        })
    });

    // 3. Additive bound with the magnitude-split numerator.
    out.push(if in_pos {
        let split = seg.upper().abs() - seg.lower().abs();
        let numerator = split * split + 4.0 * (abs_prod - d.p);
        let rhs = 0.25 * numerator / d.p * d.z.abs_sq();
        BoundReport::build(
            ReportSpec {
                theorem_id: "baseline-additive-ratio",
                case_tag: None,
                hypothesis: d.hypothesis.clone(),
                lhs: gap,
                rhs,
                scale: chain_scale(&[gap, rhs, d.ns_x * d.ns_y]),
                intermediate: vec![("re-product", d.p), ("numerator", numerator)],
                ratio_bound: None,
            },
            tol,
            force,
        )
    } else {
        Err(Error::RegimeMismatch {
            required: "re-positive",
            found: d.regime.tag(),
        })
    });

    // 4. Quarter-diff bound refined by the midpoint-offset term.
    {
        let mid_offset = seg.mid().scale(d.ns_y) - d.z;
        let rhs = 0.25 * diff_sq * d.ns_y * d.ns_y - mid_offset.abs_sq();
        out.push(BoundReport::build(
            ReportSpec {
                theorem_id: "baseline-additive-refined",
                case_tag: None,
                hypothesis: d.hypothesis.clone(),
                lhs: gap,
                rhs,
                scale: chain_scale(&[gap, rhs, d.ns_x * d.ns_y]),
                intermediate: vec![("midpoint-offset-sq", mid_offset.abs_sq())],
                ratio_bound: None,
            },
            tol,
            force,
        ));
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Verdict;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn reference_segment() -> (Vector, SegmentConstraint) {
        let y = Vector::real(&[1.0, 0.0]).unwrap();
        let x = Vector::real(&[1.5, 0.2]).unwrap();
        (x, SegmentConstraint::real(1.0, 2.0, y).unwrap())
    }

    #[test]
    fn disc_case_above_radius_reference_values() {
        let x = Vector::real(&[1.0, 0.3]).unwrap();
        let disc =
            DiscConstraint::new(Vector::real(&[1.0, 0.0]).unwrap(), 0.5).unwrap();
        let rep = reverse_schwarz_disc(&x, &disc, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("norm-above-radius"));
        assert_abs_diff_eq!(rep.lhs, 0.09, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.rhs, 0.2725, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.slack, 0.1825, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.trusted);
        // Real instance: the re-gap chain link equals the modulus gap.
        assert_abs_diff_eq!(rep.value("chain:gap-re").unwrap(), 0.09, epsilon = 1e-15);
        // Companion floor: Re<x,a> = 1 >= ||x||·sqrt(||a||²−r²).
        let floor = rep.value("re-inner-floor").unwrap();
        assert!(rep.value("re-inner").unwrap() >= floor);
        assert_abs_diff_eq!(floor, (1.09f64).sqrt() * 0.75f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn disc_case_equal_radius() {
        // a = (0.5, 0), r = 0.5, x = (0.6, 0.1): inside (distance ~0.1414).
        let x = Vector::real(&[0.6, 0.1]).unwrap();
        let disc =
            DiscConstraint::new(Vector::real(&[0.5, 0.0]).unwrap(), 0.5).unwrap();
        let rep = reverse_schwarz_disc(&x, &disc, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("norm-equal-radius"));
        assert_abs_diff_eq!(rep.lhs, 0.37, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.value("chain:twice-re").unwrap(), 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.rhs, 0.6, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn disc_case_below_radius() {
        // a = (0.2, 0), r = 1: ball reaches past the origin.
        let x = Vector::real(&[0.5, 0.4]).unwrap();
        let disc =
            DiscConstraint::new(Vector::real(&[0.2, 0.0]).unwrap(), 1.0).unwrap();
        let rep = reverse_schwarz_disc(&x, &disc, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("norm-below-radius"));
        assert_abs_diff_eq!(rep.lhs, 0.41, epsilon = 1e-15);
        // r² − ‖a‖² + 2·Re = 1 − 0.04 + 0.2 = 1.16.
        assert_abs_diff_eq!(rep.rhs, 1.16, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn disc_hypothesis_gate() {
        let x = Vector::real(&[3.0, 0.0]).unwrap();
        let disc =
            DiscConstraint::new(Vector::real(&[1.0, 0.0]).unwrap(), 0.5).unwrap();
        let err = reverse_schwarz_disc(&x, &disc, &tol(), false).unwrap_err();
        match err {
            Error::HypothesisViolated { label, report, .. } => {
                assert_eq!(label, "ball-membership");
                assert!(!report.unwrap().trusted);
            }
            other => panic!("unexpected {other:?}"),
        }
        let rep = reverse_schwarz_disc(&x, &disc, &tol(), true).unwrap();
        assert!(!rep.trusted);
    }

    #[test]
    fn segment_re_positive_reference_values() {
        let (x, seg) = reference_segment();
        let rep = reverse_schwarz_segment(&x, &seg, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("re-positive"));
        // ‖x‖²‖y‖² = 2.29; middle = ¼·(3·1.5)²/2 = 2.53125 = rhs (real data).
        assert_abs_diff_eq!(rep.lhs, 2.29, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("chain:normalized-re-square").unwrap(),
            2.53125,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.rhs, 2.53125, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
        // Gap diagnostics match the additive companion.
        assert_abs_diff_eq!(rep.value("schwarz-gap").unwrap(), 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("schwarz-gap-bound").unwrap(),
            0.28125,
            epsilon = 1e-15
        );
    }

    #[test]
    fn segment_re_zero_regime() {
        // gamma = i, Gamma = 1 (complex): Re(Γγ̄) = 0; x on the segment.
        let y = Vector::complex(&[(1.0, 0.0), (0.0, 0.0)]).unwrap();
        // x = mid·y = ((1+i)/2)·y plus a small admissible offset.
        let x = Vector::complex(&[(0.5, 0.5), (0.2, 0.0)]).unwrap();
        let seg = SegmentConstraint::new(
            Scalar::complex(0.0, 1.0),
            Scalar::real(1.0),
            y,
        )
        .unwrap();
        let rep = reverse_schwarz_segment(&x, &seg, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("re-zero"));
        // ‖x‖² = 0.25+0.25+0.04 = 0.54.
        assert_abs_diff_eq!(rep.lhs, 0.54, epsilon = 1e-15);
        // Re[(1−i)·<x,y>] = Re[(1−i)(0.5+0.5i)] = 1.
        assert_abs_diff_eq!(rep.value("chain:weighted-re").unwrap(), 1.0, epsilon = 1e-15);
        // |1+i|·|<x,y>| = √2·(1/√2) = 1.
        assert_abs_diff_eq!(rep.rhs, 1.0, epsilon = 1e-14);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn segment_re_negative_regime() {
        // gamma = −1, Gamma = 2, x between them along y.
        let y = Vector::real(&[1.0, 0.0]).unwrap();
        let x = Vector::real(&[0.5, 0.9]).unwrap();
        let seg = SegmentConstraint::real(-1.0, 2.0, y).unwrap();
        let rep = reverse_schwarz_segment(&x, &seg, &tol(), false).unwrap();
        assert_eq!(rep.case_tag.as_deref(), Some("re-negative"));
        // Hypothesis: (2−0.5)(0.5+1) − 0.81 = 2.25−0.81 = 1.44 >= 0.
        assert!(rep.hypotheses_satisfied());
        // lhs = 1.06; middle = Re[(2−1)·0.5] + 2·1 = 2.5; rhs = 1·0.5+2 = 2.5.
        assert_abs_diff_eq!(rep.lhs, 1.06, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("chain:shifted-weighted-re").unwrap(),
            2.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.rhs, 2.5, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn additive_reference_values_and_regime_guard() {
        let (x, seg) = reference_segment();
        let rep = additive_reverse_segment(&x, &seg, &tol(), false).unwrap();
        assert_abs_diff_eq!(rep.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.rhs, 0.28125, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);

        let y = Vector::real(&[1.0, 0.0]).unwrap();
        let x2 = Vector::real(&[0.5, 0.9]).unwrap();
        let neg = SegmentConstraint::real(-1.0, 2.0, y).unwrap();
        match additive_reverse_segment(&x2, &neg, &tol(), false) {
            Err(Error::RegimeMismatch { required, found }) => {
                assert_eq!(required, "re-positive");
                assert_eq!(found, "re-negative");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn baselines_on_reference_instance() {
        let (x, seg) = reference_segment();
        let reports = baseline_bounds(&x, &seg, &tol(), false).unwrap();
        assert_eq!(reports.len(), 4);
        let additive = reports[0].as_ref().unwrap();
        assert_eq!(additive.theorem_id, "baseline-additive");
        assert_abs_diff_eq!(additive.lhs, 0.04, epsilon = 1e-15);
        // ¼·1·1 = 0.25.
        assert_abs_diff_eq!(additive.rhs, 0.25, epsilon = 1e-15);

        let mult = reports[1].as_ref().unwrap();
        assert_abs_diff_eq!(mult.lhs, 2.29, epsilon = 1e-15);
        // ¼·(3)²·2.25/2 = 2.53125 (real positive endpoints: same as sharp).
        assert_abs_diff_eq!(mult.rhs, 2.53125, epsilon = 1e-15);

        let ratio = reports[2].as_ref().unwrap();
        assert_abs_diff_eq!(ratio.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(ratio.rhs, 0.28125, epsilon = 1e-15);

        let refined = reports[3].as_ref().unwrap();
        assert_abs_diff_eq!(refined.lhs, 0.04, epsilon = 1e-15);
        // ¼ − |1.5−1.5|² = 0.25.
        assert_abs_diff_eq!(refined.rhs, 0.25, epsilon = 1e-15);
    }

    #[test]
    fn baselines_outside_positive_regime() {
        let y = Vector::real(&[1.0, 0.0]).unwrap();
        let x = Vector::real(&[0.5, 0.9]).unwrap();
        let seg = SegmentConstraint::real(-1.0, 2.0, y).unwrap();
        let reports = baseline_bounds(&x, &seg, &tol(), false).unwrap();
        assert!(reports[0].is_ok());
        assert!(matches!(reports[1], Err(Error::RegimeMismatch { .. })));
        assert!(matches!(reports[2], Err(Error::RegimeMismatch { .. })));
        assert!(reports[3].is_ok());
    }

    #[test]
    fn sharper_additive_dominates_baseline_ratio() {
        // Complex endpoints make |Γγ| > Re(Γγ̄): strict dominance.
        let y = Vector::complex(&[(1.0, 0.0), (0.0, 0.0)]).unwrap();
        let gamma = Scalar::complex(1.0, 0.3);
        let upper = Scalar::complex(2.0, -0.4);
        let seg = SegmentConstraint::new(gamma, upper, y).unwrap();
        // x close to mid·y keeps the hypothesis comfortable.
        let x = Vector::complex(&[(1.5, -0.05), (0.1, 0.1)]).unwrap();
        let sharp = additive_reverse_segment(&x, &seg, &tol(), false).unwrap();
        let reports = baseline_bounds(&x, &seg, &tol(), false).unwrap();
        let base = reports[2].as_ref().unwrap();
        assert!(sharp.rhs < base.rhs);
        // And the squared multiplicative chain dominates its baseline.
        let seg_rep = reverse_schwarz_segment(&x, &seg, &tol(), false).unwrap();
        let mult = reports[1].as_ref().unwrap();
        assert!(seg_rep.rhs <= mult.rhs + 1e-15);
    }
}
