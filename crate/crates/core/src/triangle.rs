//! Reverse triangle bounds.
//!
//! The triangle inequality `‖x + y‖ <= ‖x‖ + ‖y‖` always leaves a
//! nonnegative deficit `‖x‖ + ‖y‖ − ‖x + y‖`. The evaluators here bound
//! that deficit from above when one vector is confined to a ball strictly
//! inside the sphere of its center's norm ([`reverse_triangle_disc`]) or
//! sits between two positive real multiples of the other
//! ([`reverse_triangle_segment`]).

use crate::constraints::{
    check_disc, check_segment_norm, check_segment_re, DiscConstraint, HypothesisStatus,
    SegmentConstraint,
};
use crate::error::Error;
use crate::report::{BoundReport, ReportSpec};
use crate::tolerance::Tolerance;
use crate::vector::{inner, norm, Vector};

/// `‖x‖ + ‖y‖ − ‖x + y‖`, the amount by which the triangle inequality is
/// strict on this pair. Always nonnegative.
pub fn triangle_deficit(x: &Vector, y: &Vector) -> Result<f64, Error> {
    if !x.same_space(y) {
        return Err(Error::mismatch(format!(
            "triangle deficit needs vectors from one space (got dims {} and {})",
            x.dim(),
            y.dim()
        )));
    }
    Ok(norm(x) + norm(y) - norm(&x.add(y)))
}

/// Clamp a slightly negative radicand to zero; reject one negative beyond
/// the band.
fn guard_radicand(value: f64, band: f64, label: &'static str) -> Result<f64, Error> {
    if value >= 0.0 {
        Ok(value)
    } else if -value <= band {
        Ok(0.0)
    } else {
        Err(Error::NegativeRadicand { label, value })
    }
}

/// Reverse triangle bound for `x` in the closed ball around `a` of radius
/// `r`, with `‖a‖ > r` required strictly:
///
/// `‖x‖ + ‖a‖ − ‖x + a‖ <= √2·r·√( Re inner(x,a) / (s·(s + ‖a‖)) )`,
/// where `s = √(‖a‖² − r²)`.
///
/// The norm-dominates-radius hypothesis is strict — an instance with
/// `‖a‖ − r` inside the tolerance band is rejected, because the bound
/// degenerates as `r` approaches `‖a‖`.
pub fn reverse_triangle_disc(
    x: &Vector,
    disc: &DiscConstraint,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    let membership = check_disc(x, disc, tol)?;
    let a = disc.center();
    let na = norm(a);
    let nx = norm(x);
    let r = disc.radius();
    let dominance = HypothesisStatus::strict_from_margin(na - r, tol.band(na.max(r)));

    let s_sq = guard_radicand(
        na * na - r * r,
        tol.band(na * na),
        "norm-sq-minus-radius-sq",
    )?;
    if s_sq == 0.0 {
        // Even under force the bound is undefined at ‖a‖ = r.
        return Err(Error::NegativeRadicand {
            label: "norm-sq-minus-radius-sq",
            value: na * na - r * r,
        });
    }
    let s = s_sq.sqrt();
    let re = inner(x, a)?.re();
    let re_clamped = guard_radicand(re, tol.band(nx * na), "re-inner")?;

    let lhs = triangle_deficit(x, a)?;
    let rhs = std::f64::consts::SQRT_2 * r * (re_clamped / (s * (s + na))).sqrt();
    BoundReport::build(
        ReportSpec {
            theorem_id: "triangle-disc",
            case_tag: None,
            hypothesis: vec![
                ("ball-membership", membership),
                ("norm-dominates-radius", dominance),
            ],
            lhs,
            rhs,
            scale: (nx + na).max(lhs.abs()).max(rhs.abs()),
            intermediate: vec![
                ("norm-sum", nx + na),
                ("norm-of-sum", norm(&x.add(a))),
                ("re-inner", re),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Reverse triangle bound when `x` sits between the real multiples `m·y`
/// and `M·y` (`0 < m <= M`) in the bilinear-form sense:
///
/// `‖x‖ + ‖y‖ − ‖x + y‖ <= (√M − √m)/(m·M)^¼ · √(Re inner(x,y))`.
pub fn reverse_triangle_segment(
    x: &Vector,
    y: &Vector,
    m: f64,
    big_m: f64,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    if !(m.is_finite() && big_m.is_finite() && m > 0.0 && m <= big_m) {
        return Err(Error::BadInterval {
            lo: m,
            hi: big_m,
            requirement: "0 < m <= M, both finite",
        });
    }
    let seg = SegmentConstraint::real(m, big_m, y.clone())?;
    let hyp_re = check_segment_re(x, &seg, tol)?;
    let hyp_norm = check_segment_norm(x, &seg, tol)?;

    let nx = norm(x);
    let ny = norm(y);
    let re = inner(x, y)?.re();
    let re_clamped = guard_radicand(re, tol.band(nx * ny), "re-inner")?;

    let lhs = triangle_deficit(x, y)?;
    let rhs = (big_m.sqrt() - m.sqrt()) / (m * big_m).powf(0.25) * re_clamped.sqrt();
    BoundReport::build(
        ReportSpec {
            theorem_id: "triangle-segment",
            case_tag: None,
            hypothesis: vec![("segment-re", hyp_re), ("segment-norm", hyp_norm)],
            lhs,
            rhs,
            scale: (nx + ny).max(lhs.abs()).max(rhs.abs()),
            intermediate: vec![
                ("norm-sum", nx + ny),
                ("norm-of-sum", norm(&x.add(y))),
                ("re-inner", re),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}
