//! Grüss-type bounds on the Chebyshev functional of two vectors.
//!
//! For a unit vector `e`, the functional
//! `C(x, y; e) = inner(x, y) − inner(x, e)·inner(e, y)` measures how far
//! the pair `(x, y)` is from behaving like its projections onto `e`. It
//! vanishes when either argument is a multiple of `e`, and is always
//! bounded by the product of the projection residuals. The evaluators here
//! bound `|C|` when both vectors are confined near `e` — by balls
//! ([`gruss_disc`]) or by scalar segments ([`gruss_segment`]).

use crate::constraints::{
    check_segment_norm, check_segment_re, endpoint_regime, HypothesisStatus, SegmentConstraint,
    SegmentRegime,
};
use crate::error::Error;
use crate::report::{BoundReport, RatioBound, ReportSpec};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;
use crate::vector::{inner, norm, Vector};

fn require_unit(e: &Vector, tol: &Tolerance) -> Result<(), Error> {
    let n = norm(e);
    if (n - 1.0).abs() <= tol.band(1.0) {
        Ok(())
    } else {
        Err(Error::NotUnit { label: "e", norm: n })
    }
}

fn require_triple(x: &Vector, y: &Vector, e: &Vector) -> Result<(), Error> {
    if x.same_space(y) && x.same_space(e) {
        Ok(())
    } else {
        Err(Error::mismatch(
            "x, y, and e must come from one inner product space",
        ))
    }
}

/// The Chebyshev functional `inner(x,y) − inner(x,e)·inner(e,y)` for a unit
/// vector `e` (checked within the tolerance band).
pub fn cheby_functional(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    tol: &Tolerance,
) -> Result<Scalar, Error> {
    require_triple(x, y, e)?;
    require_unit(e, tol)?;
    let z = inner(x, y)?;
    let px = inner(x, e)?;
    let py = inner(e, y)?;
    Ok(z - px * py)
}

/// `‖v − inner(v,e)·e‖`: the distance from `v` to its projection onto the
/// line through `e`.
fn projection_residual(v: &Vector, e: &Vector) -> f64 {
    let p = inner(v, e).expect("spaces already checked");
    norm(&v.sub(&e.scaled(p)))
}

/// Grüss-type bound for ball-constrained vectors: when `‖e‖ = 1`,
/// `r₁, r₂ ∈ (0, 1)`, `‖x − e‖ <= r₁`, and `‖y − e‖ <= r₂`,
///
/// `|C(x, y; e)| <= r₁·r₂·‖x‖·‖y‖`.
pub fn gruss_disc(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    r1: f64,
    r2: f64,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    require_triple(x, y, e)?;
    require_unit(e, tol)?;
    for r in [r1, r2] {
        if !(r.is_finite() && r > 0.0 && 1.0 - r > tol.band(1.0)) {
            return Err(Error::BadRadius {
                value: r,
                requirement: "in the open interval (0, 1), beyond the band",
            });
        }
    }
    let mx = HypothesisStatus::from_margin(
        r1 - norm(&x.sub(e)),
        tol.band(r1.max(norm(&x.sub(e)))),
    );
    let my = HypothesisStatus::from_margin(
        r2 - norm(&y.sub(e)),
        tol.band(r2.max(norm(&y.sub(e)))),
    );
    let c = {
        let z = inner(x, y)?;
        let px = inner(x, e)?;
        let py = inner(e, y)?;
        z - px * py
    };
    let nx = norm(x);
    let ny = norm(y);
    let lhs = c.abs();
    let rhs = r1 * r2 * nx * ny;
    BoundReport::build(
        ReportSpec {
            theorem_id: "gruss-disc",
            case_tag: None,
            hypothesis: vec![("x-ball", mx), ("y-ball", my)],
            lhs,
            rhs,
            scale: (nx * ny).max(lhs).max(rhs),
            intermediate: vec![
                ("cheby-re", c.re()),
                ("cheby-im", c.im()),
                ("projection-residual-x", projection_residual(x, e)),
                ("projection-residual-y", projection_residual(y, e)),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Grüss-type bound for segment-constrained vectors: when `‖e‖ = 1`, both
/// endpoint pairs have `Re(upper·conj(lower)) > 0`, and `x` (resp. `y`)
/// satisfies the segment hypothesis against `e` with pair `(a, A)` (resp.
/// `(b, B)`), then
///
/// `|C(x, y; e)| <= ¼·|A−a|·|B−b| / √(Re(A·conj(a))·Re(B·conj(b)))
///   · |inner(x,e)|·|inner(e,y)|`.
///
/// When both projections `inner(x,e)` and `inner(e,y)` are nonzero beyond
/// the band, the same bound is additionally reported in ratio form
/// (`ratio_bound`): `|C| / (|inner(x,e)|·|inner(e,y)|)` against the bare
/// quarter-factor.
pub fn gruss_segment(
    x: &Vector,
    y: &Vector,
    e: &Vector,
    x_pair: (Scalar, Scalar),
    y_pair: (Scalar, Scalar),
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    require_triple(x, y, e)?;
    require_unit(e, tol)?;
    let (a, big_a) = x_pair;
    let (b, big_b) = y_pair;
    for (lo, hi) in [(a, big_a), (b, big_b)] {
        let regime = endpoint_regime(lo, hi, tol);
        if regime != SegmentRegime::RePositive {
            return Err(Error::RegimeMismatch {
                required: "re-positive",
                found: regime.tag(),
            });
        }
    }
    let seg_x = SegmentConstraint::new(a, big_a, e.clone())?;
    let seg_y = SegmentConstraint::new(b, big_b, e.clone())?;
    let hypothesis = vec![
        ("x-segment-re", check_segment_re(x, &seg_x, tol)?),
        ("x-segment-norm", check_segment_norm(x, &seg_x, tol)?),
        ("y-segment-re", check_segment_re(y, &seg_y, tol)?),
        ("y-segment-norm", check_segment_norm(y, &seg_y, tol)?),
    ];

    let z = inner(x, y)?;
    let px = inner(x, e)?;
    let py = inner(e, y)?;
    let c = z - px * py;
    let pa = seg_x.re_product();
    let pb = seg_y.re_product();
    let quarter_factor =
        0.25 * seg_x.diff_abs() * seg_y.diff_abs() / (pa * pb).sqrt();

    let lhs = c.abs();
    let rhs = quarter_factor * px.abs() * py.abs();
    let proj_scale = px.abs() * py.abs();
    let ratio_bound = if px.abs() > tol.band(1.0) && py.abs() > tol.band(1.0) {
        Some(RatioBound::new(
            lhs / proj_scale,
            quarter_factor,
            tol,
            quarter_factor.max(lhs / proj_scale),
        ))
    } else {
        None
    };
    BoundReport::build(
        ReportSpec {
            theorem_id: "gruss-segment",
            case_tag: None,
            hypothesis,
            lhs,
            rhs,
            scale: (norm(x) * norm(y)).max(lhs).max(rhs),
            intermediate: vec![
                ("proj-x-abs", px.abs()),
                ("proj-y-abs", py.abs()),
                ("re-product-x", pa),
                ("re-product-y", pb),
            ],
            ratio_bound,
        },
        tol,
        force,
    )
}
