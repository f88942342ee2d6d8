//! Reverse Bessel bounds: upper bounds on `‖x‖²` and on the Bessel defect
//! `‖x‖² − Σ|cᵢ|²` (with `cᵢ = inner(x, eᵢ)` the coefficients against an
//! orthonormal family) for vectors confined near the span of the family.
//!
//! Two confinement shapes are supported, mirroring the single-vector case:
//!
//! * **disc**: `‖x − Σλᵢeᵢ‖ <= r` for a coefficient vector `λ` whose energy
//!   exceeds `r²` ([`reverse_bessel_disc`]);
//! * **segment**: one scalar pair `(γᵢ, Γᵢ)` per family member, with
//!   `Re inner(ΣΓᵢeᵢ − x, x − Σγᵢeᵢ) >= 0` ([`reverse_bessel_segment`]).
//!
//! The segment evaluator also runs the equivalent disc route (centers at the
//! pair midpoints, radius from the half-differences) and records the largest
//! disagreement between the two routes as the `path-deviation` diagnostic.
//!
//! [`baseline_bessel`] evaluates the four coarser defect bounds that predate
//! the chain forms, and the two `gruss_family_*` evaluators bound the cross
//! Chebyshev functional `inner(x,y) − Σ cₓᵢ·conj(c_yᵢ)` for two confined
//! vectors.

use crate::constraints::{HypothesisStatus, SegmentRegime};
use crate::error::Error;
use crate::report::{BoundReport, ReportSpec};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;
use crate::vector::{inner, inner_unchecked, norm, norm_sq, OrthonormalFamily, Vector};
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// Pair sequences
// ---------------------------------------------------------------------------

/// One scalar pair `(lowerᵢ, upperᵢ)` per family member.
///
/// JSON form: `{"lower": [...], "upper": [...]}` with scalars written as bare
/// numbers (real) or `[re, im]` pairs (complex).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PairRaw")]
pub struct PairSequence {
    lower: Vec<Scalar>,
    upper: Vec<Scalar>,
}

#[derive(Deserialize)]
struct PairRaw {
    lower: Vec<Scalar>,
    upper: Vec<Scalar>,
}

impl TryFrom<PairRaw> for PairSequence {
    type Error = Error;
    fn try_from(raw: PairRaw) -> Result<Self, Error> {
        PairSequence::new(raw.lower, raw.upper)
    }
}

impl PairSequence {
    pub fn new(lower: Vec<Scalar>, upper: Vec<Scalar>) -> Result<PairSequence, Error> {
        if lower.is_empty() {
            return Err(Error::mismatch("pair sequence must be nonempty"));
        }
        if lower.len() != upper.len() {
            return Err(Error::mismatch(format!(
                "pair sequence has {} lower but {} upper entries",
                lower.len(),
                upper.len()
            )));
        }
        if !lower.iter().chain(&upper).all(|s| s.is_finite()) {
            return Err(Error::mismatch("pair sequence entries must be finite"));
        }
        Ok(PairSequence { lower, upper })
    }

    /// Real pairs, one `(lo, hi)` per member.
    pub fn real(pairs: &[(f64, f64)]) -> Result<PairSequence, Error> {
        PairSequence::new(
            pairs.iter().map(|&(lo, _)| Scalar::real(lo)).collect(),
            pairs.iter().map(|&(_, hi)| Scalar::real(hi)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sequences
    }

    pub fn lower(&self) -> &[Scalar] {
        &self.lower
    }

    pub fn upper(&self) -> &[Scalar] {
        &self.upper
    }

    /// Midpoint `(upperᵢ + lowerᵢ)/2`.
    pub fn mid(&self, i: usize) -> Scalar {
        (self.upper[i] + self.lower[i]).scale(0.5)
    }

    pub fn mids(&self) -> Vec<Scalar> {
        (0..self.len()).map(|i| self.mid(i)).collect()
    }

    /// `Σ |upperᵢ − lowerᵢ|²`.
    pub fn sum_diff_abs_sq(&self) -> f64 {
        self.iter_pairs().map(|(lo, hi)| (hi - lo).abs_sq()).sum()
    }

    /// `Σ Re(upperᵢ · conj(lowerᵢ))` — the segment-family analogue of the
    /// single-pair regime quantity.
    pub fn sum_re_product(&self) -> f64 {
        self.iter_pairs().map(|(lo, hi)| (hi * lo.conj()).re()).sum()
    }

    /// `Σ |upperᵢ|·|lowerᵢ|`, the natural scale of [`sum_re_product`].
    ///
    /// [`sum_re_product`]: PairSequence::sum_re_product
    pub fn sum_abs_product(&self) -> f64 {
        self.iter_pairs().map(|(lo, hi)| hi.abs() * lo.abs()).sum()
    }

    /// `Σ (|upperᵢ| + |lowerᵢ|)²`.
    pub fn sum_sq_abs_sum(&self) -> f64 {
        self.iter_pairs()
            .map(|(lo, hi)| (hi.abs() + lo.abs()).powi(2))
            .sum()
    }

    /// `Σ [ (|upperᵢ| − |lowerᵢ|)² + 4(|upperᵢ·lowerᵢ| − Re(upperᵢ·conj(lowerᵢ))) ]`,
    /// the numerator of the ratio-form defect bound.
    pub fn ratio_numerator(&self) -> f64 {
        self.iter_pairs()
            .map(|(lo, hi)| {
                let p = hi * lo.conj();
                (hi.abs() - lo.abs()).powi(2) + 4.0 * (p.abs() - p.re())
            })
            .sum()
    }

    /// Radius of the equivalent ball around the midpoint combination:
    /// `½·√(Σ |upperᵢ − lowerᵢ|²)`.
    pub fn radius(&self) -> f64 {
        0.5 * self.sum_diff_abs_sq().sqrt()
    }

    fn iter_pairs(&self) -> impl Iterator<Item = (Scalar, Scalar)> + '_ {
        self.lower.iter().copied().zip(self.upper.iter().copied())
    }
}

// ---------------------------------------------------------------------------
// Coefficients, defect, and family-level hypothesis checks
// ---------------------------------------------------------------------------

fn require_member_space(x: &Vector, family: &OrthonormalFamily) -> Result<(), Error> {
    if x.same_space(family.member(0)) {
        Ok(())
    } else {
        Err(Error::mismatch(format!(
            "vector (dim {}, {}) and family members (dim {}, {}) must share a space",
            x.dim(),
            x.field().name(),
            family.dim(),
            family.field().name()
        )))
    }
}

fn require_pair_count(family: &OrthonormalFamily, n: usize, what: &str) -> Result<(), Error> {
    if family.len() == n {
        Ok(())
    } else {
        Err(Error::mismatch(format!(
            "family has {} members but {} {what}",
            family.len(),
            n
        )))
    }
}

/// The coefficient sequence `cᵢ = inner(x, eᵢ)`.
pub fn fourier_coeffs(x: &Vector, family: &OrthonormalFamily) -> Result<Vec<Scalar>, Error> {
    require_member_space(x, family)?;
    family.members().iter().map(|e| inner(x, e)).collect()
}

/// `‖x‖² − Σ|cᵢ|²`, nonnegative for a valid orthonormal family.
pub fn bessel_defect(x: &Vector, family: &OrthonormalFamily) -> Result<f64, Error> {
    family.require_valid()?;
    let c = fourier_coeffs(x, family)?;
    Ok(norm_sq(x) - energy(&c))
}

fn energy(coeffs: &[Scalar]) -> f64 {
    coeffs.iter().map(|c| c.abs_sq()).sum()
}

/// Family segment hypothesis in bilinear form: margin
/// `Re inner(Σ upperᵢ·eᵢ − x, x − Σ lowerᵢ·eᵢ)`, banded at the product of the
/// two factor norms.
pub fn check_family_re(
    x: &Vector,
    family: &OrthonormalFamily,
    pairs: &PairSequence,
    tol: &Tolerance,
) -> Result<HypothesisStatus, Error> {
    require_member_space(x, family)?;
    require_pair_count(family, pairs.len(), "pair sequence entries")?;
    let up = family.combination(pairs.upper());
    let lo = family.combination(pairs.lower());
    let left = up.sub(x);
    let right = x.sub(&lo);
    // The two sides may land in different fields when only one endpoint
    // sequence is complex; the unchecked product joins them.
    let margin = inner_unchecked(&left, &right).re();
    let band = tol.band(norm(&left) * norm(&right));
    Ok(HypothesisStatus::from_margin(margin, band))
}

/// Family segment hypothesis in distance form: margin
/// `½·√(Σ|upperᵢ−lowerᵢ|²) − ‖x − Σ midᵢ·eᵢ‖`.
pub fn check_family_norm(
    x: &Vector,
    family: &OrthonormalFamily,
    pairs: &PairSequence,
    tol: &Tolerance,
) -> Result<HypothesisStatus, Error> {
    require_member_space(x, family)?;
    require_pair_count(family, pairs.len(), "pair sequence entries")?;
    let bound = pairs.radius();
    let dist = norm(&x.sub(&family.combination(&pairs.mids())));
    let margin = bound - dist;
    let band = tol.band(bound.max(dist));
    Ok(HypothesisStatus::from_margin(margin, band))
}

fn require_re_positive(pairs: &PairSequence, tol: &Tolerance) -> Result<f64, Error> {
    let sum_re = pairs.sum_re_product();
    let band = tol.band(pairs.sum_abs_product());
    if sum_re > band {
        Ok(sum_re)
    } else {
        Err(Error::RegimeMismatch {
            required: SegmentRegime::RePositive.tag(),
            found: if sum_re < -band {
                SegmentRegime::ReNegative.tag()
            } else {
                SegmentRegime::ReZero.tag()
            },
        })
    }
}

// ---------------------------------------------------------------------------
// Disc evaluator
// ---------------------------------------------------------------------------

/// Reverse Bessel bound for a ball-confined vector. With `c` the coefficient
/// sequence of `x`, `S = Σ|λᵢ|²`, `D = S − r² > 0`, and `‖x − Σλᵢeᵢ‖ <= r`:
///
/// `‖x‖² <= (Σ Re[cᵢ·conj(λᵢ)])²/D <= |Σ cᵢ·conj(λᵢ)|²/D <= (S/D)·Σ|cᵢ|²`,
///
/// and consequently `‖x‖² − Σ|cᵢ|² <= (r²/D)·Σ|cᵢ|²` (reported through the
/// `defect` / `defect-bound` intermediates).
pub fn reverse_bessel_disc(
    x: &Vector,
    family: &OrthonormalFamily,
    lambda: &[Scalar],
    r: f64,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    family.require_valid()?;
    require_member_space(x, family)?;
    require_pair_count(family, lambda.len(), "coefficient entries")?;
    if !lambda.iter().all(|s| s.is_finite()) {
        return Err(Error::mismatch("coefficient entries must be finite"));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::BadRadius {
            value: r,
            requirement: "finite and > 0",
        });
    }
    let lambda_energy: f64 = lambda.iter().map(|l| l.abs_sq()).sum();
    let d = lambda_energy - r * r;
    if d <= 0.0 {
        return Err(Error::NegativeRadicand {
            label: "lambda-energy-minus-radius-squared",
            value: d,
        });
    }
    let energy_status =
        HypothesisStatus::strict_from_margin(d, tol.band(lambda_energy.max(r * r)));
    let center = family.combination(lambda);
    let dist = norm(&x.sub(&center));
    let ball_status = HypothesisStatus::from_margin(r - dist, tol.band(r.max(dist)));

    let c = fourier_coeffs(x, family)?;
    let coeff_energy = energy(&c);
    let cross = cross_sum(&c, lambda);
    let re_link = cross.re() * cross.re() / d;
    let abs_link = cross.abs_sq() / d;
    let lhs = norm_sq(x);
    let rhs = lambda_energy / d * coeff_energy;
    let defect = lhs - coeff_energy;

    BoundReport::build(
        ReportSpec {
            theorem_id: "bessel-disc",
            case_tag: None,
            hypothesis: vec![
                ("energy-dominates-radius", energy_status),
                ("ball-membership", ball_status),
            ],
            lhs,
            rhs,
            scale: chain_scale(&[lhs, re_link, abs_link, rhs]),
            intermediate: vec![
                ("chain:normalized-re-square", re_link),
                ("chain:normalized-abs-square", abs_link),
                ("defect", defect),
                ("defect-bound", r * r / d * coeff_energy),
                ("coefficient-energy", coeff_energy),
                ("lambda-energy", lambda_energy),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// `Σ cᵢ · conj(λᵢ)`, i.e. `inner(x, Σλᵢeᵢ)` expressed in coefficients.
fn cross_sum(c: &[Scalar], lambda: &[Scalar]) -> Scalar {
    c.iter()
        .zip(lambda)
        .fold(Scalar::ZERO_REAL, |acc, (&ci, &li)| acc + ci * li.conj())
}

fn chain_scale(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

// ---------------------------------------------------------------------------
// Segment evaluator
// ---------------------------------------------------------------------------

/// Reverse Bessel bound for a segment-confined vector. With midpoints
/// `mᵢ = (Γᵢ+γᵢ)/2` and `D = Σ Re(Γᵢ·conj(γᵢ)) > 0`:
///
/// `‖x‖² <= (Σ Re[cᵢ·conj(mᵢ)])²/D <= |Σ cᵢ·conj(mᵢ)|²/D <= (Σ|mᵢ|²/D)·Σ|cᵢ|²`,
///
/// with the defect consequence
/// `‖x‖² − Σ|cᵢ|² <= ¼·(Σ|Γᵢ−γᵢ|²/D)·Σ|cᵢ|²` in `defect-bound`.
///
/// The identity `Σ|mᵢ|² − ¼Σ|Γᵢ−γᵢ|² = Σ Re(Γᵢ·conj(γᵢ))` makes this the
/// disc bound with `λ = mids` and `r` the pair radius; that route is run too
/// and the largest absolute disagreement across the chain links and the
/// defect bound is recorded as `path-deviation`.
pub fn reverse_bessel_segment(
    x: &Vector,
    family: &OrthonormalFamily,
    pairs: &PairSequence,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    family.require_valid()?;
    require_member_space(x, family)?;
    require_pair_count(family, pairs.len(), "pair sequence entries")?;
    let d = require_re_positive(pairs, tol)?;

    let hypothesis = vec![
        ("family-segment-re", check_family_re(x, family, pairs, tol)?),
        (
            "family-segment-norm",
            check_family_norm(x, family, pairs, tol)?,
        ),
    ];

    let c = fourier_coeffs(x, family)?;
    let coeff_energy = energy(&c);
    let mids = pairs.mids();
    let mid_energy: f64 = mids.iter().map(|m| m.abs_sq()).sum();
    let cross = cross_sum(&c, &mids);
    let re_link = cross.re() * cross.re() / d;
    let abs_link = cross.abs_sq() / d;
    let lhs = norm_sq(x);
    let rhs = mid_energy / d * coeff_energy;
    let defect = lhs - coeff_energy;
    let defect_bound = 0.25 * pairs.sum_diff_abs_sq() / d * coeff_energy;

    // Disc route with the same data; hypothesis gating already happened
    // here, so the delegate runs forced and is only mined for values.
    let radius = pairs.radius();
    let path_deviation = if radius > 0.0 {
        let disc = reverse_bessel_disc(x, family, &mids, radius, tol, true)?;
        [
            (re_link, disc.value("chain:normalized-re-square")),
            (abs_link, disc.value("chain:normalized-abs-square")),
            (rhs, Some(disc.rhs)),
            (defect_bound, disc.value("defect-bound")),
        ]
        .iter()
        .map(|(direct, routed)| (direct - routed.unwrap_or(*direct)).abs())
        .fold(0.0, f64::max)
    } else {
        0.0
    };

    BoundReport::build(
        ReportSpec {
            theorem_id: "bessel-segment",
            case_tag: None,
            hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, re_link, abs_link, rhs]),
            intermediate: vec![
                ("chain:normalized-re-square", re_link),
                ("chain:normalized-abs-square", abs_link),
                ("defect", defect),
                ("defect-bound", defect_bound),
                ("coefficient-energy", coeff_energy),
                ("midpoint-energy", mid_energy),
                ("re-endpoint-product-sum", d),
                ("path-deviation", path_deviation),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

// ---------------------------------------------------------------------------
// Baseline defect bounds
// ---------------------------------------------------------------------------

/// The four coarser segment-family bounds, in fixed order:
///
/// 1. `bessel-baseline-residual`: `defect <= ‖x − Σmᵢeᵢ‖² <= ¼Σ|Γᵢ−γᵢ|²`;
/// 2. `bessel-baseline-midpoint`:
///    `defect <= ¼Σ|Γᵢ−γᵢ|² − Σ|mᵢ−cᵢ|² <= ¼Σ|Γᵢ−γᵢ|²`;
/// 3. `bessel-baseline-multiplicative` (needs `Σ Re(Γᵢ·conj(γᵢ)) > 0`):
///    `‖x‖² <= ¼·(Σ(|Γᵢ|+|γᵢ|)² / Σ Re(Γᵢ·conj(γᵢ)))·Σ|cᵢ|²`;
/// 4. `bessel-baseline-additive-ratio` (same regime requirement):
///    `defect <= ¼·(Σ[(|Γᵢ|−|γᵢ|)² + 4(|Γᵢγᵢ| − Re(Γᵢ·conj(γᵢ)))] / Σ Re(Γᵢ·conj(γᵢ)))·Σ|cᵢ|²`.
///
/// Entries that cannot be evaluated (wrong regime) come back as `Err` without
/// failing the rest.
pub fn baseline_bessel(
    x: &Vector,
    family: &OrthonormalFamily,
    pairs: &PairSequence,
    tol: &Tolerance,
    force: bool,
) -> Result<Vec<Result<BoundReport, Error>>, Error> {
    family.require_valid()?;
    require_member_space(x, family)?;
    require_pair_count(family, pairs.len(), "pair sequence entries")?;

    let hypothesis = || -> Result<Vec<(&'static str, HypothesisStatus)>, Error> {
        Ok(vec![
            ("family-segment-re", check_family_re(x, family, pairs, tol)?),
            (
                "family-segment-norm",
                check_family_norm(x, family, pairs, tol)?,
            ),
        ])
    };
    let c = fourier_coeffs(x, family)?;
    let coeff_energy = energy(&c);
    let norm_x_sq = norm_sq(x);
    let defect = norm_x_sq - coeff_energy;
    let mids = pairs.mids();
    let quarter_diff = 0.25 * pairs.sum_diff_abs_sq();
    let center_dist_sq = norm_sq(&x.sub(&family.combination(&mids)));
    let offset_energy: f64 = mids
        .iter()
        .zip(&c)
        .map(|(&m, &ci)| (m - ci).abs_sq())
        .sum();

    let mut out = Vec::with_capacity(4);

    out.push(BoundReport::build(
        ReportSpec {
            theorem_id: "bessel-baseline-residual",
            case_tag: None,
            hypothesis: hypothesis()?,
            lhs: defect,
            rhs: quarter_diff,
            scale: chain_scale(&[defect, center_dist_sq, quarter_diff]),
            intermediate: vec![
                ("chain:center-distance-sq", center_dist_sq),
                ("coefficient-energy", coeff_energy),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    ));

    out.push(BoundReport::build(
        ReportSpec {
            theorem_id: "bessel-baseline-midpoint",
            case_tag: None,
            hypothesis: hypothesis()?,
            lhs: defect,
            rhs: quarter_diff,
            scale: chain_scale(&[defect, quarter_diff]),
            intermediate: vec![
                ("chain:offset-reduced", quarter_diff - offset_energy),
                ("midpoint-offset-energy", offset_energy),
                ("coefficient-energy", coeff_energy),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    ));

    out.push(require_re_positive(pairs, tol).and_then(|sum_re| {
        BoundReport::build(
            ReportSpec {
                theorem_id: "bessel-baseline-multiplicative",
                case_tag: None,
                hypothesis: hypothesis()?,
                lhs: norm_x_sq,
                rhs: 0.25 * pairs.sum_sq_abs_sum() / sum_re * coeff_energy,
                scale: chain_scale(&[
                    norm_x_sq,
                    0.25 * pairs.sum_sq_abs_sum() / sum_re * coeff_energy,
                ]),
                intermediate: vec![
                    ("coefficient-energy", coeff_energy),
                    ("re-endpoint-product-sum", sum_re),
                ],
                ratio_bound: None,
            },
            tol,
            force,
        )
    }));

    out.push(require_re_positive(pairs, tol).and_then(|sum_re| {
        let rhs = 0.25 * pairs.ratio_numerator() / sum_re * coeff_energy;
        BoundReport::build(
            ReportSpec {
                theorem_id: "bessel-baseline-additive-ratio",
                case_tag: None,
                hypothesis: hypothesis()?,
                lhs: defect,
                rhs,
                scale: chain_scale(&[defect, rhs]),
                intermediate: vec![
                    ("coefficient-energy", coeff_energy),
                    ("re-endpoint-product-sum", sum_re),
                ],
                ratio_bound: None,
            },
            tol,
            force,
        )
    }));

    Ok(out)
}

// ---------------------------------------------------------------------------
// Family Chebyshev functional bounds
// ---------------------------------------------------------------------------

/// `inner(x, y) − Σ cₓᵢ·conj(c_yᵢ)`: the family Chebyshev functional.
pub fn family_cheby(
    x: &Vector,
    y: &Vector,
    family: &OrthonormalFamily,
) -> Result<Scalar, Error> {
    family.require_valid()?;
    let cx = fourier_coeffs(x, family)?;
    let cy = fourier_coeffs(y, family)?;
    Ok(inner(x, y)? - cross_sum(&cx, &cy))
}

/// Grüss-type bound for two ball-confined vectors against one family:
///
/// `|inner(x,y) − Σ cₓᵢ·conj(c_yᵢ)|
///   <= (r₁r₂/√(D₁D₂))·√(Σ|cₓᵢ|²·Σ|c_yᵢ|²)
///   <= (r₁r₂/√(D₁D₂))·‖x‖·‖y‖`
///
/// with `Dₖ = Σ|λₖᵢ|² − rₖ² > 0` per vector.
#[allow(clippy::too_many_arguments)]
pub fn gruss_family_disc(
    x: &Vector,
    y: &Vector,
    family: &OrthonormalFamily,
    x_lambda: &[Scalar],
    x_r: f64,
    y_lambda: &[Scalar],
    y_r: f64,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    family.require_valid()?;
    require_member_space(x, family)?;
    require_member_space(y, family)?;
    let mut hypothesis = Vec::with_capacity(4);
    let mut normalizers = [0.0_f64; 2];
    for (k, (v, lambda, r, who)) in [
        (x, x_lambda, x_r, "x"),
        (y, y_lambda, y_r, "y"),
    ]
    .into_iter()
    .enumerate()
    {
        require_pair_count(family, lambda.len(), "coefficient entries")?;
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::BadRadius {
                value: r,
                requirement: "finite and > 0",
            });
        }
        let s: f64 = lambda.iter().map(|l| l.abs_sq()).sum();
        let d = s - r * r;
        if d <= 0.0 {
            return Err(Error::NegativeRadicand {
                label: if who == "x" {
                    "x-lambda-energy-minus-radius-squared"
                } else {
                    "y-lambda-energy-minus-radius-squared"
                },
                value: d,
            });
        }
        normalizers[k] = d;
        let energy_label = if who == "x" {
            "x-energy-dominates-radius"
        } else {
            "y-energy-dominates-radius"
        };
        let ball_label = if who == "x" {
            "x-ball-membership"
        } else {
            "y-ball-membership"
        };
        hypothesis.push((
            energy_label,
            HypothesisStatus::strict_from_margin(d, tol.band(s.max(r * r))),
        ));
        let dist = norm(&v.sub(&family.combination(lambda)));
        hypothesis.push((
            ball_label,
            HypothesisStatus::from_margin(r - dist, tol.band(r.max(dist))),
        ));
    }

    let cx = fourier_coeffs(x, family)?;
    let cy = fourier_coeffs(y, family)?;
    let cross = inner(x, y)? - cross_sum(&cx, &cy);
    let factor = x_r * y_r / (normalizers[0] * normalizers[1]).sqrt();
    let lhs = cross.abs();
    let coeff_link = factor * (energy(&cx) * energy(&cy)).sqrt();
    let rhs = factor * norm(x) * norm(y);
    BoundReport::build(
        ReportSpec {
            theorem_id: "gruss-family-disc",
            case_tag: None,
            hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, coeff_link, rhs]),
            intermediate: vec![
                ("chain:coefficient-form", coeff_link),
                ("cross-coefficient-re", cross.re()),
                ("cross-coefficient-im", cross.im()),
                ("x-coefficient-energy", energy(&cx)),
                ("y-coefficient-energy", energy(&cy)),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Grüss-type bound for two segment-confined vectors against one family:
///
/// `|inner(x,y) − Σ cₓᵢ·conj(c_yᵢ)|
///   <= ¼·√(Σ|Aᵢ−aᵢ|²·Σ|Bᵢ−bᵢ|²) / √(Dₓ·D_y) · √(Σ|cₓᵢ|²·Σ|c_yᵢ|²)
///   <= (same factor)·‖x‖·‖y‖`
///
/// with `(aᵢ, Aᵢ)` the pairs for `x`, `(bᵢ, Bᵢ)` the pairs for `y`, and
/// `Dₓ, D_y` the respective `Σ Re(upper·conj(lower)) > 0`.
pub fn gruss_family_segment(
    x: &Vector,
    y: &Vector,
    family: &OrthonormalFamily,
    x_pairs: &PairSequence,
    y_pairs: &PairSequence,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    family.require_valid()?;
    require_member_space(x, family)?;
    require_member_space(y, family)?;
    require_pair_count(family, x_pairs.len(), "pair sequence entries for x")?;
    require_pair_count(family, y_pairs.len(), "pair sequence entries for y")?;
    let dx = require_re_positive(x_pairs, tol)?;
    let dy = require_re_positive(y_pairs, tol)?;

    let hypothesis = vec![
        (
            "x-family-segment-re",
            check_family_re(x, family, x_pairs, tol)?,
        ),
        (
            "x-family-segment-norm",
            check_family_norm(x, family, x_pairs, tol)?,
        ),
        (
            "y-family-segment-re",
            check_family_re(y, family, y_pairs, tol)?,
        ),
        (
            "y-family-segment-norm",
            check_family_norm(y, family, y_pairs, tol)?,
        ),
    ];

    let cx = fourier_coeffs(x, family)?;
    let cy = fourier_coeffs(y, family)?;
    let cross = inner(x, y)? - cross_sum(&cx, &cy);
    let factor = 0.25 * (x_pairs.sum_diff_abs_sq() * y_pairs.sum_diff_abs_sq()).sqrt()
        / (dx * dy).sqrt();
    let lhs = cross.abs();
    let coeff_link = factor * (energy(&cx) * energy(&cy)).sqrt();
    let rhs = factor * norm(x) * norm(y);
    BoundReport::build(
        ReportSpec {
            theorem_id: "gruss-family-segment",
            case_tag: None,
            hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, coeff_link, rhs]),
            intermediate: vec![
                ("chain:coefficient-form", coeff_link),
                ("cross-coefficient-re", cross.re()),
                ("cross-coefficient-im", cross.im()),
                ("x-coefficient-energy", energy(&cx)),
                ("y-coefficient-energy", energy(&cy)),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Verdict;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn reference_family() -> OrthonormalFamily {
        OrthonormalFamily::with_default_tol(vec![
            Vector::real(&[1.0, 0.0, 0.0]).unwrap(),
            Vector::real(&[0.0, 1.0, 0.0]).unwrap(),
        ])
        .unwrap()
    }

    fn reference_x() -> Vector {
        Vector::real(&[1.0, 1.0, 0.2]).unwrap()
    }

    fn reference_pairs() -> PairSequence {
        PairSequence::real(&[(0.7, 1.3), (0.7, 1.3)]).unwrap()
    }

    #[test]
    fn pair_sequence_sums() {
        let p = reference_pairs();
        assert_eq!(p.len(), 2);
        assert_abs_diff_eq!(p.sum_diff_abs_sq(), 0.72, epsilon = 1e-15);
        assert_abs_diff_eq!(p.sum_re_product(), 1.82, epsilon = 1e-15);
        assert_abs_diff_eq!(p.sum_sq_abs_sum(), 8.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.ratio_numerator(), 0.72, epsilon = 1e-15);
        assert_abs_diff_eq!(p.radius(), 0.5 * 0.72f64.sqrt(), epsilon = 1e-15);
        let m = p.mid(0);
        assert_abs_diff_eq!(m.re(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn pair_sequence_validation_and_json() {
        assert!(PairSequence::new(vec![], vec![]).is_err());
        assert!(PairSequence::new(
            vec![Scalar::real(1.0)],
            vec![Scalar::real(1.0), Scalar::real(2.0)]
        )
        .is_err());
        assert!(PairSequence::new(
            vec![Scalar::real(f64::NAN)],
            vec![Scalar::real(1.0)]
        )
        .is_err());

        let p: PairSequence =
            serde_json::from_str(r#"{"lower":[0.7,[0.5,-0.1]],"upper":[1.3,[1.2,0.3]]}"#)
                .unwrap();
        assert_eq!(p.len(), 2);
        assert_abs_diff_eq!(p.lower()[1].im(), -0.1, epsilon = 1e-15);
        assert!(serde_json::from_str::<PairSequence>(r#"{"lower":[1.0],"upper":[]}"#).is_err());
    }

    #[test]
    fn defect_and_coeffs_on_reference_instance() {
        let fam = reference_family();
        let x = reference_x();
        let c = fourier_coeffs(&x, &fam).unwrap();
        assert_eq!(c.len(), 2);
        assert_abs_diff_eq!(c[0].re(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bessel_defect(&x, &fam).unwrap(), 0.04, epsilon = 1e-15);
    }

    #[test]
    fn invalid_family_is_rejected() {
        let e1 = Vector::real(&[1.0, 0.0, 0.0]).unwrap();
        let fam = OrthonormalFamily::with_default_tol(vec![e1.clone(), e1]).unwrap();
        assert!(matches!(
            bessel_defect(&reference_x(), &fam),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn family_hypothesis_margins_on_reference_instance() {
        let fam = reference_family();
        let x = reference_x();
        let p = reference_pairs();
        let re = check_family_re(&x, &fam, &p, &tol()).unwrap();
        assert_eq!(re.verdict, Verdict::Holds);
        assert_abs_diff_eq!(re.margin, 0.14, epsilon = 1e-15);
        let nm = check_family_norm(&x, &fam, &p, &tol()).unwrap();
        // ½√0.72 − 0.2
        assert_abs_diff_eq!(nm.margin, 0.5 * 0.72f64.sqrt() - 0.2, epsilon = 1e-15);
        // The bilinear margin equals radius² − distance².
        assert_abs_diff_eq!(re.margin, p.radius().powi(2) - 0.04, epsilon = 1e-12);
    }

    #[test]
    fn disc_reference_chain() {
        let fam = reference_family();
        let x = reference_x();
        let lambda = vec![Scalar::real(1.0), Scalar::real(1.0)];
        let rep = reverse_bessel_disc(&x, &fam, &lambda, 0.3, &tol(), false).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_abs_diff_eq!(rep.lhs, 2.04, epsilon = 1e-15);
        let expect = 4.0 / 1.91;
        assert_abs_diff_eq!(
            rep.value("chain:normalized-re-square").unwrap(),
            expect,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            rep.value("chain:normalized-abs-square").unwrap(),
            expect,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(rep.rhs, expect, epsilon = 1e-12);
        assert_abs_diff_eq!(rep.value("defect").unwrap(), 0.04, epsilon = 1e-12);
        assert_abs_diff_eq!(
            rep.value("defect-bound").unwrap(),
            0.094240837696335078,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.hypothesis[1].margin, 0.1, epsilon = 1e-15);
        assert!(rep.min_link_slack() >= 0.0);
    }

    #[test]
    fn disc_domain_errors() {
        let fam = reference_family();
        let x = reference_x();
        let lambda = vec![Scalar::real(1.0), Scalar::real(1.0)];
        assert!(matches!(
            reverse_bessel_disc(&x, &fam, &lambda, 1.5, &tol(), false),
            Err(Error::NegativeRadicand { .. })
        ));
        assert!(matches!(
            reverse_bessel_disc(&x, &fam, &lambda, -0.5, &tol(), false),
            Err(Error::BadRadius { .. })
        ));
        assert!(matches!(
            reverse_bessel_disc(&x, &fam, &lambda[..1], 0.3, &tol(), false),
            Err(Error::InputMismatch(_))
        ));
    }

    #[test]
    fn disc_strict_energy_band_fails_and_is_forceable() {
        let fam = reference_family();
        let x = Vector::real(&[1.0, 1.0, 0.0]).unwrap();
        let lambda = vec![Scalar::real(1.0), Scalar::real(1.0)];
        // S − r² ≈ 1e-12 is positive but inside the band: strict failure.
        let r = (2.0_f64 - 1e-12).sqrt();
        let err = reverse_bessel_disc(&x, &fam, &lambda, r, &tol(), false);
        assert!(matches!(
            err,
            Err(Error::HypothesisViolated {
                label: "energy-dominates-radius",
                ..
            })
        ));
        let rep = reverse_bessel_disc(&x, &fam, &lambda, r, &tol(), true).unwrap();
        assert!(!rep.trusted);
    }

    #[test]
    fn segment_reference_chain_and_path_deviation() {
        let fam = reference_family();
        let x = reference_x();
        let p = reference_pairs();
        let rep = reverse_bessel_segment(&x, &fam, &p, &tol(), false).unwrap();
        let expect = 2.1978021978021978;
        assert_abs_diff_eq!(
            rep.value("chain:normalized-re-square").unwrap(),
            expect,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.rhs, expect, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("defect-bound").unwrap(),
            0.1978021978021978,
            epsilon = 1e-15
        );
        assert!(rep.value("path-deviation").unwrap() <= 1e-12);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn segment_regime_is_enforced() {
        let fam = reference_family();
        let x = reference_x();
        let neg = PairSequence::real(&[(-0.7, 1.3), (-0.7, 1.3)]).unwrap();
        assert!(matches!(
            reverse_bessel_segment(&x, &fam, &neg, &tol(), false),
            Err(Error::RegimeMismatch {
                found: "re-negative",
                ..
            })
        ));
    }

    #[test]
    fn baseline_reference_values() {
        let fam = reference_family();
        let x = reference_x();
        let p = reference_pairs();
        let reports = baseline_bessel(&x, &fam, &p, &tol(), false).unwrap();
        assert_eq!(reports.len(), 4);
        let residual = reports[0].as_ref().unwrap();
        assert_abs_diff_eq!(residual.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(
            residual.value("chain:center-distance-sq").unwrap(),
            0.04,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(residual.rhs, 0.18, epsilon = 1e-15);

        let midpoint = reports[1].as_ref().unwrap();
        assert_abs_diff_eq!(
            midpoint.value("chain:offset-reduced").unwrap(),
            0.18,
            epsilon = 1e-15
        );

        let multiplicative = reports[2].as_ref().unwrap();
        assert_abs_diff_eq!(multiplicative.lhs, 2.04, epsilon = 1e-15);
        assert_abs_diff_eq!(multiplicative.rhs, 2.1978021978021978, epsilon = 1e-15);

        let ratio = reports[3].as_ref().unwrap();
        assert_abs_diff_eq!(ratio.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(ratio.rhs, 0.1978021978021978, epsilon = 1e-15);
        for rep in reports.iter().map(|r| r.as_ref().unwrap()) {
            assert_eq!(rep.verdict, Verdict::Holds);
            // The instance sits on the equality case of the residual chain's
            // first link, whose two sides are computed by different routes,
            // so the link slack can round a few ulps below zero.
            assert!(rep.min_link_slack() >= -1e-12);
        }
    }

    #[test]
    fn baseline_regime_entries_err_without_failing_others() {
        let fam = reference_family();
        let x = reference_x();
        // Mixed-sign pairs: Σ Re(upper·conj(lower)) < 0 overall, but the
        // segment hypothesis itself can still be checked.
        let p = PairSequence::real(&[(-1.3, 1.3), (-1.3, 1.3)]).unwrap();
        let reports = baseline_bessel(&x, &fam, &p, &tol(), true).unwrap();
        assert!(reports[0].is_ok());
        assert!(reports[1].is_ok());
        assert!(matches!(reports[2], Err(Error::RegimeMismatch { .. })));
        assert!(matches!(reports[3], Err(Error::RegimeMismatch { .. })));
    }

    #[test]
    fn family_disc_reference_values() {
        let fam = reference_family();
        let x = reference_x();
        let y = Vector::real(&[1.0, 1.0, -0.2]).unwrap();
        let lambda = vec![Scalar::real(1.0), Scalar::real(1.0)];
        let rep = gruss_family_disc(
            &x, &y, &fam, &lambda, 0.3, &lambda, 0.3, &tol(), false,
        )
        .unwrap();
        assert_abs_diff_eq!(rep.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("chain:coefficient-form").unwrap(),
            0.094240837696335078,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.rhs, 0.096125654450261780, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.min_link_slack() >= 0.0);
    }

    #[test]
    fn family_segment_reference_values() {
        let fam = reference_family();
        let x = reference_x();
        let y = Vector::real(&[1.0, 1.0, -0.2]).unwrap();
        let p = reference_pairs();
        let rep = gruss_family_segment(&x, &y, &fam, &p, &p, &tol(), false).unwrap();
        assert_abs_diff_eq!(rep.lhs, 0.04, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rep.value("chain:coefficient-form").unwrap(),
            0.1978021978021978,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(rep.rhs, 0.25 * 0.72 / 1.82 * 2.04, epsilon = 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn family_segment_with_equal_arguments_matches_defect_bound() {
        // x = y collapses the family Chebyshev functional to the Bessel
        // defect, and the coefficient link to the segment defect bound.
        let fam = reference_family();
        let x = reference_x();
        let p = reference_pairs();
        let g = gruss_family_segment(&x, &x, &fam, &p, &p, &tol(), false).unwrap();
        let b = reverse_bessel_segment(&x, &fam, &p, &tol(), false).unwrap();
        assert_abs_diff_eq!(g.lhs, b.value("defect").unwrap(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            g.value("chain:coefficient-form").unwrap(),
            b.value("defect-bound").unwrap(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn family_cheby_matches_report_lhs() {
        let fam = reference_family();
        let x = reference_x();
        let y = Vector::real(&[1.0, 1.0, -0.2]).unwrap();
        let c = family_cheby(&x, &y, &fam).unwrap();
        assert_abs_diff_eq!(c.abs(), 0.04, epsilon = 1e-15);
    }
}
