//! Weighted quadrature spaces: sampled functions on a node/weight/density
//! grid, with the inner product `inner(f, g) = Σ wᵢ·ρᵢ·fᵢ·conj(gᵢ)`.
//!
//! A [`WeightedMeasure`] normalizes its density so the total mass
//! `Σ wᵢ·ρᵢ` is exactly 1 (the original mass is kept as
//! [`normalization`](WeightedMeasure::normalization)); the disc-style bound
//! here is not homogeneous in the density, so evaluators state their
//! conclusions for the normalized measure.
//!
//! The evaluators mirror the finite-dimensional ones with pointwise (node by
//! node) constraints in place of ball or segment membership:
//! [`integral_reverse_schwarz_disc`], [`integral_reverse_schwarz_segment`],
//! the ratio-band product bound [`cassel`], and the three-function
//! Chebyshev-functional bound [`integral_gruss`].

use crate::constraints::{HypothesisStatus, SegmentRegime};
use crate::error::Error;
use crate::report::{BoundReport, ReportSpec};
use crate::scalar::{Field, Scalar};
use crate::tolerance::Tolerance;
use crate::vector::Vector;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

/// Quadrature rule used by [`make_measure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureKind {
    UniformMidpoint,
    GaussLegendre,
}

impl QuadratureKind {
    pub fn tag(self) -> &'static str {
        match self {
            QuadratureKind::UniformMidpoint => "uniform-midpoint",
            QuadratureKind::GaussLegendre => "gauss-legendre",
        }
    }
}

/// Nodes, quadrature weights, and a nonnegative density, normalized on
/// construction so that `Σ wᵢ·ρᵢ = 1`.
///
/// JSON form: `{"nodes": [...], "weights": [...], "density": [...]}`. The
/// density in a file need not be normalized; construction renormalizes and
/// records the original total mass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureRaw")]
pub struct WeightedMeasure {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    density: Vec<f64>,
    #[serde(skip)]
    normalization: f64,
}

#[derive(Deserialize)]
struct MeasureRaw {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    density: Vec<f64>,
}

impl TryFrom<MeasureRaw> for WeightedMeasure {
    type Error = Error;
    fn try_from(raw: MeasureRaw) -> Result<Self, Error> {
        WeightedMeasure::new(raw.nodes, raw.weights, raw.density)
    }
}

impl WeightedMeasure {
    pub fn new(
        nodes: Vec<f64>,
        weights: Vec<f64>,
        density: Vec<f64>,
    ) -> Result<WeightedMeasure, Error> {
        if nodes.is_empty() {
            return Err(Error::mismatch("measure needs at least one node"));
        }
        if nodes.len() != weights.len() || nodes.len() != density.len() {
            return Err(Error::mismatch(format!(
                "measure arrays disagree in length: {} nodes, {} weights, {} density values",
                nodes.len(),
                weights.len(),
                density.len()
            )));
        }
        if !nodes.iter().all(|v| v.is_finite()) {
            return Err(Error::mismatch("measure nodes must be finite"));
        }
        if !weights.iter().all(|w| w.is_finite() && *w > 0.0) {
            return Err(Error::mismatch(
                "quadrature weights must be finite and > 0",
            ));
        }
        for (i, &d) in density.iter().enumerate() {
            if !(d.is_finite() && d >= 0.0) {
                return Err(Error::NegativeDensity { node: i, value: d });
            }
        }
        let total: f64 = weights.iter().zip(&density).map(|(w, d)| w * d).sum();
        if !(total.is_finite() && total > 0.0) {
            return Err(Error::NonpositiveMass { total });
        }
        let density = density.iter().map(|d| d / total).collect();
        Ok(WeightedMeasure {
            nodes,
            weights,
            density,
            normalization: total,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty node lists
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// The normalized density (`Σ wᵢ·ρᵢ = 1`).
    pub fn density(&self) -> &[f64] {
        &self.density
    }

    /// The total mass `Σ wᵢ·ρᵢ` of the density as originally supplied.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    /// `wᵢ·ρᵢ` for one node (normalized).
    pub fn node_mass(&self, i: usize) -> f64 {
        self.weights[i] * self.density[i]
    }
}

/// Build a measure on `[lo, hi]` with `n` nodes under the given rule,
/// sampling the density at the nodes.
pub fn make_measure(
    kind: QuadratureKind,
    lo: f64,
    hi: f64,
    n: usize,
    density: impl Fn(f64) -> f64,
) -> Result<WeightedMeasure, Error> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::BadInterval {
            lo,
            hi,
            requirement: "finite with lo < hi",
        });
    }
    if n == 0 {
        return Err(Error::mismatch("quadrature needs at least one node"));
    }
    let (nodes, weights) = match kind {
        QuadratureKind::UniformMidpoint => {
            let h = (hi - lo) / n as f64;
            (
                (0..n).map(|k| lo + (k as f64 + 0.5) * h).collect::<Vec<_>>(),
                vec![h; n],
            )
        }
        QuadratureKind::GaussLegendre => {
            let (t, w) = gauss_legendre_unit(n);
            let mid = 0.5 * (lo + hi);
            let half = 0.5 * (hi - lo);
            (
                t.iter().map(|&ti| mid + half * ti).collect(),
                w.iter().map(|&wi| half * wi).collect(),
            )
        }
    };
    let rho = nodes.iter().map(|&s| density(s)).collect();
    WeightedMeasure::new(nodes, weights, rho)
}

/// Legendre nodes and weights on `[−1, 1]` by Newton iteration on `Pₙ`.
fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        // Standard initial guess for the k-th root (descending order).
        let mut t = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, t);
            dp = d;
            let step = p / d;
            t -= step;
            if step.abs() <= 1e-15 {
                let (_, d2) = legendre_with_derivative(n, t);
                dp = d2;
                break;
            }
        }
        nodes[k] = t;
        weights[k] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    // Ascending nodes are the natural presentation of a 1-D grid.
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// `(Pₙ(t), Pₙ′(t))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, t: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P₀
    let mut p = t; // P₁
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p_next = ((2.0 * jf - 1.0) * t * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    let d = n as f64 * (t * p - p_prev) / (t * t - 1.0);
    (p, d)
}

// ---------------------------------------------------------------------------
// Sampled functions
// ---------------------------------------------------------------------------

/// A function given by its values at the measure's nodes.
///
/// JSON form: `{"values": [...]}` with the same element shapes as vectors
/// (bare numbers for real values, `[re, im]` pairs for complex ones).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    values: Vector,
}

impl SampledFunction {
    pub fn new(values: Vector) -> SampledFunction {
        SampledFunction { values }
    }

    pub fn real(values: &[f64]) -> Result<SampledFunction, Error> {
        Ok(SampledFunction::new(Vector::real(values)?))
    }

    pub fn complex(values: &[(f64, f64)]) -> Result<SampledFunction, Error> {
        Ok(SampledFunction::new(Vector::complex(values)?))
    }

    /// Sample a real-valued function at the measure's nodes.
    pub fn from_fn(
        measure: &WeightedMeasure,
        f: impl Fn(f64) -> f64,
    ) -> Result<SampledFunction, Error> {
        SampledFunction::real(&measure.nodes().iter().map(|&s| f(s)).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.values.dim()
    }

    pub fn is_empty(&self) -> bool {
        false // vectors have dimension >= 1
    }

    pub fn field(&self) -> Field {
        self.values.field()
    }

    pub fn value(&self, i: usize) -> Scalar {
        self.values.coord(i)
    }

    pub fn values(&self) -> &Vector {
        &self.values
    }
}

fn require_sampled(
    fs: &[&SampledFunction],
    measure: &WeightedMeasure,
) -> Result<(), Error> {
    let field = fs[0].field();
    for f in fs {
        if f.len() != measure.len() {
            return Err(Error::mismatch(format!(
                "sampled function has {} values for a {}-node measure",
                f.len(),
                measure.len()
            )));
        }
        if f.field() != field {
            return Err(Error::mismatch(
                "sampled functions must share one representation (all real or all complex)",
            ));
        }
    }
    Ok(())
}

/// `Σ wᵢ·ρᵢ·fᵢ·conj(gᵢ)` — the weighted inner product.
pub fn weighted_inner(
    f: &SampledFunction,
    g: &SampledFunction,
    measure: &WeightedMeasure,
) -> Result<Scalar, Error> {
    require_sampled(&[f, g], measure)?;
    let mut acc = Scalar::zero(f.field().join(g.field()));
    for i in 0..measure.len() {
        acc = acc + (f.value(i) * g.value(i).conj()).scale(measure.node_mass(i));
    }
    Ok(acc)
}

/// `Σ wᵢ·ρᵢ·|fᵢ|²`.
pub fn weighted_norm_sq(
    f: &SampledFunction,
    measure: &WeightedMeasure,
) -> Result<f64, Error> {
    require_sampled(&[f], measure)?;
    Ok((0..measure.len())
        .map(|i| measure.node_mass(i) * f.value(i).abs_sq())
        .sum())
}

/// The vector with coordinates `√(wᵢ·ρᵢ)·fᵢ`: its plain inner product equals
/// the weighted inner product of the sampled functions.
pub fn to_weighted_vector(
    f: &SampledFunction,
    measure: &WeightedMeasure,
) -> Result<Vector, Error> {
    require_sampled(&[f], measure)?;
    Vector::new(
        (0..measure.len())
            .map(|i| f.value(i).scale(measure.node_mass(i).sqrt()))
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Pointwise hypothesis checks
// ---------------------------------------------------------------------------

/// Node-by-node margins together with their aggregated status. The
/// aggregate is the minimum margin over nodes carrying positive mass;
/// zero-mass nodes are reported but do not affect the verdict.
#[derive(Clone, Debug, Serialize)]
pub struct PointwiseCheck {
    pub status: HypothesisStatus,
    pub margins: Vec<f64>,
}

fn aggregate_pointwise(
    measure: &WeightedMeasure,
    margins: Vec<f64>,
    scales: &[f64],
    tol: &Tolerance,
) -> PointwiseCheck {
    let mut min_margin = f64::INFINITY;
    let mut scale = 0.0_f64;
    for i in 0..measure.len() {
        if measure.node_mass(i) > 0.0 {
            min_margin = min_margin.min(margins[i]);
            scale = scale.max(scales[i]);
        }
    }
    PointwiseCheck {
        status: HypothesisStatus::from_margin(min_margin, tol.band(scale)),
        margins,
    }
}

/// Pointwise ball constraint `|fᵢ − gᵢ| <= r`: margin `r − |fᵢ − gᵢ|` per
/// node.
pub fn check_pointwise_disc(
    f: &SampledFunction,
    g: &SampledFunction,
    r: f64,
    measure: &WeightedMeasure,
    tol: &Tolerance,
) -> Result<PointwiseCheck, Error> {
    require_sampled(&[f, g], measure)?;
    let mut margins = Vec::with_capacity(measure.len());
    let mut scales = Vec::with_capacity(measure.len());
    for i in 0..measure.len() {
        let d = (f.value(i) - g.value(i)).abs();
        margins.push(r - d);
        scales.push(r.max(d));
    }
    Ok(aggregate_pointwise(measure, margins, &scales, tol))
}

/// Pointwise segment constraint
/// `Re[(upper·gᵢ − fᵢ)·conj(fᵢ − lower·gᵢ)] >= 0` per node.
pub fn check_pointwise_segment(
    f: &SampledFunction,
    g: &SampledFunction,
    lower: Scalar,
    upper: Scalar,
    measure: &WeightedMeasure,
    tol: &Tolerance,
) -> Result<PointwiseCheck, Error> {
    require_sampled(&[f, g], measure)?;
    let mut margins = Vec::with_capacity(measure.len());
    let mut scales = Vec::with_capacity(measure.len());
    for i in 0..measure.len() {
        let left = upper * g.value(i) - f.value(i);
        let right = f.value(i) - lower * g.value(i);
        margins.push((left * right.conj()).re());
        scales.push(left.abs() * right.abs());
    }
    Ok(aggregate_pointwise(measure, margins, &scales, tol))
}

/// Per-node margin table as CSV: `index,node,weight,density,margin` with
/// full-precision floats.
pub fn margins_csv(measure: &WeightedMeasure, check: &PointwiseCheck) -> String {
    let mut out = String::from("index,node,weight,density,margin\n");
    for i in 0..measure.len() {
        writeln!(
            out,
            "{i},{:.16e},{:.16e},{:.16e},{:.16e}",
            measure.nodes()[i],
            measure.weights()[i],
            measure.density()[i],
            check.margins[i]
        )
        .expect("writing to a String cannot fail");
    }
    out
}

// ---------------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------------

fn chain_scale(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Reverse Schwarz bound for the normalized measure when `f` stays within
/// `r` of `g` at every node. With `F = ∫ρ|f|²`, `E = ∫ρ|g|²`, and
/// `z = ∫ρ·f·conj(g)` (integrals meaning weighted sums), the bound splits on
/// how `E` compares to `r²` (the `case_tag` records which):
///
/// * `energy-above-radius` (`E > r²`):
///   `F·E − |z|² <= F·E − (Re z)² <= r²·F`;
/// * `energy-below-radius` (`E < r²`):
///   `F <= r² − E + 2·Re z <= r² − E + 2·|z|`.
///
/// `E = r²` is rejected as a hypothesis failure (`energy-apart-from-radius`)
/// since neither derivation is informative there; forcing proceeds with the
/// sign of `E − r²`.
pub fn integral_reverse_schwarz_disc(
    f: &SampledFunction,
    g: &SampledFunction,
    r: f64,
    measure: &WeightedMeasure,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::BadRadius {
            value: r,
            requirement: "finite and > 0",
        });
    }
    let pointwise = check_pointwise_disc(f, g, r, measure, tol)?;
    let big_f = weighted_norm_sq(f, measure)?;
    let energy = weighted_norm_sq(g, measure)?;
    let z = weighted_inner(f, g, measure)?;
    let apart = HypothesisStatus::strict_from_margin(
        (energy - r * r).abs(),
        tol.band(energy.max(r * r)),
    );

    let above = energy - r * r > 0.0;
    let (lhs, mid, rhs, mid_label, case_tag): (f64, f64, f64, &'static str, &'static str) =
        if above {
            (
                big_f * energy - z.abs_sq(),
                big_f * energy - z.re() * z.re(),
                r * r * big_f,
                "chain:gap-re",
                "energy-above-radius",
            )
        } else {
            let shift = r * r - energy;
            (
                big_f,
                shift + 2.0 * z.re(),
                shift + 2.0 * z.abs(),
                "chain:shifted-twice-re",
                "energy-below-radius",
            )
        };
    let mut intermediate = vec![
        (mid_label, mid),
        ("product-re", z.re()),
        ("f-energy", big_f),
        ("g-energy", energy),
        ("density-normalization", measure.normalization()),
    ];
    if above {
        // Companion fact in this case: Re z >= √F·√(E − r²).
        intermediate.push((
            "re-product-floor",
            big_f.sqrt() * (energy - r * r).max(0.0).sqrt(),
        ));
    }

    BoundReport::build(
        ReportSpec {
            theorem_id: "integral-disc",
            case_tag: Some(case_tag),
            hypothesis: vec![
                ("pointwise-ball-at-nodes", pointwise.status),
                ("energy-apart-from-radius", apart),
            ],
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

/// Reverse Schwarz bound for functions under a pointwise segment constraint
/// with `Re(upper·conj(lower)) > 0`:
///
/// `(∫ρ|f|²)·(∫ρ|g|²) <= ¼·(Re[(conj(Γ)+conj(γ))·z])²/Re(Γ·conj(γ))
///   <= ¼·|Γ+γ|²·|z|²/Re(Γ·conj(γ))`,
///
/// `z = ∫ρ·f·conj(g)`. The additive companion bound on the Schwarz gap is
/// recorded through the `schwarz-gap` / `schwarz-gap-bound` intermediates.
pub fn integral_reverse_schwarz_segment(
    f: &SampledFunction,
    g: &SampledFunction,
    lower: Scalar,
    upper: Scalar,
    measure: &WeightedMeasure,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    if !lower.is_finite() || !upper.is_finite() {
        return Err(Error::mismatch("segment endpoints must be finite"));
    }
    let p = (upper * lower.conj()).re();
    let band = tol.band(upper.abs() * lower.abs());
    if p <= band {
        return Err(Error::RegimeMismatch {
            required: SegmentRegime::RePositive.tag(),
            found: if p < -band {
                SegmentRegime::ReNegative.tag()
            } else {
                SegmentRegime::ReZero.tag()
            },
        });
    }
    let pointwise = check_pointwise_segment(f, g, lower, upper, measure, tol)?;
    let big_f = weighted_norm_sq(f, measure)?;
    let big_g = weighted_norm_sq(g, measure)?;
    let z = weighted_inner(f, g, measure)?;
    let weighted_re = ((upper + lower).conj() * z).re();
    let sum_abs = (upper + lower).abs();
    let diff_abs = (upper - lower).abs();

    let lhs = big_f * big_g;
    let mid = 0.25 * weighted_re * weighted_re / p;
    let rhs = 0.25 * sum_abs * sum_abs * z.abs_sq() / p;
    BoundReport::build(
        ReportSpec {
            theorem_id: "integral-segment",
            case_tag: Some(SegmentRegime::RePositive.tag()),
            hypothesis: vec![("pointwise-segment-at-nodes", pointwise.status)],
            lhs,
            rhs,
            scale: chain_scale(&[lhs, mid, rhs]),
            intermediate: vec![
                ("chain:normalized-re-square", mid),
                ("re-product", p),
                ("schwarz-gap", big_f * big_g - z.abs_sq()),
                ("schwarz-gap-bound", 0.25 * diff_abs * diff_abs * z.abs_sq() / p),
                ("density-normalization", measure.normalization()),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Ratio-band product bound for real-valued functions: when
/// `(M·gᵢ − fᵢ)·(fᵢ − m·gᵢ) >= 0` at every node and `0 < m <= M`,
///
/// `(∫ρf²)·(∫ρg²) <= ((M+m)²/(4mM))·(∫ρfg)²`,
///
/// equivalently a gap bound
/// `(∫ρf²)(∫ρg²) − (∫ρfg)² <= ((M−m)²/(4mM))·(∫ρfg)²` (reported through the
/// `gap` / `gap-bound` intermediates). This is the segment bound with real
/// endpoints `(m, M)`; that route is evaluated too and the largest
/// disagreement recorded as `path-deviation`.
pub fn cassel(
    f: &SampledFunction,
    g: &SampledFunction,
    m: f64,
    big_m: f64,
    measure: &WeightedMeasure,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    if f.field() != Field::Real || g.field() != Field::Real {
        return Err(Error::mismatch(
            "ratio-band bound takes real-valued functions",
        ));
    }
    if !(m.is_finite() && big_m.is_finite() && 0.0 < m && m <= big_m) {
        return Err(Error::BadInterval {
            lo: m,
            hi: big_m,
            requirement: "finite with 0 < m <= M",
        });
    }
    let pointwise =
        check_pointwise_segment(f, g, Scalar::real(m), Scalar::real(big_m), measure, tol)?;
    let big_f = weighted_norm_sq(f, measure)?;
    let big_g = weighted_norm_sq(g, measure)?;
    let z = weighted_inner(f, g, measure)?.re();

    let lhs = big_f * big_g;
    let rhs = (big_m + m).powi(2) / (4.0 * m * big_m) * z * z;
    // Same data through the segment evaluator; hypothesis gating already
    // happened here, so the route runs forced and is only mined for values.
    let routed = integral_reverse_schwarz_segment(
        f,
        g,
        Scalar::real(m),
        Scalar::real(big_m),
        measure,
        tol,
        true,
    )?;
    let path_deviation = (rhs - routed.rhs).abs().max((lhs - routed.lhs).abs());

    BoundReport::build(
        ReportSpec {
            theorem_id: "cassel",
            case_tag: None,
            hypothesis: vec![("pointwise-ratio-band", pointwise.status)],
            lhs,
            rhs,
            scale: chain_scale(&[lhs, rhs]),
            intermediate: vec![
                ("gap", big_f * big_g - z * z),
                ("gap-bound", (big_m - m).powi(2) / (4.0 * m * big_m) * z * z),
                ("product-integral", z),
                ("path-deviation", path_deviation),
                ("density-normalization", measure.normalization()),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}

/// Grüss-type bound for the Chebyshev functional of two functions against a
/// unit-energy reference `h` (`∫ρ|h|² = 1`): when `f` satisfies the
/// pointwise segment constraint with pair `(a, A)` against `h`, `g` the one
/// with pair `(b, B)`, and both pairs have `Re(upper·conj(lower)) > 0`,
///
/// `|∫ρf·conj(g) − (∫ρf·conj(h))·(∫ρh·conj(g))|
///   <= ¼·|A−a|·|B−b| / √(Re(A·conj(a))·Re(B·conj(b)))
///     · |∫ρf·conj(h)|·|∫ρh·conj(g)|`.
///
/// `verbatim_second_level` switches the second pointwise constraint to the
/// asymmetric variant with upper endpoint `A` in place of `B`; the bound
/// itself is unchanged.
#[allow(clippy::too_many_arguments)]
pub fn integral_gruss(
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    f_pair: (Scalar, Scalar),
    g_pair: (Scalar, Scalar),
    measure: &WeightedMeasure,
    verbatim_second_level: bool,
    tol: &Tolerance,
    force: bool,
) -> Result<BoundReport, Error> {
    let (a, big_a) = f_pair;
    let (b, big_b) = g_pair;
    for s in [a, big_a, b, big_b] {
        if !s.is_finite() {
            return Err(Error::mismatch("segment endpoints must be finite"));
        }
    }
    let total = weighted_norm_sq(h, measure)?;
    if (total - 1.0).abs() > tol.band(1.0) {
        return Err(Error::NotUnitDensity { total });
    }
    for (lo, hi) in [(a, big_a), (b, big_b)] {
        let p = (hi * lo.conj()).re();
        let band = tol.band(hi.abs() * lo.abs());
        if p <= band {
            return Err(Error::RegimeMismatch {
                required: SegmentRegime::RePositive.tag(),
                found: if p < -band {
                    SegmentRegime::ReNegative.tag()
                } else {
                    SegmentRegime::ReZero.tag()
                },
            });
        }
    }
    let g_upper = if verbatim_second_level { big_a } else { big_b };
    let hypothesis = vec![
        (
            "f-pointwise-segment",
            check_pointwise_segment(f, h, a, big_a, measure, tol)?.status,
        ),
        (
            "g-pointwise-segment",
            check_pointwise_segment(g, h, b, g_upper, measure, tol)?.status,
        ),
    ];

    let zf = weighted_inner(f, h, measure)?;
    let zg = weighted_inner(h, g, measure)?;
    let cheby = weighted_inner(f, g, measure)? - zf * zg;
    let pa = (big_a * a.conj()).re();
    let pb = (big_b * b.conj()).re();
    let lhs = cheby.abs();
    let rhs = 0.25 * (big_a - a).abs() * (big_b - b).abs() / (pa * pb).sqrt()
        * zf.abs()
        * zg.abs();
    BoundReport::build(
        ReportSpec {
            theorem_id: "integral-gruss",
            case_tag: None,
            hypothesis,
            lhs,
            rhs,
            scale: chain_scale(&[lhs, rhs]),
            intermediate: vec![
                ("cheby-re", cheby.re()),
                ("cheby-im", cheby.im()),
                ("proj-f-abs", zf.abs()),
                ("proj-g-abs", zg.abs()),
                ("density-normalization", measure.normalization()),
            ],
            ratio_bound: None,
        },
        tol,
        force,
    )
}
