//! Batch stress sweeps over seeded random instances.
//!
//! A sweep draws one instance per trial from its own counter-based RNG
//! stream, evaluates the configured target, and emits one CSV row per trial
//! plus a JSON-friendly summary. Rows are ordered by trial index and every
//! draw depends only on `(seed, trial)`, so output bytes are identical
//! across runs and across worker counts.

use crate::bessel::{
    baseline_bessel, check_family_norm, check_family_re, gruss_family_disc,
    gruss_family_segment, reverse_bessel_disc, reverse_bessel_segment,
};
use crate::constraints::{
    check_segment_norm, check_segment_re, classify, DiscCase, HypothesisStatus, SegmentRegime,
    Verdict,
};
use crate::error::Error;
use crate::gruss::{gruss_disc, gruss_segment};
use crate::harness::gen;
use crate::harness::rng::trial_rng;
use crate::integral::{to_weighted_vector, weighted_inner, weighted_norm_sq};
use crate::report::BoundReport;
use crate::scalar::Field;
use crate::schwarz::{
    additive_reverse_segment, baseline_bounds, reverse_schwarz_disc, reverse_schwarz_segment,
};
use crate::tolerance::Tolerance;
use crate::triangle::{reverse_triangle_disc, reverse_triangle_segment};
use crate::vector::{inner, norm_sq};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Absolute tolerance for the quadrature-versus-vector consistency sweep.
pub const CONSISTENCY_TOL: f64 = 1e-12;

/// Everything the harness knows how to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepTarget {
    SchwarzDiscAbove,
    SchwarzDiscEqual,
    SchwarzDiscBelow,
    SchwarzSegmentPos,
    SchwarzSegmentZero,
    SchwarzSegmentNeg,
    SchwarzAdditive,
    TriangleDisc,
    TriangleSegment,
    GrussDisc,
    GrussSegment,
    BesselDiscChain,
    BesselDiscDefect,
    BesselSegmentChain,
    BesselSegmentDefect,
    GrussFamilyDisc,
    GrussFamilySegment,
    BaselineAdditive,
    BaselineMultiplicative,
    BaselineAdditiveRatio,
    BaselineAdditiveRefined,
    BesselBaselineResidual,
    BesselBaselineMidpoint,
    BesselBaselineMultiplicative,
    BesselBaselineAdditiveRatio,
    EquivalenceSegment,
    EquivalenceFamily,
    DominanceAdditive,
    DominanceMultiplicative,
    Incomparability,
    IntegralConsistency,
}

pub const ALL_TARGETS: [SweepTarget; 31] = [
    SweepTarget::SchwarzDiscAbove,
    SweepTarget::SchwarzDiscEqual,
    SweepTarget::SchwarzDiscBelow,
    SweepTarget::SchwarzSegmentPos,
    SweepTarget::SchwarzSegmentZero,
    SweepTarget::SchwarzSegmentNeg,
    SweepTarget::SchwarzAdditive,
    SweepTarget::TriangleDisc,
    SweepTarget::TriangleSegment,
    SweepTarget::GrussDisc,
    SweepTarget::GrussSegment,
    SweepTarget::BesselDiscChain,
    SweepTarget::BesselDiscDefect,
    SweepTarget::BesselSegmentChain,
    SweepTarget::BesselSegmentDefect,
    SweepTarget::GrussFamilyDisc,
    SweepTarget::GrussFamilySegment,
    SweepTarget::BaselineAdditive,
    SweepTarget::BaselineMultiplicative,
    SweepTarget::BaselineAdditiveRatio,
    SweepTarget::BaselineAdditiveRefined,
    SweepTarget::BesselBaselineResidual,
    SweepTarget::BesselBaselineMidpoint,
    SweepTarget::BesselBaselineMultiplicative,
    SweepTarget::BesselBaselineAdditiveRatio,
    SweepTarget::EquivalenceSegment,
    SweepTarget::EquivalenceFamily,
    SweepTarget::DominanceAdditive,
    SweepTarget::DominanceMultiplicative,
    SweepTarget::Incomparability,
    SweepTarget::IntegralConsistency,
];

/// What a sweep target measures, which also fixes its CSV schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetKind {
    /// Per-trial bound evaluation; a violation is a chain link beyond the band.
    Inequality,
    /// Two formulations of one condition; a violation is a verdict disagreement
    /// with both margins outside the band.
    Equivalence,
    /// Sharp bound versus its coarser baseline; a violation is a baseline
    /// falling below the sharp bound beyond the band.
    Dominance,
    /// Paired diagnostics with no fixed order; rows record which side won.
    Incomparability,
    /// Discretized-integral inner products against the plain vector route.
    IntegralConsistency,
}

impl TargetKind {
    fn header(self) -> &'static str {
        match self {
            TargetKind::Inequality => "trial,dim,field,case,lhs,rhs,slack,scale,tightness,verdict",
            TargetKind::Equivalence => "trial,dim,field,margin_a,margin_b,verdict_a,verdict_b,agree",
            TargetKind::Dominance => "trial,dim,field,rhs_sharp,rhs_baseline,dominance_gap",
            TargetKind::Incomparability => {
                "trial,dim,field,direction,center_distance_sq,offset_reduced,separation"
            }
            TargetKind::IntegralConsistency => "trial,nodes,kind,inner_dev,norm_dev",
        }
    }
}

impl SweepTarget {
    pub fn all() -> &'static [SweepTarget] {
        &ALL_TARGETS
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepTarget::SchwarzDiscAbove => "schwarz-disc-above",
            SweepTarget::SchwarzDiscEqual => "schwarz-disc-equal",
            SweepTarget::SchwarzDiscBelow => "schwarz-disc-below",
            SweepTarget::SchwarzSegmentPos => "schwarz-segment-pos",
            SweepTarget::SchwarzSegmentZero => "schwarz-segment-zero",
            SweepTarget::SchwarzSegmentNeg => "schwarz-segment-neg",
            SweepTarget::SchwarzAdditive => "schwarz-additive",
            SweepTarget::TriangleDisc => "triangle-disc",
            SweepTarget::TriangleSegment => "triangle-segment",
            SweepTarget::GrussDisc => "gruss-disc",
            SweepTarget::GrussSegment => "gruss-segment",
            SweepTarget::BesselDiscChain => "bessel-disc-chain",
            SweepTarget::BesselDiscDefect => "bessel-disc-defect",
            SweepTarget::BesselSegmentChain => "bessel-segment-chain",
            SweepTarget::BesselSegmentDefect => "bessel-segment-defect",
            SweepTarget::GrussFamilyDisc => "gruss-family-disc",
            SweepTarget::GrussFamilySegment => "gruss-family-segment",
            SweepTarget::BaselineAdditive => "baseline-additive",
            SweepTarget::BaselineMultiplicative => "baseline-multiplicative",
            SweepTarget::BaselineAdditiveRatio => "baseline-additive-ratio",
            SweepTarget::BaselineAdditiveRefined => "baseline-additive-refined",
            SweepTarget::BesselBaselineResidual => "bessel-baseline-residual",
            SweepTarget::BesselBaselineMidpoint => "bessel-baseline-midpoint",
            SweepTarget::BesselBaselineMultiplicative => "bessel-baseline-multiplicative",
            SweepTarget::BesselBaselineAdditiveRatio => "bessel-baseline-additive-ratio",
            SweepTarget::EquivalenceSegment => "equivalence-segment",
            SweepTarget::EquivalenceFamily => "equivalence-family",
            SweepTarget::DominanceAdditive => "dominance-additive",
            SweepTarget::DominanceMultiplicative => "dominance-multiplicative",
            SweepTarget::Incomparability => "incomparability",
            SweepTarget::IntegralConsistency => "integral-consistency",
        }
    }

    pub fn csv_header(self) -> &'static str {
        self.kind().header()
    }

    pub fn kind(self) -> TargetKind {
        match self {
            SweepTarget::EquivalenceSegment | SweepTarget::EquivalenceFamily => {
                TargetKind::Equivalence
            }
            SweepTarget::DominanceAdditive | SweepTarget::DominanceMultiplicative => {
                TargetKind::Dominance
            }
            SweepTarget::Incomparability => TargetKind::Incomparability,
            SweepTarget::IntegralConsistency => TargetKind::IntegralConsistency,
            _ => TargetKind::Inequality,
        }
    }
}

impl fmt::Display for SweepTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SweepTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<SweepTarget, Error> {
        SweepTarget::all()
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::mismatch(format!("unknown sweep target '{s}'")))
    }
}

/// Sweep parameters. `jobs` selects the worker count: 1 runs sequentially,
/// 0 uses all cores, any other value a pool of that size (without the
/// `parallel` feature every value runs sequentially). Output bytes do not
/// depend on `jobs`.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub target: SweepTarget,
    pub trials: u64,
    pub seed: u64,
    pub dims: Vec<usize>,
    pub fields: Vec<Field>,
    pub jobs: usize,
    pub slack_fraction: f64,
    pub tolerance: Tolerance,
}

impl SweepConfig {
    pub fn new(target: SweepTarget) -> SweepConfig {
        SweepConfig {
            target,
            trials: 1000,
            seed: 0,
            dims: (1..=8).collect(),
            fields: vec![Field::Real, Field::Complex],
            jobs: 0,
            slack_fraction: 0.05,
            tolerance: Tolerance::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub target: SweepTarget,
    pub trials: u64,
    pub seed: u64,
    pub violations: u64,
    pub boundary: u64,
    /// Worst per-row slack in units of that row's tolerance band
    /// (violations sit below −1).
    pub min_slack_scaled: f64,
    /// FNV-1a 64-bit digest of the CSV bytes, for cheap determinism checks.
    pub digest: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
}

pub struct SweepOutcome {
    pub summary: SweepSummary,
    pub csv: String,
}

struct TrialOutput {
    line: String,
    violation: bool,
    boundary: bool,
    slack_scaled: f64,
    count_key: Option<&'static str>,
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, Error> {
    if config.dims.is_empty() {
        return Err(Error::mismatch("sweep needs at least one dimension"));
    }
    if config.dims.iter().any(|&d| d == 0) {
        return Err(Error::mismatch("sweep dimensions must be >= 1"));
    }
    if config.fields.is_empty() {
        return Err(Error::mismatch("sweep needs at least one field"));
    }
    if !(config.slack_fraction.is_finite() && (0.0..1.0).contains(&config.slack_fraction)) {
        return Err(Error::mismatch(
            "slack fraction must lie in [0, 1)",
        ));
    }

    let outputs = run_trials(config)?;
    let mut csv = String::from(config.target.csv_header());
    csv.push('\n');
    let mut violations = 0;
    let mut boundary = 0;
    let mut min_slack = f64::INFINITY;
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for out in &outputs {
        csv.push_str(&out.line);
        csv.push('\n');
        if out.violation {
            violations += 1;
        }
        if out.boundary {
            boundary += 1;
        }
        min_slack = min_slack.min(out.slack_scaled);
        if let Some(key) = out.count_key {
            *counts.entry(key.to_owned()).or_insert(0) += 1;
        }
    }
    let digest = format!("{:016x}", fnv1a64(csv.as_bytes()));
    Ok(SweepOutcome {
        summary: SweepSummary {
            target: config.target,
            trials: config.trials,
            seed: config.seed,
            violations,
            boundary,
            min_slack_scaled: min_slack,
            digest,
            counts,
        },
        csv,
    })
}

fn run_trials(config: &SweepConfig) -> Result<Vec<TrialOutput>, Error> {
    #[cfg(feature = "parallel")]
    if config.jobs != 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::mismatch(format!("worker pool: {e}")))?;
        return pool.install(|| {
            (0..config.trials)
                .into_par_iter()
                .map(|trial| run_one(config, trial))
                .collect::<Result<Vec<_>, Error>>()
        });
    }
    (0..config.trials).map(|trial| run_one(config, trial)).collect()
}

fn chain_extent(values: &[f64]) -> f64 {
    values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

fn ineq_line(
    trial: u64,
    dim: usize,
    field: Field,
    case: &str,
    lhs: f64,
    rhs: f64,
    slack: f64,
    scale: f64,
    tightness: f64,
    verdict: Verdict,
) -> String {
    format!(
        "{trial},{dim},{f},{case},{lhs:.16e},{rhs:.16e},{slack:.16e},{scale:.16e},{tightness:.16e},{verdict}",
        f = field.name()
    )
}

/// Row for a chain-style report: the slack is the tightest consecutive link,
/// so a violation anywhere along the chain is caught, not only at the ends.
fn report_output(
    trial: u64,
    dim: usize,
    field: Field,
    rep: &BoundReport,
    tol: &Tolerance,
) -> TrialOutput {
    let chain = rep.chain();
    let scale = chain_extent(&chain);
    let slack = rep.min_link_slack();
    let band = tol.band(scale);
    let verdict = classify(slack, band);
    TrialOutput {
        line: ineq_line(
            trial,
            dim,
            field,
            rep.case_tag.as_deref().unwrap_or("-"),
            rep.lhs,
            rep.rhs,
            slack,
            scale,
            rep.tightness.unwrap_or(f64::NAN),
            verdict,
        ),
        violation: verdict == Verdict::Fails,
        boundary: verdict == Verdict::Boundary,
        slack_scaled: slack / band,
        count_key: None,
    }
}

/// Row for a single comparison extracted from a report's intermediates.
fn pair_output(
    trial: u64,
    dim: usize,
    field: Field,
    case: &str,
    lhs: f64,
    rhs: f64,
    tol: &Tolerance,
) -> TrialOutput {
    let scale = lhs.abs().max(rhs.abs());
    let slack = rhs - lhs;
    let band = tol.band(scale);
    let verdict = classify(slack, band);
    let tightness = if rhs > 0.0 { (lhs / rhs).max(0.0) } else { f64::NAN };
    TrialOutput {
        line: ineq_line(trial, dim, field, case, lhs, rhs, slack, scale, tightness, verdict),
        violation: verdict == Verdict::Fails,
        boundary: verdict == Verdict::Boundary,
        slack_scaled: slack / band,
        count_key: None,
    }
}

fn equivalence_output(
    trial: u64,
    dim: usize,
    field: Field,
    a: HypothesisStatus,
    b: HypothesisStatus,
) -> TrialOutput {
    let boundary = a.verdict == Verdict::Boundary || b.verdict == Verdict::Boundary;
    let agree = a.verdict.satisfied() == b.verdict.satisfied();
    let violation = !agree && !boundary;
    TrialOutput {
        line: format!(
            "{trial},{dim},{f},{ma:.16e},{mb:.16e},{va},{vb},{agree}",
            f = field.name(),
            ma = a.margin,
            mb = b.margin,
            va = a.verdict,
            vb = b.verdict
        ),
        violation,
        boundary,
        slack_scaled: if violation { -2.0 } else { 2.0 },
        count_key: None,
    }
}

fn dominance_output(
    trial: u64,
    dim: usize,
    field: Field,
    rhs_sharp: f64,
    rhs_baseline: f64,
    tol: &Tolerance,
) -> TrialOutput {
    let gap = rhs_baseline - rhs_sharp;
    let scale = rhs_sharp.abs().max(rhs_baseline.abs());
    let band = tol.band(scale);
    TrialOutput {
        line: format!(
            "{trial},{dim},{f},{rhs_sharp:.16e},{rhs_baseline:.16e},{gap:.16e}",
            f = field.name()
        ),
        violation: gap < -band,
        boundary: gap.abs() <= band,
        slack_scaled: gap / band,
        count_key: None,
    }
}

struct IncompPoint {
    dim: usize,
    field: Field,
    dir_below: bool,
    center_distance_sq: f64,
    offset_reduced: f64,
    ok: bool,
}

/// Evaluate one incomparability trial: build the instance for the requested
/// direction, run both defect baselines through the real pipeline, and
/// compare their middle links.
fn incomparability_point(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    dir_below: bool,
    tol: &Tolerance,
) -> Result<IncompPoint, Error> {
    let (x, family, pairs) = if dir_below {
        gen::incomparability_center_below(rng, dim, field)
    } else {
        gen::incomparability_center_above(rng, dim, field)
    };
    let row_dim = family.dim();
    let mut reports = baseline_bessel(&x, &family, &pairs, tol, false)?;
    let midpoint = reports.swap_remove(1)?;
    let residual = reports.swap_remove(0)?;
    let center_distance_sq = residual
        .value("chain:center-distance-sq")
        .ok_or_else(|| Error::mismatch("residual baseline lacks its middle link"))?;
    let offset_reduced = midpoint
        .value("chain:offset-reduced")
        .ok_or_else(|| Error::mismatch("midpoint baseline lacks its middle link"))?;
    let band = tol.band(center_distance_sq.abs().max(offset_reduced.abs()));
    let sep = center_distance_sq - offset_reduced;
    let ok = if dir_below { sep < -band } else { sep > band };
    Ok(IncompPoint {
        dim: row_dim,
        field,
        dir_below,
        center_distance_sq,
        offset_reduced,
        ok,
    })
}

fn incomparability_output(trial: u64, p: &IncompPoint) -> TrialOutput {
    let direction = if p.dir_below {
        "center-distance-below"
    } else {
        "center-distance-above"
    };
    TrialOutput {
        line: format!(
            "{trial},{dim},{f},{direction},{cd:.16e},{or:.16e},{sep:.16e}",
            dim = p.dim,
            f = p.field.name(),
            cd = p.center_distance_sq,
            or = p.offset_reduced,
            sep = p.center_distance_sq - p.offset_reduced
        ),
        violation: !p.ok,
        boundary: false,
        slack_scaled: if p.ok { 2.0 } else { -2.0 },
        count_key: if p.ok { Some(direction) } else { None },
    }
}

fn take_entry(
    entries: Vec<Result<BoundReport, Error>>,
    idx: usize,
) -> Result<BoundReport, Error> {
    entries
        .into_iter()
        .nth(idx)
        .expect("baseline evaluators return a fixed number of entries")
}

fn run_one(config: &SweepConfig, trial: u64) -> Result<TrialOutput, Error> {
    let mut rng = trial_rng(config.seed, trial);
    let dim = config.dims[rng.gen_range(0..config.dims.len())];
    let field = config.fields[rng.gen_range(0..config.fields.len())];
    let tol = &config.tolerance;
    let slack = config.slack_fraction;

    match config.target {
        SweepTarget::SchwarzDiscAbove
        | SweepTarget::SchwarzDiscEqual
        | SweepTarget::SchwarzDiscBelow => {
            let case = match config.target {
                SweepTarget::SchwarzDiscAbove => DiscCase::NormAboveRadius,
                SweepTarget::SchwarzDiscEqual => DiscCase::NormEqualRadius,
                _ => DiscCase::NormBelowRadius,
            };
            let (x, disc) = gen::disc_instance(&mut rng, dim, field, case, slack);
            let rep = reverse_schwarz_disc(&x, &disc, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::SchwarzSegmentPos
        | SweepTarget::SchwarzSegmentZero
        | SweepTarget::SchwarzSegmentNeg => {
            let regime = match config.target {
                SweepTarget::SchwarzSegmentPos => SegmentRegime::RePositive,
                SweepTarget::SchwarzSegmentZero => SegmentRegime::ReZero,
                _ => SegmentRegime::ReNegative,
            };
            let (x, seg) = gen::segment_instance(&mut rng, dim, field, regime, slack);
            let rep = reverse_schwarz_segment(&x, &seg, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::SchwarzAdditive => {
            let (x, seg) =
                gen::segment_instance(&mut rng, dim, field, SegmentRegime::RePositive, slack);
            let rep = additive_reverse_segment(&x, &seg, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::TriangleDisc => {
            let (x, disc) = gen::triangle_disc_instance(&mut rng, dim, field, slack);
            let rep = reverse_triangle_disc(&x, &disc, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::TriangleSegment => {
            let (x, y, m, big_m) = gen::triangle_segment_instance(&mut rng, dim, field, slack);
            let rep = reverse_triangle_segment(&x, &y, m, big_m, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::GrussDisc => {
            let (x, y, e, r1, r2) = gen::gruss_disc_instance(&mut rng, dim, field, slack);
            let rep = gruss_disc(&x, &y, &e, r1, r2, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::GrussSegment => {
            let (x, y, e, x_pair, y_pair) =
                gen::gruss_segment_instance(&mut rng, dim, field, slack);
            let rep = gruss_segment(&x, &y, &e, x_pair, y_pair, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::BesselDiscChain | SweepTarget::BesselDiscDefect => {
            let (x, family, lambda, r) = gen::bessel_disc_instance(&mut rng, dim, field, slack);
            let rep = reverse_bessel_disc(&x, &family, &lambda, r, tol, false)?;
            if config.target == SweepTarget::BesselDiscChain {
                Ok(report_output(trial, dim, field, &rep, tol))
            } else {
                let lhs = rep
                    .value("defect")
                    .ok_or_else(|| Error::mismatch("report lacks defect"))?;
                let rhs = rep
                    .value("defect-bound")
                    .ok_or_else(|| Error::mismatch("report lacks defect-bound"))?;
                Ok(pair_output(trial, dim, field, "defect", lhs, rhs, tol))
            }
        }
        SweepTarget::BesselSegmentChain | SweepTarget::BesselSegmentDefect => {
            let (x, family, pairs) = gen::bessel_segment_instance(&mut rng, dim, field, slack);
            let rep = reverse_bessel_segment(&x, &family, &pairs, tol, false)?;
            if config.target == SweepTarget::BesselSegmentChain {
                Ok(report_output(trial, dim, field, &rep, tol))
            } else {
                let lhs = rep
                    .value("defect")
                    .ok_or_else(|| Error::mismatch("report lacks defect"))?;
                let rhs = rep
                    .value("defect-bound")
                    .ok_or_else(|| Error::mismatch("report lacks defect-bound"))?;
                Ok(pair_output(trial, dim, field, "defect", lhs, rhs, tol))
            }
        }
        SweepTarget::GrussFamilyDisc => {
            let (x, y, family, xl, xr, yl, yr) =
                gen::gruss_family_disc_instance(&mut rng, dim, field, slack);
            let rep = gruss_family_disc(&x, &y, &family, &xl, xr, &yl, yr, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::GrussFamilySegment => {
            let (x, y, family, xp, yp) =
                gen::gruss_family_segment_instance(&mut rng, dim, field, slack);
            let rep = gruss_family_segment(&x, &y, &family, &xp, &yp, tol, false)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::BaselineAdditive
        | SweepTarget::BaselineMultiplicative
        | SweepTarget::BaselineAdditiveRatio
        | SweepTarget::BaselineAdditiveRefined => {
            let idx = match config.target {
                SweepTarget::BaselineAdditive => 0,
                SweepTarget::BaselineMultiplicative => 1,
                SweepTarget::BaselineAdditiveRatio => 2,
                _ => 3,
            };
            let (x, seg) =
                gen::segment_instance(&mut rng, dim, field, SegmentRegime::RePositive, slack);
            let rep = take_entry(baseline_bounds(&x, &seg, tol, false)?, idx)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::BesselBaselineResidual
        | SweepTarget::BesselBaselineMidpoint
        | SweepTarget::BesselBaselineMultiplicative
        | SweepTarget::BesselBaselineAdditiveRatio => {
            let idx = match config.target {
                SweepTarget::BesselBaselineResidual => 0,
                SweepTarget::BesselBaselineMidpoint => 1,
                SweepTarget::BesselBaselineMultiplicative => 2,
                _ => 3,
            };
            let (x, family, pairs) = gen::bessel_segment_instance(&mut rng, dim, field, slack);
            let rep = take_entry(baseline_bessel(&x, &family, &pairs, tol, false)?, idx)?;
            Ok(report_output(trial, dim, field, &rep, tol))
        }
        SweepTarget::EquivalenceSegment => {
            let regime = [
                SegmentRegime::RePositive,
                SegmentRegime::ReZero,
                SegmentRegime::ReNegative,
            ][rng.gen_range(0..3)];
            let factor = loop {
                let u = gen::uniform(&mut rng, 0.0, 1.8);
                if (u - 1.0).abs() > 0.05 {
                    break u;
                }
            };
            let (x, seg) = gen::segment_instance_at(&mut rng, dim, field, regime, factor);
            let a = check_segment_re(&x, &seg, tol)?;
            let b = check_segment_norm(&x, &seg, tol)?;
            Ok(equivalence_output(trial, dim, field, a, b))
        }
        SweepTarget::EquivalenceFamily => {
            let factor = loop {
                let u = gen::uniform(&mut rng, 0.0, 1.8);
                if (u - 1.0).abs() > 0.05 {
                    break u;
                }
            };
            let (x, family, pairs) = gen::family_instance_at(&mut rng, dim, field, factor);
            let a = check_family_re(&x, &family, &pairs, tol)?;
            let b = check_family_norm(&x, &family, &pairs, tol)?;
            Ok(equivalence_output(trial, dim, field, a, b))
        }
        SweepTarget::DominanceAdditive => {
            let (x, seg) =
                gen::segment_instance(&mut rng, dim, field, SegmentRegime::RePositive, slack);
            let sharp = additive_reverse_segment(&x, &seg, tol, false)?;
            let baseline = take_entry(baseline_bounds(&x, &seg, tol, false)?, 2)?;
            Ok(dominance_output(trial, dim, field, sharp.rhs, baseline.rhs, tol))
        }
        SweepTarget::DominanceMultiplicative => {
            let (x, seg) =
                gen::segment_instance(&mut rng, dim, field, SegmentRegime::RePositive, slack);
            let sharp = reverse_schwarz_segment(&x, &seg, tol, false)?;
            let baseline = take_entry(baseline_bounds(&x, &seg, tol, false)?, 1)?;
            Ok(dominance_output(trial, dim, field, sharp.rhs, baseline.rhs, tol))
        }
        SweepTarget::Incomparability => {
            let dir_below = trial % 2 == 0;
            let p = incomparability_point(&mut rng, dim, field, dir_below, tol)?;
            Ok(incomparability_output(trial, &p))
        }
        SweepTarget::IntegralConsistency => {
            let (measure, kind) = gen::random_measure(&mut rng);
            let f = gen::random_sampled(&mut rng, measure.len(), field);
            let g = gen::random_sampled(&mut rng, measure.len(), field);
            let direct = weighted_inner(&f, &g, &measure)?;
            let wf = to_weighted_vector(&f, &measure)?;
            let wg = to_weighted_vector(&g, &measure)?;
            let mapped = inner(&wf, &wg)?;
            let inner_dev = (direct.re() - mapped.re())
                .abs()
                .max((direct.im() - mapped.im()).abs());
            let norm_dev = (weighted_norm_sq(&f, &measure)? - norm_sq(&wf)).abs();
            let dev = inner_dev.max(norm_dev);
            Ok(TrialOutput {
                line: format!(
                    "{trial},{n},{kind},{inner_dev:.16e},{norm_dev:.16e}",
                    n = measure.len(),
                    kind = kind.tag()
                ),
                violation: dev > CONSISTENCY_TOL,
                boundary: false,
                slack_scaled: (CONSISTENCY_TOL - dev) / CONSISTENCY_TOL,
                count_key: None,
            })
        }
    }
}

/// Middle-link values of the two defect baselines at witnesses realizing
/// each strict ordering, showing neither bound dominates the other.
#[derive(Clone, Debug, Serialize)]
pub struct IncomparabilityWitness {
    pub center_below_trial: u64,
    /// `(center_distance_sq, offset_reduced)` with the first strictly
    /// smaller.
    pub center_below: (f64, f64),
    pub center_above_trial: u64,
    /// `(center_distance_sq, offset_reduced)` with the first strictly
    /// larger.
    pub center_above: (f64, f64),
    pub trials_used: u64,
}

/// Search trial streams until both strict orderings of the two defect
/// baselines' middle links have been realized.
pub fn incomparability_search(
    seed: u64,
    max_trials: u64,
    tol: &Tolerance,
) -> Result<IncomparabilityWitness, Error> {
    let dims: Vec<usize> = (1..=8).collect();
    let fields = [Field::Real, Field::Complex];
    let mut below: Option<(u64, f64, f64)> = None;
    let mut above: Option<(u64, f64, f64)> = None;
    for trial in 0..max_trials {
        let mut rng = trial_rng(seed, trial);
        let dim = dims[rng.gen_range(0..dims.len())];
        let field = fields[rng.gen_range(0..fields.len())];
        let dir_below = trial % 2 == 0;
        let p = incomparability_point(&mut rng, dim, field, dir_below, tol)?;
        if p.ok {
            let slot = (trial, p.center_distance_sq, p.offset_reduced);
            if dir_below {
                below.get_or_insert(slot);
            } else {
                above.get_or_insert(slot);
            }
        }
        if let (Some(b), Some(a)) = (below, above) {
            return Ok(IncomparabilityWitness {
                center_below_trial: b.0,
                center_below: (b.1, b.2),
                center_above_trial: a.0,
                center_above: (a.1, a.2),
                trials_used: trial + 1,
            });
        }
    }
    Err(Error::NotFound { trials: max_trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(target: SweepTarget) -> SweepConfig {
        SweepConfig {
            trials: 12,
            seed: 7,
            dims: vec![1, 2, 3, 4],
            jobs: 1,
            ..SweepConfig::new(target)
        }
    }

    #[test]
    fn every_target_runs_clean_on_admissible_instances() {
        for &target in SweepTarget::all() {
            let out = run_sweep(&small_config(target)).unwrap();
            assert_eq!(
                out.summary.violations, 0,
                "target {target} reported violations:\n{}",
                out.csv
            );
            assert_eq!(out.csv.lines().count(), 13, "header plus one row per trial");
            assert!(out.csv.starts_with(target.csv_header()));
        }
    }

    #[test]
    fn sweeps_are_deterministic_for_a_seed() {
        let a = run_sweep(&small_config(SweepTarget::SchwarzDiscAbove)).unwrap();
        let b = run_sweep(&small_config(SweepTarget::SchwarzDiscAbove)).unwrap();
        assert_eq!(a.csv, b.csv);
        assert_eq!(a.summary.digest, b.summary.digest);

        let mut other = small_config(SweepTarget::SchwarzDiscAbove);
        other.seed = 8;
        let c = run_sweep(&other).unwrap();
        assert_ne!(a.csv, c.csv);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn worker_count_does_not_change_output_bytes() {
        let base = small_config(SweepTarget::BesselSegmentChain);
        let sequential = run_sweep(&base).unwrap();
        for jobs in [0, 2, 3] {
            let parallel = run_sweep(&SweepConfig { jobs, ..base.clone() }).unwrap();
            assert_eq!(sequential.csv, parallel.csv, "jobs={jobs}");
            assert_eq!(sequential.summary.digest, parallel.summary.digest);
        }
    }

    #[test]
    fn incomparability_finds_both_orders() {
        let mut config = small_config(SweepTarget::Incomparability);
        config.trials = 20;
        config.dims = (1..=8).collect();
        let out = run_sweep(&config).unwrap();
        assert_eq!(out.summary.violations, 0);
        assert!(out.summary.counts["center-distance-below"] > 0);
        assert!(out.summary.counts["center-distance-above"] > 0);

        let witness = incomparability_search(3, 200, &Tolerance::default()).unwrap();
        assert!(witness.center_below.0 < witness.center_below.1);
        assert!(witness.center_above.0 > witness.center_above.1);
    }

    #[test]
    fn fnv_reference_vectors() {
        assert_eq!(fnv1a64(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64(b"a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn target_names_round_trip() {
        for &target in SweepTarget::all() {
            let name = target.name();
            assert_eq!(name.parse::<SweepTarget>().unwrap(), target);
            let json = serde_json::to_string(&target).unwrap();
            assert_eq!(json, format!("\"{name}\""));
        }
        assert!("no-such-target".parse::<SweepTarget>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut config = small_config(SweepTarget::GrussDisc);
        config.dims.clear();
        assert!(run_sweep(&config).is_err());
        let mut config = small_config(SweepTarget::GrussDisc);
        config.slack_fraction = 1.5;
        assert!(run_sweep(&config).is_err());
    }
}
