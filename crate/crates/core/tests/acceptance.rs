//! Acceptance gate: ten end-to-end criteria the library must satisfy, one
//! test — and one pass/fail line — per criterion. Run with `--nocapture`
//! to see the PASS summaries; the test names themselves carry the verdicts
//! either way.

use ipx_core::bessel::reverse_bessel_segment;
use ipx_core::constraints::SegmentConstraint;
use ipx_core::harness::gen;
use ipx_core::harness::rng::trial_rng;
use ipx_core::harness::sharpness::{sharpness_disc, sharpness_segment};
use ipx_core::harness::sweep::{
    incomparability_search, run_sweep, SweepConfig, SweepTarget, TargetKind,
};
use ipx_core::integral::{cassel, integral_gruss, make_measure, QuadratureKind, SampledFunction};
use ipx_core::schwarz::{additive_reverse_segment, baseline_bounds, reverse_schwarz_segment};
use ipx_core::{Field, Scalar, Tolerance, Vector};
use std::time::Instant;

fn config(target: SweepTarget, trials: u64, seed: u64) -> SweepConfig {
    SweepConfig {
        target,
        trials,
        seed,
        dims: (1..=8).collect(),
        fields: vec![Field::Real, Field::Complex],
        jobs: 0,
        slack_fraction: 0.05,
        tolerance: Tolerance::default(),
    }
}

#[test]
fn criterion_01_inequality_sweeps_have_zero_violations() {
    let targets: Vec<SweepTarget> = SweepTarget::all()
        .iter()
        .copied()
        .filter(|t| t.kind() == TargetKind::Inequality)
        .collect();
    assert_eq!(targets.len(), 25, "inequality target census");
    let start = Instant::now();
    for (i, &target) in targets.iter().enumerate() {
        let out = run_sweep(&config(target, 100_000, 9_100 + i as u64)).expect("sweep runs");
        assert_eq!(
            out.summary.violations, 0,
            "target {target}: slack below -1e-9*scale"
        );
        assert_eq!(out.summary.trials, 100_000);
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "25 x 100000 trials took {secs:.1}s (budget 60s)");
    println!(
        "PASS criterion 1: 25 inequality targets x 100000 trials (dims 1-8, \
         real+complex) -> 0 violations beyond -1e-9*scale in {secs:.1}s"
    );
}

#[test]
fn criterion_02_re_and_norm_forms_agree_on_unconstrained_instances() {
    for (target, seed) in [
        (SweepTarget::EquivalenceSegment, 210),
        (SweepTarget::EquivalenceFamily, 220),
    ] {
        let out = run_sweep(&config(target, 100_000, seed)).expect("sweep runs");
        assert_eq!(
            out.summary.violations, 0,
            "{target}: verdicts disagreed with both margins outside the band"
        );
    }
    println!(
        "PASS criterion 2: bilinear-form and ball-form verdicts agree outside \
         the tolerance band on 100000 unconstrained instances (segment and \
         family forms)"
    );
}

#[test]
fn criterion_03_ball_bound_sharpness_curve_matches_closed_form() {
    let epsilons = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
    let curve = sharpness_disc(&epsilons, &Tolerance::default()).expect("curve evaluates");
    for (i, &eps) in epsilons.iter().enumerate() {
        let expected = 1.0 / (1.0 + eps);
        assert!(
            (curve.ratios[i] - expected).abs() <= 1e-12,
            "eps {eps:e}: ratio {} vs closed form {expected}",
            curve.ratios[i]
        );
    }
    assert!(curve.ratios[5] > 0.999999, "ratio at eps=1e-6");
    assert!(
        curve.pipeline_max_dev < 1e-9,
        "evaluator pipeline deviated {:.3e} from the closed algebra",
        curve.pipeline_max_dev
    );
    println!(
        "PASS criterion 3: ball-constrained tightness ratios match 1/(1+eps) \
         to 1e-12 for eps 1e-1..1e-6; ratio(1e-6) > 0.999999"
    );
}

#[test]
fn criterion_04_segment_bound_sharpness_curve_matches_closed_form() {
    let epsilons = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
    let curve = sharpness_segment(&epsilons, &Tolerance::default()).expect("curve evaluates");
    for (i, &eps) in epsilons.iter().enumerate() {
        let expected = 1.0 - eps * eps;
        assert!(
            (curve.ratios[i] - expected).abs() <= 1e-12,
            "eps {eps:e}: ratio {} vs closed form {expected}",
            curve.ratios[i]
        );
    }
    assert!(curve.ratios[2] > 0.999999 - 1e-12, "ratio at eps=1e-3");
    assert!(
        curve.pipeline_max_dev < 1e-9,
        "evaluator pipeline deviated {:.3e} from the closed algebra",
        curve.pipeline_max_dev
    );
    println!(
        "PASS criterion 4: segment-constrained tightness ratios match 1-eps^2 \
         to 1e-12 for eps 1e-1..1e-6; ratio(1e-3) > 0.999999"
    );
}

#[test]
fn criterion_05_sharp_bounds_dominate_their_baselines() {
    for (target, seed) in [
        (SweepTarget::DominanceAdditive, 510),
        (SweepTarget::DominanceMultiplicative, 520),
    ] {
        let out = run_sweep(&config(target, 100_000, seed)).expect("sweep runs");
        assert_eq!(
            out.summary.violations, 0,
            "{target}: baseline fell below the sharp bound beyond the band"
        );
    }

    // A fixed complex instance where both dominations are strict: the
    // endpoint product Gamma*conj(gamma) = 1.88 - 1.0i has nonzero
    // imaginary part, so |product| exceeds its real part.
    let tol = Tolerance::default();
    let gamma = Scalar::complex(1.0, 0.3);
    let big_gamma = Scalar::complex(2.0, -0.4);
    let y = Vector::complex(&[(1.0, 0.0), (0.0, 0.0)]).expect("finite coords");
    let seg = SegmentConstraint::new(gamma, big_gamma, y).expect("valid segment");
    let x = Vector::complex(&[(1.6, -0.1), (0.15, -0.1)]).expect("finite coords");

    let sharp_additive = additive_reverse_segment(&x, &seg, &tol, false).expect("in regime");
    let sharp_multiplicative = reverse_schwarz_segment(&x, &seg, &tol, false).expect("in regime");
    let baselines = baseline_bounds(&x, &seg, &tol, false).expect("instance is admissible");
    let base_multiplicative = baselines[1].as_ref().expect("re-positive regime");
    let base_additive_ratio = baselines[2].as_ref().expect("re-positive regime");

    let additive_gap = base_additive_ratio.rhs - sharp_additive.rhs;
    let multiplicative_gap = base_multiplicative.rhs - sharp_multiplicative.rhs;
    assert!(
        additive_gap > 1e-6,
        "additive domination not strict: gap {additive_gap:e}"
    );
    assert!(
        multiplicative_gap > 1e-6,
        "multiplicative domination not strict: gap {multiplicative_gap:e}"
    );
    println!(
        "PASS criterion 5: sharp additive and multiplicative bounds dominate \
         their baselines on 100000 re-positive trials each; strict complex \
         witness gaps {additive_gap:.3e} and {multiplicative_gap:.3e}"
    );
}

#[test]
fn criterion_06_residual_diagnostics_are_incomparable() {
    let witness =
        incomparability_search(600, 10_000, &Tolerance::default()).expect("both orders found");
    assert!(witness.trials_used <= 10_000);
    let (below_a, below_b) = witness.center_below;
    let (above_a, above_b) = witness.center_above;
    assert!(below_a < below_b, "first ordering is strict");
    assert!(above_a > above_b, "second ordering is strict");
    println!(
        "PASS criterion 6: residual-versus-offset diagnostics admit both strict \
         orderings within {} of 10000 trials",
        witness.trials_used
    );
}

#[test]
fn criterion_07_delegated_evaluation_paths_agree() {
    let tol = Tolerance::default();
    let mut max_family_dev: f64 = 0.0;
    for trial in 0..400u64 {
        let mut rng = trial_rng(707, trial);
        let dim = 1 + (trial % 8) as usize;
        let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
        let (x, family, pairs) = gen::bessel_segment_instance(&mut rng, dim, field, 0.05);
        let rep = reverse_bessel_segment(&x, &family, &pairs, &tol, false).expect("admissible");
        let dev = rep.value("path-deviation").expect("diagnostic present");
        max_family_dev = max_family_dev.max(dev);
    }
    assert!(
        max_family_dev <= 1e-12,
        "family-segment route deviated {max_family_dev:e} from its delegated ball route"
    );

    let mut max_ratio_dev: f64 = 0.0;
    for trial in 0..400u64 {
        let mut rng = trial_rng(708, trial);
        let (measure, _) = gen::random_measure(&mut rng);
        let n = measure.len();
        let m = gen::uniform(&mut rng, 0.2, 1.0);
        let big_m = m + gen::uniform(&mut rng, 0.2, 2.0);
        let mut g_values = Vec::with_capacity(n);
        let mut f_values = Vec::with_capacity(n);
        for _ in 0..n {
            let g = gen::uniform(&mut rng, 0.3, 2.0);
            let ratio = m + (big_m - m) * gen::uniform(&mut rng, 0.05, 0.95);
            g_values.push(g);
            f_values.push(ratio * g);
        }
        let f = SampledFunction::real(&f_values).expect("finite values");
        let g = SampledFunction::real(&g_values).expect("finite values");
        let rep = cassel(&f, &g, m, big_m, &measure, &tol, false).expect("admissible");
        let dev = rep.value("path-deviation").expect("diagnostic present");
        max_ratio_dev = max_ratio_dev.max(dev);
    }
    assert!(
        max_ratio_dev <= 1e-12,
        "ratio-band route deviated {max_ratio_dev:e} from its segment route"
    );
    println!(
        "PASS criterion 7: delegated evaluation paths agree to 1e-12 on 400 \
         random instances each (family-segment vs ball: {max_family_dev:.3e}; \
         ratio-band vs segment: {max_ratio_dev:.3e})"
    );
}

#[test]
fn criterion_08_quadrature_instances_hit_reference_values() {
    let tol = Tolerance::default();

    // f(s) = s against g = 1 on [1, 2] with ratio band [1, 2]:
    // lhs = ∫s² = 7/3, rhs = (9/8)·(∫s)² = 81/32.
    let measure = make_measure(QuadratureKind::GaussLegendre, 1.0, 2.0, 16, |_| 1.0)
        .expect("valid measure");
    let f = SampledFunction::from_fn(&measure, |s| s).expect("finite samples");
    let g = SampledFunction::from_fn(&measure, |_| 1.0).expect("finite samples");
    let rep = cassel(&f, &g, 1.0, 2.0, &measure, &tol, false).expect("admissible");
    assert!(rep.verdict.satisfied());
    assert!(
        (rep.lhs - 7.0 / 3.0).abs() <= 1e-10,
        "lhs {} vs 7/3",
        rep.lhs
    );
    assert!(
        (rep.rhs - 81.0 / 32.0).abs() <= 1e-10,
        "rhs {} vs 81/32",
        rep.rhs
    );

    // f = 1 + 0.2s, g = 1 - 0.2s against h = 1 on [0, 1] with bands
    // [1, 1.2] and [0.8, 1]: lhs = |∫fg - ∫f·∫g| = 1/300 and
    // rhs = (0.2·0.2/4)·(1.1·0.9)/sqrt(1.2·0.8).
    let measure = make_measure(QuadratureKind::GaussLegendre, 0.0, 1.0, 16, |_| 1.0)
        .expect("valid measure");
    let f = SampledFunction::from_fn(&measure, |s| 1.0 + 0.2 * s).expect("finite samples");
    let g = SampledFunction::from_fn(&measure, |s| 1.0 - 0.2 * s).expect("finite samples");
    let h = SampledFunction::from_fn(&measure, |_| 1.0).expect("finite samples");
    let rep = integral_gruss(
        &f,
        &g,
        &h,
        (Scalar::real(1.0), Scalar::real(1.2)),
        (Scalar::real(0.8), Scalar::real(1.0)),
        &measure,
        false,
        &tol,
        false,
    )
    .expect("admissible");
    assert!(rep.verdict.satisfied());
    assert!(
        (rep.lhs - 1.0 / 300.0).abs() <= 1e-10,
        "lhs {} vs 1/300",
        rep.lhs
    );
    assert!(
        (rep.rhs - 0.010104145188980609).abs() <= 1e-10,
        "rhs {} vs frozen reference",
        rep.rhs
    );
    println!(
        "PASS criterion 8: 16-node quadrature instances reproduce the frozen \
         reference values (7/3, 81/32, 1/300, 1.0104145188980609e-2) to 1e-10"
    );
}

#[test]
fn criterion_09_weighted_inner_products_match_plain_vectors() {
    let out = run_sweep(&config(SweepTarget::IntegralConsistency, 1_000, 900)).expect("sweep runs");
    assert_eq!(
        out.summary.violations, 0,
        "a weighted inner product strayed more than 1e-12 from the vector route"
    );
    println!(
        "PASS criterion 9: discretized weighted inner products match plain \
         inner products on weight-mapped vectors to 1e-12 across 1000 random \
         measures"
    );
}

#[test]
fn criterion_10_sweep_output_is_deterministic() {
    let targets = [
        SweepTarget::SchwarzSegmentPos,
        SweepTarget::BesselBaselineResidual,
        SweepTarget::GrussFamilySegment,
        SweepTarget::IntegralConsistency,
    ];
    for target in targets {
        let mut base = config(target, 2_000, 1_000);
        base.jobs = 1;
        let first = run_sweep(&base).expect("sweep runs");
        let second = run_sweep(&base).expect("sweep runs");
        assert_eq!(first.csv, second.csv, "{target}: rerun changed CSV bytes");
        assert_eq!(first.summary.digest, second.summary.digest);

        #[cfg(feature = "parallel")]
        for jobs in [0, 2, 3] {
            let mut cfg = config(target, 2_000, 1_000);
            cfg.jobs = jobs;
            let parallel = run_sweep(&cfg).expect("sweep runs");
            assert_eq!(
                first.csv, parallel.csv,
                "{target}: jobs={jobs} changed CSV bytes"
            );
            assert_eq!(first.summary.digest, parallel.summary.digest);
        }
    }
    println!(
        "PASS criterion 10: sweep CSV bytes and digests are identical across \
         reruns and worker counts for 4 representative targets"
    );
}
