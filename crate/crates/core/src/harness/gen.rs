//! Random admissible instances for the sweep harness.
//!
//! Every generator draws from an explicit RNG and produces instances that
//! satisfy their evaluator's hypotheses with margin: ball and segment
//! memberships are placed at a fraction of the admissible radius controlled
//! by a `slack` parameter, regimes are set up with endpoint products well
//! away from the classification band, and orthonormal families come out of
//! a two-pass Gram–Schmidt whose deviation is far below the validation
//! tolerance. A sweep failure therefore implicates the inequality under
//! test, not the instance.

use crate::bessel::PairSequence;
use crate::constraints::{DiscCase, DiscConstraint, SegmentConstraint, SegmentRegime};
use crate::integral::{make_measure, QuadratureKind, SampledFunction, WeightedMeasure};
use crate::scalar::{Field, Scalar};
use crate::vector::{inner_unchecked, norm, OrthonormalFamily, Vector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Scalar with modulus in `[lo_abs, hi_abs)`: random sign when real, random
/// phase when complex.
pub fn random_scalar(rng: &mut ChaCha8Rng, field: Field, lo_abs: f64, hi_abs: f64) -> Scalar {
    let m = uniform(rng, lo_abs, hi_abs);
    match field {
        Field::Real => Scalar::real(if rng.gen_bool(0.5) { m } else { -m }),
        Field::Complex => {
            let theta = uniform(rng, 0.0, std::f64::consts::TAU);
            Scalar::complex(m * theta.cos(), m * theta.sin())
        }
    }
}

/// Vector with coordinates drawn uniformly from `[-1, 1)` (independently
/// for real and imaginary parts).
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize, field: Field) -> Vector {
    let coords = (0..dim)
        .map(|_| match field {
            Field::Real => Scalar::real(uniform(rng, -1.0, 1.0)),
            Field::Complex => {
                Scalar::complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0))
            }
        })
        .collect();
    Vector::new(coords).expect("random coordinates are finite")
}

pub fn random_unit(rng: &mut ChaCha8Rng, dim: usize, field: Field) -> Vector {
    loop {
        let v = random_vector(rng, dim, field);
        let n = norm(&v);
        if n > 0.2 {
            return v.scaled_re(1.0 / n);
        }
    }
}

/// Vector of the given length in a random direction.
pub fn random_offset(rng: &mut ChaCha8Rng, dim: usize, field: Field, length: f64) -> Vector {
    random_unit(rng, dim, field).scaled_re(length)
}

/// Ball constraint of the requested center-versus-radius case, with `x`
/// inside the ball at distance at most `(1 − slack)·r` from the center.
pub fn disc_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    case: DiscCase,
    slack: f64,
) -> (Vector, DiscConstraint) {
    let a = random_unit(rng, dim, field).scaled_re(uniform(rng, 0.7, 1.8));
    let na = norm(&a);
    let r = match case {
        DiscCase::NormAboveRadius => na * uniform(rng, 0.25, 0.8),
        DiscCase::NormEqualRadius => na,
        DiscCase::NormBelowRadius => na * uniform(rng, 1.25, 2.2),
    };
    let off_len = r * uniform(rng, 0.0, 1.0 - slack);
    let x = a.add(&random_offset(rng, dim, field, off_len));
    let disc = DiscConstraint::new(a, r).expect("radius is positive");
    (x, disc)
}

/// Ball constraint whose center norm strictly dominates the radius, as the
/// reverse triangle bound requires.
pub fn triangle_disc_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, DiscConstraint) {
    let a = random_unit(rng, dim, field).scaled_re(uniform(rng, 0.8, 1.8));
    let r = norm(&a) * uniform(rng, 0.2, 0.7);
    let off_len = r * uniform(rng, 0.0, 1.0 - slack);
    let x = a.add(&random_offset(rng, dim, field, off_len));
    let disc = DiscConstraint::new(a, r).expect("radius is positive");
    (x, disc)
}

/// Endpoint pair of the requested regime. The zero-regime pairs make the
/// endpoint product vanish exactly in floating point: a zero lower endpoint
/// over the reals, and `upper = i·lower` scaled by a power of two over the
/// complexes (the two products in the real part then cancel bit for bit).
pub fn segment_endpoints(
    rng: &mut ChaCha8Rng,
    field: Field,
    regime: SegmentRegime,
) -> (Scalar, Scalar) {
    match (regime, field) {
        (SegmentRegime::RePositive, Field::Real) => {
            let lo = random_scalar(rng, Field::Real, 0.4, 1.4);
            let hi = lo.scale(uniform(rng, 1.4, 3.2));
            (lo, hi)
        }
        (SegmentRegime::RePositive, Field::Complex) => {
            let lo = random_scalar(rng, Field::Complex, 0.4, 1.4);
            let rho = loop {
                let rho = Scalar::complex(uniform(rng, 0.5, 2.5), uniform(rng, -1.2, 1.2));
                if (rho - Scalar::one(Field::Complex)).abs() > 0.3 {
                    break rho;
                }
            };
            (lo, rho * lo)
        }
        (SegmentRegime::ReZero, Field::Real) => {
            (Scalar::real(0.0), random_scalar(rng, Field::Real, 0.5, 1.5))
        }
        (SegmentRegime::ReZero, Field::Complex) => {
            let lo = random_scalar(rng, Field::Complex, 0.4, 1.4);
            let f = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
            (lo, Scalar::complex(-lo.im() * f, lo.re() * f))
        }
        (SegmentRegime::ReNegative, Field::Real) => {
            let lo = random_scalar(rng, Field::Real, 0.4, 1.4);
            let hi = lo.scale(-uniform(rng, 0.5, 2.5));
            (lo, hi)
        }
        (SegmentRegime::ReNegative, Field::Complex) => {
            let lo = random_scalar(rng, Field::Complex, 0.4, 1.4);
            let rho = Scalar::complex(uniform(rng, -2.5, -0.5), uniform(rng, -1.0, 1.0));
            (lo, rho * lo)
        }
    }
}

/// Segment constraint of the requested regime with `x` placed at
/// `factor` times the equivalent ball's radius from its center. `factor`
/// below 1 gives an admissible instance, above 1 an inadmissible one.
pub fn segment_instance_at(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    regime: SegmentRegime,
    factor: f64,
) -> (Vector, SegmentConstraint) {
    let y = random_unit(rng, dim, field).scaled_re(uniform(rng, 0.6, 1.7));
    let (lo, hi) = segment_endpoints(rng, field, regime);
    let seg = SegmentConstraint::new(lo, hi, y).expect("reference is nonzero");
    let x = seg.ball_center().add(&random_offset(
        rng,
        dim,
        field,
        seg.ball_radius() * factor,
    ));
    (x, seg)
}

/// Admissible segment instance with membership slack.
pub fn segment_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    regime: SegmentRegime,
    slack: f64,
) -> (Vector, SegmentConstraint) {
    let factor = uniform(rng, 0.0, 1.0 - slack);
    segment_instance_at(rng, dim, field, regime, factor)
}

/// Real bilinear segment instance `0 < m <= M` for the reverse triangle
/// bound; returns `(x, y, m, M)`.
pub fn triangle_segment_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, Vector, f64, f64) {
    let m = uniform(rng, 0.3, 1.0);
    let big_m = m * uniform(rng, 1.2, 3.0);
    let y = random_unit(rng, dim, field).scaled_re(uniform(rng, 0.6, 1.7));
    let seg = SegmentConstraint::real(m, big_m, y.clone()).expect("reference is nonzero");
    let off_len = seg.ball_radius() * uniform(rng, 0.0, 1.0 - slack);
    let x = seg.ball_center().add(&random_offset(rng, dim, field, off_len));
    (x, y, m, big_m)
}

/// Two vectors in balls of radii strictly inside `(0, 1)` around a shared
/// unit reference; returns `(x, y, e, r1, r2)`.
pub fn gruss_disc_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, Vector, Vector, f64, f64) {
    let e = random_unit(rng, dim, field);
    let r1 = uniform(rng, 0.15, 0.85);
    let r2 = uniform(rng, 0.15, 0.85);
    let off_len = r1 * uniform(rng, 0.0, 1.0 - slack);
    let x = e.add(&random_offset(rng, dim, field, off_len));
    let off_len = r2 * uniform(rng, 0.0, 1.0 - slack);
    let y = e.add(&random_offset(rng, dim, field, off_len));
    (x, y, e, r1, r2)
}

/// Two vectors under positive-regime segment constraints against a shared
/// unit reference; returns `(x, y, e, x_pair, y_pair)`.
#[allow(clippy::type_complexity)]
pub fn gruss_segment_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, Vector, Vector, (Scalar, Scalar), (Scalar, Scalar)) {
    let e = random_unit(rng, dim, field);
    let x_pair = segment_endpoints(rng, field, SegmentRegime::RePositive);
    let y_pair = segment_endpoints(rng, field, SegmentRegime::RePositive);
    let sx = SegmentConstraint::new(x_pair.0, x_pair.1, e.clone()).expect("unit reference");
    let sy = SegmentConstraint::new(y_pair.0, y_pair.1, e.clone()).expect("unit reference");
    let off_len = sx.ball_radius() * uniform(rng, 0.0, 1.0 - slack);
    let x = sx.ball_center().add(&random_offset(rng, dim, field, off_len));
    let off_len = sy.ball_radius() * uniform(rng, 0.0, 1.0 - slack);
    let y = sy.ball_center().add(&random_offset(rng, dim, field, off_len));
    (x, y, e, x_pair, y_pair)
}

/// Orthonormal family of `n <= dim` members via two-pass Gram–Schmidt on
/// random vectors.
pub fn random_family(
    rng: &mut ChaCha8Rng,
    dim: usize,
    n: usize,
    field: Field,
) -> OrthonormalFamily {
    assert!(
        (1..=dim).contains(&n),
        "family size must be between 1 and the dimension"
    );
    loop {
        let mut members: Vec<Vector> = Vec::with_capacity(n);
        let mut attempts = 0;
        while members.len() < n && attempts < 64 {
            attempts += 1;
            let mut v = random_vector(rng, dim, field);
            for _ in 0..2 {
                for e in &members {
                    let c = inner_unchecked(&v, e);
                    v = v.sub(&e.scaled(c));
                }
            }
            let nv = norm(&v);
            if nv > 1e-6 {
                members.push(v.scaled_re(1.0 / nv));
            }
        }
        if members.len() == n {
            if let Ok(family) = OrthonormalFamily::with_default_tol(members) {
                if family.is_valid() {
                    return family;
                }
            }
        }
    }
}

/// Coefficients with energy strictly above `r²`, plus `x` within `r` of the
/// corresponding combination; returns `(x, lambda, r)` for a given family.
fn lambda_instance(
    rng: &mut ChaCha8Rng,
    family: &OrthonormalFamily,
    slack: f64,
) -> (Vector, Vec<Scalar>, f64) {
    let field = family.field();
    let dim = family.dim();
    let lambda: Vec<Scalar> = (0..family.len())
        .map(|_| random_scalar(rng, field, 0.5, 1.4))
        .collect();
    let s: f64 = lambda.iter().map(|l| l.abs_sq()).sum();
    let r = s.sqrt() * uniform(rng, 0.35, 0.75);
    let off_len = r * uniform(rng, 0.0, 1.0 - slack);
    let x = family.combination(&lambda).add(&random_offset(rng, dim, field, off_len));
    (x, lambda, r)
}

/// Family, coefficients, and radius for the coefficient-ball bound;
/// returns `(x, family, lambda, r)`.
pub fn bessel_disc_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, OrthonormalFamily, Vec<Scalar>, f64) {
    let n = rng.gen_range(1..=dim);
    let family = random_family(rng, dim, n, field);
    let (x, lambda, r) = lambda_instance(rng, &family, slack);
    (x, family, lambda, r)
}

/// Endpoint pairs whose midpoints dominate the half-differences
/// (`|dᵢ| <= 0.4·|mᵢ|`), which keeps `Σ Re(upperᵢ·conj(lowerᵢ))` at least
/// `0.84·Σ|mᵢ|²` — comfortably in the positive regime.
pub fn conditioned_pairs(rng: &mut ChaCha8Rng, n: usize, field: Field) -> PairSequence {
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for _ in 0..n {
        let m = random_scalar(rng, field, 0.6, 1.4);
        let t = uniform(rng, 0.1, 0.4);
        let d = match field {
            Field::Real => m.scale(if rng.gen_bool(0.5) { t } else { -t }),
            Field::Complex => {
                let theta = uniform(rng, 0.0, std::f64::consts::TAU);
                m * Scalar::complex(t * theta.cos(), t * theta.sin())
            }
        };
        lower.push(m - d);
        upper.push(m + d);
    }
    PairSequence::new(lower, upper).expect("pairs are finite and nonempty")
}

/// Family plus conditioned pairs with `x` placed at `factor` times the
/// family ball's radius from the midpoint combination.
pub fn family_instance_at(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    factor: f64,
) -> (Vector, OrthonormalFamily, PairSequence) {
    let n = rng.gen_range(1..=dim);
    let family = random_family(rng, dim, n, field);
    let pairs = conditioned_pairs(rng, n, field);
    let x = family.combination(&pairs.mids()).add(&random_offset(
        rng,
        dim,
        field,
        pairs.radius() * factor,
    ));
    (x, family, pairs)
}

/// Admissible family segment instance with membership slack.
pub fn bessel_segment_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, OrthonormalFamily, PairSequence) {
    let factor = uniform(rng, 0.0, 1.0 - slack);
    family_instance_at(rng, dim, field, factor)
}

/// Shared family with independent coefficient balls for two vectors;
/// returns `(x, y, family, x_lambda, x_r, y_lambda, y_r)`.
#[allow(clippy::type_complexity)]
pub fn gruss_family_disc_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, Vector, OrthonormalFamily, Vec<Scalar>, f64, Vec<Scalar>, f64) {
    let n = rng.gen_range(1..=dim);
    let family = random_family(rng, dim, n, field);
    let (x, x_lambda, x_r) = lambda_instance(rng, &family, slack);
    let (y, y_lambda, y_r) = lambda_instance(rng, &family, slack);
    (x, y, family, x_lambda, x_r, y_lambda, y_r)
}

/// Shared family with independent conditioned pairs for two vectors;
/// returns `(x, y, family, x_pairs, y_pairs)`.
pub fn gruss_family_segment_instance(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    slack: f64,
) -> (Vector, Vector, OrthonormalFamily, PairSequence, PairSequence) {
    let n = rng.gen_range(1..=dim);
    let family = random_family(rng, dim, n, field);
    let x_pairs = conditioned_pairs(rng, n, field);
    let off_len = x_pairs.radius() * uniform(rng, 0.0, 1.0 - slack);
    let x = family.combination(&x_pairs.mids()).add(&random_offset(rng, dim, field, off_len));
    let y_pairs = conditioned_pairs(rng, n, field);
    let off_len = y_pairs.radius() * uniform(rng, 0.0, 1.0 - slack);
    let y = family.combination(&y_pairs.mids()).add(&random_offset(rng, dim, field, off_len));
    (x, y, family, x_pairs, y_pairs)
}

/// Instance whose residual-route middle value (the center distance) is
/// strictly below the midpoint-route middle value: `x` sits off the span,
/// so the coefficient offsets vanish while the center distance stays small.
/// The dimension is raised to at least 2 to leave room off the span.
pub fn incomparability_center_below(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
) -> (Vector, OrthonormalFamily, PairSequence) {
    let dim = dim.max(2);
    let n = rng.gen_range(1..dim);
    let family = random_family(rng, dim, n, field);
    let pairs = conditioned_pairs(rng, n, field);
    let w = loop {
        let mut v = random_vector(rng, dim, field);
        for _ in 0..2 {
            for e in family.members() {
                let c = inner_unchecked(&v, e);
                v = v.sub(&e.scaled(c));
            }
        }
        let nv = norm(&v);
        if nv > 1e-6 {
            break v.scaled_re(1.0 / nv);
        }
    };
    let rho = pairs.radius() * uniform(rng, 0.2, 0.5).sqrt();
    let x = family.combination(&pairs.mids()).add(&w.scaled_re(rho));
    (x, family, pairs)
}

/// Instance whose residual-route middle value is strictly above the
/// midpoint-route one: `x` stays in the span with coefficient offsets
/// eating 78–93% of the half-difference energy.
pub fn incomparability_center_above(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
) -> (Vector, OrthonormalFamily, PairSequence) {
    let n = rng.gen_range(1..=dim);
    let family = random_family(rng, dim, n, field);
    let pairs = conditioned_pairs(rng, n, field);
    let t = uniform(rng, 0.78, 0.93);
    let raw: Vec<Scalar> = (0..n)
        .map(|_| random_scalar(rng, field, 0.5, 1.5))
        .collect();
    let raw_energy: f64 = raw.iter().map(|s| s.abs_sq()).sum();
    let k = (t * pairs.radius().powi(2) / raw_energy).sqrt();
    let coeffs: Vec<Scalar> = pairs
        .mids()
        .iter()
        .zip(&raw)
        .map(|(m, o)| *m + o.scale(k))
        .collect();
    let x = family.combination(&coeffs);
    (x, family, pairs)
}

/// Random quadrature measure: either rule, 1–20 nodes, a random finite
/// interval, and a positive random quadratic density.
pub fn random_measure(rng: &mut ChaCha8Rng) -> (WeightedMeasure, QuadratureKind) {
    let kind = if rng.gen_bool(0.5) {
        QuadratureKind::UniformMidpoint
    } else {
        QuadratureKind::GaussLegendre
    };
    let n = rng.gen_range(1..=20);
    let lo = uniform(rng, -2.0, 1.0);
    let hi = lo + uniform(rng, 0.3, 3.0);
    let c0 = uniform(rng, 0.1, 1.5);
    let c1 = uniform(rng, 0.0, 1.0);
    let c2 = uniform(rng, 0.0, 1.0);
    let width = hi - lo;
    let measure = make_measure(kind, lo, hi, n, |s| {
        let u = (s - lo) / width;
        c0 + c1 * u + c2 * u * u
    })
    .expect("interval is valid and density positive");
    (measure, kind)
}

pub fn random_sampled(rng: &mut ChaCha8Rng, n: usize, field: Field) -> SampledFunction {
    SampledFunction::new(random_vector(rng, n, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{
        check_disc, check_segment_norm, check_segment_re, disc_case, endpoint_regime,
    };
    use crate::harness::rng::trial_rng;
    use crate::tolerance::Tolerance;

    #[test]
    fn disc_instances_land_in_their_case_and_ball() {
        let tol = Tolerance::default();
        for trial in 0..30 {
            let mut rng = trial_rng(11, trial);
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            for case in [
                DiscCase::NormAboveRadius,
                DiscCase::NormEqualRadius,
                DiscCase::NormBelowRadius,
            ] {
                let (x, disc) = disc_instance(&mut rng, 1 + (trial as usize % 8), field, case, 0.05);
                assert_eq!(disc_case(&disc, &tol), case);
                assert!(check_disc(&x, &disc, &tol).unwrap().satisfied());
            }
        }
    }

    #[test]
    fn segment_instances_land_in_their_regime_and_ball() {
        let tol = Tolerance::default();
        for trial in 0..30 {
            let mut rng = trial_rng(12, trial);
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            for regime in [
                SegmentRegime::RePositive,
                SegmentRegime::ReZero,
                SegmentRegime::ReNegative,
            ] {
                let (x, seg) =
                    segment_instance(&mut rng, 1 + (trial as usize % 8), field, regime, 0.05);
                assert_eq!(endpoint_regime(seg.lower(), seg.upper(), &tol), regime);
                assert!(check_segment_re(&x, &seg, &tol).unwrap().satisfied());
                assert!(check_segment_norm(&x, &seg, &tol).unwrap().satisfied());
            }
        }
    }

    #[test]
    fn zero_regime_products_vanish_exactly() {
        for trial in 0..50 {
            let mut rng = trial_rng(13, trial);
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            let (lo, hi) = segment_endpoints(&mut rng, field, SegmentRegime::ReZero);
            assert_eq!((hi * lo.conj()).re(), 0.0);
        }
    }

    #[test]
    fn families_are_orthonormal() {
        for trial in 0..20 {
            let mut rng = trial_rng(14, trial);
            let dim = 1 + (trial as usize % 8);
            let n = 1 + (trial as usize % dim);
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            let family = random_family(&mut rng, dim, n, field);
            assert!(family.is_valid());
            assert_eq!(family.len(), n);
        }
    }

    #[test]
    fn conditioned_pairs_stay_positive() {
        for trial in 0..20 {
            let mut rng = trial_rng(15, trial);
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            let pairs = conditioned_pairs(&mut rng, 1 + (trial as usize % 6), field);
            assert!(pairs.sum_re_product() > 0.5 * pairs.sum_abs_product());
        }
    }
}
