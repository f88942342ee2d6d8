//! `ipx` — batch front end for the reverse-inequality evaluators.
//!
//! Subcommands:
//!
//! * `check`     — test a vector against a ball or segment constraint
//! * `bound`     — evaluate one named bound on a JSON instance
//! * `sweep`     — run seeded randomized sweeps, writing CSV + JSON summaries
//! * `sharpness` — produce tightness-versus-epsilon curves
//!
//! Exit codes: `check` exits 0/1/2 for HOLDS/FAILS/BOUNDARY; `bound` exits 0
//! when the bound holds (boundary included), 1 when it fails, 3 when
//! `--force` pushed evaluation past a failed hypothesis (untrusted report);
//! `sweep` and `sharpness` exit 0 only when clean. Malformed input exits 64,
//! mismatched spaces/shapes 65, other evaluation errors 66. The `IPX_TOLERANCE`
//! environment variable overrides the default relative tolerance 1e-9.

use clap::{Args, Parser, Subcommand};
use ipx_core::bessel::{
    baseline_bessel, gruss_family_disc, gruss_family_segment, reverse_bessel_disc,
    reverse_bessel_segment, PairSequence,
};
use ipx_core::constraints::{
    check_disc, check_segment_norm, check_segment_re, Constraint, DiscConstraint,
    HypothesisStatus, SegmentConstraint, Verdict,
};
use ipx_core::gruss::{gruss_disc, gruss_segment};
use ipx_core::harness::sharpness::sharpness_for;
use ipx_core::harness::sweep::{
    incomparability_search, run_sweep, SweepConfig, SweepOutcome, SweepTarget,
};
use ipx_core::integral::{
    cassel, integral_gruss, integral_reverse_schwarz_disc, integral_reverse_schwarz_segment,
    SampledFunction, WeightedMeasure,
};
use ipx_core::schwarz::{
    additive_reverse_segment, baseline_bounds, reverse_schwarz_disc, reverse_schwarz_segment,
};
use ipx_core::triangle::{reverse_triangle_disc, reverse_triangle_segment};
use ipx_core::{BoundReport, Error, Field, Scalar, Tolerance, Vector};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_PARSE: u8 = 64;
const EXIT_MISMATCH: u8 = 65;
const EXIT_EVAL: u8 = 66;

#[derive(Parser)]
#[command(
    name = "ipx",
    version,
    about = "Evaluate, verify, and stress-test reverse inner-product inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a vector against a constraint; prints the hypothesis status.
    Check(CheckArgs),
    /// Evaluate one named bound on a JSON instance; prints the report.
    Bound(BoundArgs),
    /// Run randomized sweeps; writes one CSV and one JSON summary per target.
    Sweep(SweepArgs),
    /// Produce a tightness-versus-epsilon curve for a bound.
    Sharpness(SharpnessArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Input file: a JSON vector (or `{"x": <vector>}`); `-` reads stdin.
    #[arg(long)]
    input: String,
    /// Constraint JSON: `{"disc": {"a": [...], "r": ...}}` or
    /// `{"segment": {"gamma": ..., "Gamma": ..., "y": [...]}}`.
    #[arg(long)]
    constraint: String,
    /// Which form of the segment condition to check (ball constraints have
    /// only one form and ignore this).
    #[arg(long, value_parser = ["re", "norm", "both"], default_value = "both")]
    form: String,
}

#[derive(Args)]
struct BoundArgs {
    /// Input file with the instance JSON; `-` reads stdin.
    #[arg(long)]
    input: String,
    /// Bound to evaluate.
    #[arg(long)]
    theorem: String,
    /// Evaluate even when a hypothesis fails; the report is then untrusted
    /// and the exit code is 3.
    #[arg(long)]
    force: bool,
    /// For `integral-gruss`: bound the second factor with the first pair's
    /// upper endpoint in the second-level hypothesis instead of the
    /// symmetric form.
    #[arg(long)]
    verbatim_second_level: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep target name, or `all`.
    #[arg(long)]
    target: String,
    /// Trials per target.
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Base RNG seed; each trial derives its own stream from (seed, trial).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dimensions to draw from: e.g. `4`, `1-8`, or `1,2,5-7`.
    #[arg(long, default_value = "1-8")]
    dims: String,
    /// Scalar field(s) to draw from.
    #[arg(long, value_parser = ["real", "complex", "both"], default_value = "both")]
    field: String,
    /// Worker threads: 0 = all cores, 1 = sequential. Output bytes are
    /// identical regardless.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Admissibility slack: generated instances stay this fraction away
    /// from their constraint boundary.
    #[arg(long, default_value_t = 0.05)]
    slack_fraction: f64,
    /// Directory for `<target>.csv` and `<target>.summary.json` files.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SharpnessArgs {
    /// Bound to trace: `schwarz-disc` or `schwarz-segment`.
    #[arg(long, alias = "target")]
    theorem: String,
    /// Comma-separated shrink parameters in (0, 1).
    #[arg(long, alias = "eps", default_value = "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6")]
    epsilons: String,
    /// Directory for `<theorem>.sharpness.csv` and `.sharpness.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure destined for stderr plus a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn eval_failure(err: Error) -> Failure {
    let code = match err {
        Error::InputMismatch(_) => EXIT_MISMATCH,
        _ => EXIT_EVAL,
    };
    Failure::new(code, err.to_string())
}

fn parse_failure(context: &str, err: impl std::fmt::Display) -> Failure {
    Failure::new(EXIT_PARSE, format!("{context}: {err}"))
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure::new(EXIT_EVAL, format!("{}: {err}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let tol = match tolerance_from_env() {
        Ok(tol) => tol,
        Err(f) => {
            eprintln!("ipx: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args, &tol),
        Command::Bound(args) => cmd_bound(&args, &tol),
        Command::Sweep(args) => cmd_sweep(&args, &tol),
        Command::Sharpness(args) => cmd_sharpness(&args, &tol),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("ipx: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn tolerance_from_env() -> Result<Tolerance, Failure> {
    match std::env::var("IPX_TOLERANCE") {
        Ok(raw) => {
            let eta: f64 = raw
                .trim()
                .parse()
                .map_err(|e| parse_failure("IPX_TOLERANCE", e))?;
            Tolerance::new(eta).map_err(|e| parse_failure("IPX_TOLERANCE", e))
        }
        Err(std::env::VarError::NotPresent) => Ok(Tolerance::default()),
        Err(e) => Err(parse_failure("IPX_TOLERANCE", e)),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| io_failure(Path::new("<stdin>"), e))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| io_failure(Path::new(path), e))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(context: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| parse_failure(context, e))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization cannot fail")
    );
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

/// Bare vector or `{"x": <vector>}`.
#[derive(Deserialize)]
#[serde(untagged)]
enum CheckInput {
    Wrapped { x: Vector },
    Bare(Vector),
}

impl CheckInput {
    fn into_vector(self) -> Vector {
        match self {
            CheckInput::Wrapped { x } => x,
            CheckInput::Bare(v) => v,
        }
    }
}

#[derive(Serialize)]
struct BothForms {
    re: HypothesisStatus,
    norm: HypothesisStatus,
}

fn verdict_exit(verdicts: &[Verdict]) -> u8 {
    if verdicts.contains(&Verdict::Fails) {
        1
    } else if verdicts.contains(&Verdict::Boundary) {
        2
    } else {
        0
    }
}

fn cmd_check(args: &CheckArgs, tol: &Tolerance) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let x = parse_json::<CheckInput>("input", &text)?.into_vector();
    let constraint: Constraint = parse_json("constraint", &args.constraint)?;
    let statuses = match &constraint {
        Constraint::Disc(disc) => vec![check_disc(&x, disc, tol).map_err(eval_failure)?],
        Constraint::Segment(seg) => match args.form.as_str() {
            "re" => vec![check_segment_re(&x, seg, tol).map_err(eval_failure)?],
            "norm" => vec![check_segment_norm(&x, seg, tol).map_err(eval_failure)?],
            _ => vec![
                check_segment_re(&x, seg, tol).map_err(eval_failure)?,
                check_segment_norm(&x, seg, tol).map_err(eval_failure)?,
            ],
        },
    };
    if statuses.len() == 2 {
        print_json(&BothForms {
            re: statuses[0],
            norm: statuses[1],
        });
    } else {
        print_json(&statuses[0]);
    }
    Ok(verdict_exit(
        &statuses.iter().map(|s| s.verdict).collect::<Vec<_>>(),
    ))
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiscInput {
    x: Vector,
    disc: DiscConstraint,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentInput {
    x: Vector,
    segment: SegmentConstraint,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleSegmentInput {
    x: Vector,
    y: Vector,
    m: f64,
    #[serde(rename = "M")]
    big_m: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GrussDiscInput {
    x: Vector,
    y: Vector,
    e: Vector,
    r1: f64,
    r2: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EndpointPair {
    gamma: Scalar,
    #[serde(rename = "Gamma")]
    upper: Scalar,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GrussSegmentInput {
    x: Vector,
    y: Vector,
    e: Vector,
    x_pair: EndpointPair,
    y_pair: EndpointPair,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BesselDiscInput {
    x: Vector,
    family: Vec<Vector>,
    lambda: Vec<Scalar>,
    r: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairListInput {
    lower: Vec<Scalar>,
    upper: Vec<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BesselSegmentInput {
    x: Vector,
    family: Vec<Vector>,
    pairs: PairListInput,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GrussFamilyDiscInput {
    x: Vector,
    y: Vector,
    family: Vec<Vector>,
    x_lambda: Vec<Scalar>,
    x_r: f64,
    y_lambda: Vec<Scalar>,
    y_r: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GrussFamilySegmentInput {
    x: Vector,
    y: Vector,
    family: Vec<Vector>,
    x_pairs: PairListInput,
    y_pairs: PairListInput,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntegralDiscInput {
    f: SampledFunction,
    g: SampledFunction,
    r: f64,
    measure: WeightedMeasure,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntegralSegmentInput {
    f: SampledFunction,
    g: SampledFunction,
    gamma: Scalar,
    #[serde(rename = "Gamma")]
    upper: Scalar,
    measure: WeightedMeasure,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CasselInput {
    f: SampledFunction,
    g: SampledFunction,
    m: f64,
    #[serde(rename = "M")]
    big_m: f64,
    measure: WeightedMeasure,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntegralGrussInput {
    f: SampledFunction,
    g: SampledFunction,
    h: SampledFunction,
    a: Scalar,
    #[serde(rename = "A")]
    big_a: Scalar,
    b: Scalar,
    #[serde(rename = "B")]
    big_b: Scalar,
    measure: WeightedMeasure,
}

fn family_from(vectors: Vec<Vector>) -> Result<ipx_core::OrthonormalFamily, Failure> {
    ipx_core::OrthonormalFamily::with_default_tol(vectors).map_err(eval_failure)
}

fn pair_sequence(p: PairListInput) -> Result<PairSequence, Failure> {
    PairSequence::new(p.lower, p.upper).map_err(eval_failure)
}

fn report_exit(rep: &BoundReport) -> u8 {
    if !rep.trusted {
        3
    } else if rep.verdict == Verdict::Fails {
        1
    } else {
        0
    }
}

/// A baseline-list entry: a report where the bound was evaluable, or the
/// error that stopped it (e.g. a regime mismatch for that entry only).
#[derive(Serialize)]
#[serde(untagged)]
enum BaselineEntry {
    Report(BoundReport),
    Error { error: String },
}

fn baseline_list_exit(entries: &[Result<BoundReport, Error>]) -> u8 {
    let mut worst = 0;
    let mut any_ok = false;
    for rep in entries.iter().flatten() {
        any_ok = true;
        worst = worst.max(report_exit(rep));
    }
    if any_ok {
        worst
    } else {
        EXIT_EVAL
    }
}

fn print_baseline_list(entries: Vec<Result<BoundReport, Error>>) -> u8 {
    let exit = baseline_list_exit(&entries);
    let wire: Vec<BaselineEntry> = entries
        .into_iter()
        .map(|r| match r {
            Ok(rep) => BaselineEntry::Report(rep),
            Err(e) => BaselineEntry::Error {
                error: e.to_string(),
            },
        })
        .collect();
    print_json(&wire);
    exit
}

fn cmd_bound(args: &BoundArgs, tol: &Tolerance) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let force = args.force;
    let rep = match args.theorem.as_str() {
        "schwarz-disc" => {
            let inp: DiscInput = parse_json("input", &text)?;
            reverse_schwarz_disc(&inp.x, &inp.disc, tol, force)
        }
        "schwarz-segment" => {
            let inp: SegmentInput = parse_json("input", &text)?;
            reverse_schwarz_segment(&inp.x, &inp.segment, tol, force)
        }
        "schwarz-additive" => {
            let inp: SegmentInput = parse_json("input", &text)?;
            additive_reverse_segment(&inp.x, &inp.segment, tol, force)
        }
        "schwarz-baselines" => {
            let inp: SegmentInput = parse_json("input", &text)?;
            let entries = baseline_bounds(&inp.x, &inp.segment, tol, force).map_err(eval_failure)?;
            return Ok(print_baseline_list(entries));
        }
        "triangle-disc" => {
            let inp: DiscInput = parse_json("input", &text)?;
            reverse_triangle_disc(&inp.x, &inp.disc, tol, force)
        }
        "triangle-segment" => {
            let inp: TriangleSegmentInput = parse_json("input", &text)?;
            reverse_triangle_segment(&inp.x, &inp.y, inp.m, inp.big_m, tol, force)
        }
        "gruss-disc" => {
            let inp: GrussDiscInput = parse_json("input", &text)?;
            gruss_disc(&inp.x, &inp.y, &inp.e, inp.r1, inp.r2, tol, force)
        }
        "gruss-segment" => {
            let inp: GrussSegmentInput = parse_json("input", &text)?;
            gruss_segment(
                &inp.x,
                &inp.y,
                &inp.e,
                (inp.x_pair.gamma, inp.x_pair.upper),
                (inp.y_pair.gamma, inp.y_pair.upper),
                tol,
                force,
            )
        }
        "bessel-disc" => {
            let inp: BesselDiscInput = parse_json("input", &text)?;
            let family = family_from(inp.family)?;
            reverse_bessel_disc(&inp.x, &family, &inp.lambda, inp.r, tol, force)
        }
        "bessel-segment" => {
            let inp: BesselSegmentInput = parse_json("input", &text)?;
            let family = family_from(inp.family)?;
            let pairs = pair_sequence(inp.pairs)?;
            reverse_bessel_segment(&inp.x, &family, &pairs, tol, force)
        }
        "bessel-baselines" => {
            let inp: BesselSegmentInput = parse_json("input", &text)?;
            let family = family_from(inp.family)?;
            let pairs = pair_sequence(inp.pairs)?;
            let entries =
                baseline_bessel(&inp.x, &family, &pairs, tol, force).map_err(eval_failure)?;
            return Ok(print_baseline_list(entries));
        }
        "gruss-family-disc" => {
            let inp: GrussFamilyDiscInput = parse_json("input", &text)?;
            let family = family_from(inp.family)?;
            gruss_family_disc(
                &inp.x,
                &inp.y,
                &family,
                &inp.x_lambda,
                inp.x_r,
                &inp.y_lambda,
                inp.y_r,
                tol,
                force,
            )
        }
        "gruss-family-segment" => {
            let inp: GrussFamilySegmentInput = parse_json("input", &text)?;
            let family = family_from(inp.family)?;
            let x_pairs = pair_sequence(inp.x_pairs)?;
            let y_pairs = pair_sequence(inp.y_pairs)?;
            gruss_family_segment(&inp.x, &inp.y, &family, &x_pairs, &y_pairs, tol, force)
        }
        "integral-disc" => {
            let inp: IntegralDiscInput = parse_json("input", &text)?;
            integral_reverse_schwarz_disc(&inp.f, &inp.g, inp.r, &inp.measure, tol, force)
        }
        "integral-segment" => {
            let inp: IntegralSegmentInput = parse_json("input", &text)?;
            integral_reverse_schwarz_segment(
                &inp.f,
                &inp.g,
                inp.gamma,
                inp.upper,
                &inp.measure,
                tol,
                force,
            )
        }
        "cassel" => {
            let inp: CasselInput = parse_json("input", &text)?;
            cassel(&inp.f, &inp.g, inp.m, inp.big_m, &inp.measure, tol, force)
        }
        "integral-gruss" => {
            let inp: IntegralGrussInput = parse_json("input", &text)?;
            integral_gruss(
                &inp.f,
                &inp.g,
                &inp.h,
                (inp.a, inp.big_a),
                (inp.b, inp.big_b),
                &inp.measure,
                args.verbatim_second_level,
                tol,
                force,
            )
        }
        other => {
            return Err(Failure::new(
                EXIT_PARSE,
                format!(
                    "unknown theorem '{other}' (run `ipx bound --help` for the list)"
                ),
            ))
        }
    }
    .map_err(eval_failure)?;
    print_json(&rep);
    Ok(report_exit(&rep))
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn parse_dims(raw: &str) -> Result<Vec<usize>, Failure> {
    let mut dims = Vec::new();
    for atom in raw.split(',') {
        let atom = atom.trim();
        if atom.is_empty() {
            return Err(Failure::new(EXIT_PARSE, format!("empty entry in dims '{raw}'")));
        }
        if let Some((lo, hi)) = atom.split_once('-') {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|e| parse_failure("dims", format!("'{atom}': {e}")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|e| parse_failure("dims", format!("'{atom}': {e}")))?;
            if lo == 0 || hi < lo {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("dims range '{atom}' must satisfy 1 <= lo <= hi"),
                ));
            }
            dims.extend(lo..=hi);
        } else {
            let d: usize = atom
                .parse()
                .map_err(|e| parse_failure("dims", format!("'{atom}': {e}")))?;
            if d == 0 {
                return Err(Failure::new(EXIT_PARSE, "dimension 0 is not allowed"));
            }
            dims.push(d);
        }
    }
    Ok(dims)
}

fn parse_fields(raw: &str) -> Vec<Field> {
    match raw {
        "real" => vec![Field::Real],
        "complex" => vec![Field::Complex],
        _ => vec![Field::Real, Field::Complex],
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn run_one_sweep(
    target: SweepTarget,
    args: &SweepArgs,
    dims: &[usize],
    fields: &[Field],
    tol: &Tolerance,
) -> Result<SweepOutcome, Failure> {
    let config = SweepConfig {
        target,
        trials: args.trials,
        seed: args.seed,
        dims: dims.to_vec(),
        fields: fields.to_vec(),
        jobs: args.jobs,
        slack_fraction: args.slack_fraction,
        tolerance: *tol,
    };
    run_sweep(&config).map_err(eval_failure)
}

fn cmd_sweep(args: &SweepArgs, tol: &Tolerance) -> Result<u8, Failure> {
    let dims = parse_dims(&args.dims)?;
    let fields = parse_fields(&args.field);
    let targets: Vec<SweepTarget> = if args.target == "all" {
        SweepTarget::all().to_vec()
    } else {
        vec![args
            .target
            .parse()
            .map_err(|e: Error| Failure::new(EXIT_PARSE, e.to_string()))?]
    };
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    }

    let mut summaries = Vec::with_capacity(targets.len());
    let mut violations = 0;
    for &target in &targets {
        let outcome = run_one_sweep(target, args, &dims, &fields, tol)?;
        violations += outcome.summary.violations;
        if let Some(dir) = &args.out {
            write_file(&dir.join(format!("{}.csv", target.name())), &outcome.csv)?;
            let summary_json = serde_json::to_string_pretty(&outcome.summary)
                .expect("summary serialization cannot fail");
            write_file(
                &dir.join(format!("{}.summary.json", target.name())),
                &summary_json,
            )?;
        }
        if target == SweepTarget::Incomparability {
            // The sweep rows show per-trial separations; the witness file
            // pins one strict instance of each ordering, and failing to
            // find both within the trial budget is an error.
            let witness =
                incomparability_search(args.seed, args.trials, tol).map_err(eval_failure)?;
            if let Some(dir) = &args.out {
                let witness_json = serde_json::to_string_pretty(&witness)
                    .expect("witness serialization cannot fail");
                write_file(&dir.join("incomparability.witness.json"), &witness_json)?;
            }
        }
        summaries.push(outcome.summary);
    }
    if summaries.len() == 1 {
        print_json(&summaries[0]);
    } else {
        print_json(&summaries);
    }
    Ok(if violations == 0 { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// sharpness
// ---------------------------------------------------------------------------

fn parse_epsilons(raw: &str) -> Result<Vec<f64>, Failure> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| parse_failure("epsilons", format!("'{s}': {e}")))
        })
        .collect()
}

fn cmd_sharpness(args: &SharpnessArgs, tol: &Tolerance) -> Result<u8, Failure> {
    let epsilons = parse_epsilons(&args.epsilons)?;
    let curve = sharpness_for(&args.theorem, &epsilons, tol).map_err(eval_failure)?;
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        let mut csv = String::from("epsilon,ratio\n");
        for (eps, ratio) in curve.epsilons.iter().zip(&curve.ratios) {
            writeln!(csv, "{eps:.16e},{ratio:.16e}").expect("string write cannot fail");
        }
        write_file(&dir.join(format!("{}.sharpness.csv", curve.theorem_id)), &csv)?;
        let json = serde_json::to_string_pretty(&curve).expect("curve serialization cannot fail");
        write_file(
            &dir.join(format!("{}.sharpness.json", curve.theorem_id)),
            &json,
        )?;
    }
    print_json(&curve);
    // The reported ratios are closed-form; the curve is trustworthy only
    // when the full evaluator pipeline reproduced them.
    Ok(if curve.pipeline_max_dev <= 1e-9 { 0 } else { 1 })
}
