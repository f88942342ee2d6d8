//! Structured result of evaluating one reverse bound on one instance.
//!
//! A [`BoundReport`] records the two sides of the inequality, the signed
//! slack `rhs − lhs`, a three-way verdict, the status of every hypothesis
//! that the bound assumes, and any intermediate quantities worth exposing
//! (chain links, case data, path cross-checks).
//!
//! Chain convention: intermediate entries whose label starts with `"chain:"`
//! are the ordered middle links of a multi-link inequality, so the full
//! chain is `lhs <= link_1 <= ... <= link_k <= rhs`. Entries without the
//! prefix are diagnostics only.

use crate::constraints::{classify, HypothesisStatus, Verdict};
use crate::error::Error;
use crate::tolerance::Tolerance;
use serde::{Deserialize, Serialize};

/// A hypothesis check together with the name of the condition it tested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledStatus {
    pub label: String,
    pub verdict: Verdict,
    pub margin: f64,
}

impl LabeledStatus {
    pub fn new(label: &str, status: HypothesisStatus) -> LabeledStatus {
        LabeledStatus {
            label: label.to_string(),
            verdict: status.verdict,
            margin: status.margin,
        }
    }

    pub fn satisfied(&self) -> bool {
        self.verdict.satisfied()
    }
}

/// A multiplicative companion bound `lhs <= factor · rhs_reference`
/// reported alongside the main additive bound where the source result
/// provides one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioBound {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub verdict: Verdict,
}

impl RatioBound {
    pub fn new(lhs: f64, rhs: f64, tol: &Tolerance, scale: f64) -> RatioBound {
        let slack = rhs - lhs;
        RatioBound {
            lhs,
            rhs,
            slack,
            verdict: classify(slack, tol.band(scale)),
        }
    }
}

/// Everything known about one bound evaluation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Which bound was evaluated, e.g. `"schwarz-disc"`.
    pub theorem_id: String,
    /// Case or regime the dispatch selected, when the bound has cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub case_tag: Option<String>,
    /// Status of every assumed hypothesis, in the order they were checked.
    pub hypothesis: Vec<LabeledStatus>,
    /// Left-hand side (the quantity being bounded).
    pub lhs: f64,
    /// Right-hand side (the final, weakest link of the chain).
    pub rhs: f64,
    /// `rhs − lhs`; nonnegative when the bound holds exactly.
    pub slack: f64,
    /// Verdict on the slack against the tolerance band.
    pub verdict: Verdict,
    /// `lhs / rhs` clamped to `[0, ∞)` when `rhs > 0`; `None` otherwise.
    /// Values near 1 mean the bound is nearly tight on this instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub tightness: Option<f64>,
    /// Named intermediate quantities. `"chain:"`-prefixed labels are the
    /// ordered middle links of the inequality chain.
    pub intermediate: Vec<(String, f64)>,
    /// Companion multiplicative bound, when the result provides one.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub ratio_bound: Option<RatioBound>,
    /// `false` when evaluation was forced past a failed hypothesis; the
    /// numbers are then reported but carry no guarantee.
    pub trusted: bool,
}

/// Inputs to [`BoundReport::build`] that vary per call site.
pub struct ReportSpec {
    pub theorem_id: &'static str,
    pub case_tag: Option<&'static str>,
    pub hypothesis: Vec<(&'static str, HypothesisStatus)>,
    pub lhs: f64,
    pub rhs: f64,
    /// Scale at which the slack band is taken; the builder maxes it with 1.
    pub scale: f64,
    pub intermediate: Vec<(&'static str, f64)>,
    pub ratio_bound: Option<RatioBound>,
}

impl BoundReport {
    /// Assemble a report, enforcing the hypothesis gate.
    ///
    /// If any hypothesis fails and `force` is false the result is
    /// [`Error::HypothesisViolated`] carrying the full (untrusted) report;
    /// with `force` the same report is returned as `Ok` with
    /// `trusted = false`.
    pub fn build(spec: ReportSpec, tol: &Tolerance, force: bool) -> Result<BoundReport, Error> {
        let slack = spec.rhs - spec.lhs;
        let verdict = classify(slack, tol.band(spec.scale));
        let tightness = if spec.rhs > 0.0 {
            Some((spec.lhs / spec.rhs).max(0.0))
        } else {
            None
        };
        let failing = spec
            .hypothesis
            .iter()
            .find(|(_, st)| !st.satisfied())
            .map(|(label, st)| (*label, st.margin));
        let report = BoundReport {
            theorem_id: spec.theorem_id.to_string(),
            case_tag: spec.case_tag.map(str::to_string),
            hypothesis: spec
                .hypothesis
                .into_iter()
                .map(|(label, st)| LabeledStatus::new(label, st))
                .collect(),
            lhs: spec.lhs,
            rhs: spec.rhs,
            slack,
            verdict,
            tightness,
            intermediate: spec
                .intermediate
                .into_iter()
                .map(|(label, v)| (label.to_string(), v))
                .collect(),
            ratio_bound: spec.ratio_bound,
            trusted: failing.is_none(),
        };
        match failing {
            Some((label, margin)) if !force => Err(Error::HypothesisViolated {
                theorem_id: spec.theorem_id,
                label,
                margin,
                report: Some(Box::new(report)),
            }),
            _ => Ok(report),
        }
    }

    /// Look up an intermediate value by its full label.
    pub fn value(&self, label: &str) -> Option<f64> {
        self.intermediate
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| *v)
    }

    /// The full inequality chain: `lhs`, then the `"chain:"`-labeled
    /// intermediates in order, then `rhs`.
    pub fn chain(&self) -> Vec<f64> {
        let mut links = vec![self.lhs];
        links.extend(
            self.intermediate
                .iter()
                .filter(|(l, _)| l.starts_with("chain:"))
                .map(|(_, v)| *v),
        );
        links.push(self.rhs);
        links
    }

    /// True when every hypothesis was satisfied (possibly at the boundary).
    pub fn hypotheses_satisfied(&self) -> bool {
        self.hypothesis.iter().all(LabeledStatus::satisfied)
    }

    /// The tightest consecutive gap along the chain. With no middle links
    /// this equals `slack`; a negative value means some individual step of
    /// the chain is violated even if the outer ends are ordered.
    pub fn min_link_slack(&self) -> f64 {
        let links = self.chain();
        links
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}
