use std::fmt::Write as _;

use serde::Serialize;

use super::checks::{IcReport, Sign, SignPoint};
use crate::fuzzy::OrderVerdict;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignReport {
    pub name: String,
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
    pub first_negative_t: Option<f64>,
    pub points: Vec<SignPoint>,
}

impl SignReport {
    pub fn new(name: impl Into<String>, points: Vec<SignPoint>) -> Self {
        let count = |s| points.iter().filter(|p| p.sign == s).count();
        Self {
            name: name.into(),
            positive: count(Sign::Positive),
            zero: count(Sign::Zero),
            negative: count(Sign::Negative),
            first_negative_t: points
                .iter()
                .find(|p| p.sign == Sign::Negative)
                .map(|p| p.t),
            points,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingReport {
    /// Whether a violation fails the verdict or is informational only.
    pub enforced: bool,
    pub holds_everywhere: bool,
    pub first_failure_t: Option<f64>,
    pub verdicts: Vec<OrderVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureCheck {
    pub nodes: usize,
    /// Largest distance between closed-form and quadrature right-hand sides.
    pub max_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointError {
    pub t: f64,
    pub message: String,
}

/// Everything `verify_solution` measured, in ascending-`t` order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub q: f64,
    pub b: f64,
    pub alpha_levels: usize,
    pub tolerance: f64,
    pub t_grid: Vec<f64>,
    /// `null` where evaluation failed; see `errors`.
    pub residuals: Vec<Option<f64>>,
    pub max_residual: f64,
    /// Largest α = 0 width among the solution's coefficients.
    pub solution_width: f64,
    pub c1mq_member: bool,
    pub initial_condition: IcReport,
    pub sign_reports: Vec<SignReport>,
    pub ordering: Option<OrderingReport>,
    pub quadrature_check: Option<QuadratureCheck>,
    pub errors: Vec<PointError>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Residual table with columns `t,residual,coef1_sign,ordering_ok`.
    /// Columns without data for a row are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,residual,coef1_sign,ordering_ok\n");
        let signs = self.sign_reports.first();
        for (i, t) in self.t_grid.iter().enumerate() {
            let residual = self.residuals[i].map(|r| r.to_string()).unwrap_or_default();
            let sign = signs.map(|s| s.points[i].sign.as_str()).unwrap_or("");
            let ordering = self
                .ordering
                .as_ref()
                .map(|o| o.verdicts[i].holds.to_string())
                .unwrap_or_default();
            writeln!(out, "{t},{residual},{sign},{ordering}").expect("write to string");
        }
        out
    }
}
