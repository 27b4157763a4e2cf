use serde::Serialize;

use super::{eval_rhs, IvpProblem, Quadrature, VerifyError};
use crate::fracalc::{CrispCoefFn, FracError, FuzzyPowerFunc, EXPONENT_TOLERANCE};
use crate::fuzzy::OrderVerdict;

/// Values within `±SIGN_THRESHOLD` of zero are classified as zero.
pub const SIGN_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn classify(value: f64) -> Self {
        if value > SIGN_THRESHOLD {
            Sign::Positive
        } else if value < -SIGN_THRESHOLD {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignPoint {
    pub t: f64,
    pub value: f64,
    pub sign: Sign,
}

/// Evaluates a real coefficient on `ts` and classifies each value.
/// This measures the sign; it does not assume one.
pub fn sign_report(f: &CrispCoefFn, ts: &[f64]) -> Vec<SignPoint> {
    ts.iter()
        .map(|&t| {
            let value = f.eval(t);
            SignPoint {
                t,
                value,
                sign: Sign::classify(value),
            }
        })
        .collect()
}

/// Distance between `D^q u(t)` and `f(t, u(t), Tu(t))` in the sup-over-α metric.
pub fn residual(
    problem: &IvpProblem,
    u: &FuzzyPowerFunc,
    t: f64,
    mode: Quadrature,
) -> Result<f64, VerifyError> {
    let derivative = u.rl_deriv_power(problem.q())?;
    residual_with(problem, &derivative, u, t, mode)
}

pub(crate) fn residual_with(
    problem: &IvpProblem,
    derivative: &FuzzyPowerFunc,
    u: &FuzzyPowerFunc,
    t: f64,
    mode: Quadrature,
) -> Result<f64, VerifyError> {
    check_point(problem, t)?;
    let lhs = derivative.eval(t)?;
    let rhs = eval_rhs(problem, u, t, mode)?;
    Ok(lhs.distance_sup(&rhs)?)
}

fn check_point(problem: &IvpProblem, t: f64) -> Result<(), VerifyError> {
    if !(t > 0.0 && t <= problem.b()) {
        return Err(FracError::Domain(format!("t = {t} is outside (0, {}]", problem.b())).into());
    }
    Ok(())
}

/// True iff `t^{1−q} u` extends continuously to `t = 0`, i.e. every exponent is `≥ q − 1`.
pub fn check_c1mq_membership(u: &FuzzyPowerFunc, q: f64) -> bool {
    u.terms()
        .iter()
        .all(|term| term.exponent >= q - 1.0 - EXPONENT_TOLERANCE)
}

/// Acceptance thresholds for the weighted initial condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IcCriteria {
    pub tol_ic: f64,
    /// Smallest fitted log–log decay rate accepted as convergence when the
    /// trace has not yet dropped below `tol_ic`.
    pub min_slope: f64,
}

impl Default for IcCriteria {
    fn default() -> Self {
        Self {
            tol_ic: 1e-2,
            min_slope: 0.01,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IcPoint {
    pub t: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcReport {
    pub trace: Vec<IcPoint>,
    pub decreasing: bool,
    /// Least-squares slope of `ln distance` against `ln t` over the positive distances.
    pub slope: Option<f64>,
    pub criteria: IcCriteria,
    pub converged: bool,
}

/// Traces `distance_sup(t^{1−q} u(t), u0)` along `ts` (strictly decreasing toward 0).
///
/// Converged means the trace never increases and either ends below `tol_ic`
/// or decays like a power of `t` with exponent at least `min_slope`.
pub fn verify_initial(
    problem: &IvpProblem,
    u: &FuzzyPowerFunc,
    ts: &[f64],
    criteria: IcCriteria,
) -> Result<IcReport, VerifyError> {
    if ts.is_empty()
        || ts
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Less))
    {
        return Err(VerifyError::InvalidInput(
            "initial-condition times must be strictly decreasing".into(),
        ));
    }
    let weight = 1.0 - problem.q();
    let mut trace = Vec::with_capacity(ts.len());
    for &t in ts {
        check_point(problem, t)?;
        let scaled = u.eval(t)?.scalar_mul(t.powf(weight))?;
        trace.push(IcPoint {
            t,
            distance: scaled.distance_sup(problem.u0())?,
        });
    }
    let decreasing = trace.windows(2).all(|w| w[1].distance <= w[0].distance);
    let slope = loglog_slope(&trace);
    let last = trace.last().map_or(f64::INFINITY, |p| p.distance);
    let converged =
        decreasing && (last <= criteria.tol_ic || slope.is_some_and(|s| s >= criteria.min_slope));
    Ok(IcReport {
        trace,
        decreasing,
        slope,
        criteria,
        converged,
    })
}

fn loglog_slope(trace: &[IcPoint]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = trace
        .iter()
        .filter(|p| p.distance > 0.0)
        .map(|p| (p.t.ln(), p.distance.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `lower(t) ≤ mid(t) ≤ upper(t)` levelwise at every `t` in `ts`.
pub fn verify_ordering(
    lower: &FuzzyPowerFunc,
    mid: &FuzzyPowerFunc,
    upper: &FuzzyPowerFunc,
    ts: &[f64],
    tol: f64,
) -> Result<Vec<OrderVerdict>, FracError> {
    ts.iter()
        .map(|&t| {
            let m = mid.eval(t)?;
            let below = lower.eval(t)?.leq(&m, tol)?;
            let above = m.leq(&upper.eval(t)?, tol)?;
            Ok(below.and(above))
        })
        .collect()
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo && n >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    let mut ts: Vec<f64> = (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect();
    ts[0] = lo;
    ts[n - 1] = hi;
    ts
}
