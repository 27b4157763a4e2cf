use log::{debug, warn};

use super::checks::{
    check_c1mq_membership, log_grid, residual_with, sign_report, verify_initial, verify_ordering,
    IcCriteria,
};
use super::report::{
    OrderingReport, PointError, QuadratureCheck, SignReport, Verdict, VerificationReport,
    REPORT_SCHEMA,
};
use super::{eval_rhs, IvpProblem, Quadrature, VerifyError};
use crate::fracalc::{CrispCoefFn, FuzzyPowerFunc, MIN_NODES};
use crate::fuzzy::{FuzzyError, COMPARISON_TOLERANCE};

/// Functions expected to bracket the candidate solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    pub lower: FuzzyPowerFunc,
    pub upper: FuzzyPowerFunc,
    /// Fail the verdict on an ordering violation. When false the ordering is
    /// only reported.
    pub enforce: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignCheck {
    pub name: String,
    pub coef: CrispCoefFn,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Number of log-spaced residual points in `[b · t_min_ratio, b]`.
    pub grid_points: usize,
    pub t_min_ratio: f64,
    pub tol: f64,
    pub ic: IcCriteria,
    /// Initial-condition trace at `t = b · 10^{-k}`, `k = 1..=ic_decades`.
    pub ic_decades: u32,
    pub order_tol: f64,
    /// Also evaluate `Tu` by quadrature with this many nodes and record the
    /// deviation from the closed form. The verdict always uses the closed form.
    pub nodes: Option<usize>,
    pub bounds: Option<Bounds>,
    pub sign_checks: Vec<SignCheck>,
    pub notes: Vec<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid_points: 200,
            t_min_ratio: 1e-6,
            tol: 1e-8,
            ic: IcCriteria::default(),
            ic_decades: 8,
            order_tol: COMPARISON_TOLERANCE,
            nodes: None,
            bounds: None,
            sign_checks: Vec::new(),
            notes: Vec::new(),
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: &str| Err(VerifyError::InvalidInput(msg.into()));
        if self.grid_points < 2 {
            return bad("grid_points must be at least 2");
        }
        if !(self.t_min_ratio > 0.0 && self.t_min_ratio < 1.0) {
            return bad("t_min_ratio must lie in (0, 1)");
        }
        let nonnegative = |v: f64| v >= 0.0;
        if !nonnegative(self.tol) || !nonnegative(self.ic.tol_ic) || !nonnegative(self.order_tol) {
            return bad("tolerances must be nonnegative");
        }
        if self.ic_decades < 2 {
            return bad("ic_decades must be at least 2");
        }
        if self.nodes.is_some_and(|n| n < MIN_NODES) {
            return Err(VerifyError::InvalidInput(format!(
                "quadrature needs at least {MIN_NODES} nodes"
            )));
        }
        Ok(())
    }
}

/// Checks that `u` satisfies the problem on a grid of `(0, b]`.
///
/// Structural problems (grid mismatch, unsupported exponents, bad config)
/// are returned as errors. Failures at individual grid points are recorded
/// in the report and fail the verdict.
pub fn verify_solution(
    problem: &IvpProblem,
    u: &FuzzyPowerFunc,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    config.validate()?;
    let grid = problem.grid();
    let foreign = std::iter::once(u)
        .chain(config.bounds.iter().flat_map(|b| [&b.lower, &b.upper]))
        .find(|f| f.grid() != grid);
    if let Some(f) = foreign {
        return Err(FuzzyError::GridMismatch {
            left: grid.level_count(),
            right: f.grid().level_count(),
        }
        .into());
    }
    let q = problem.q();
    let b = problem.b();
    let derivative = u.rl_deriv_power(q)?;
    let t_grid = log_grid(b * config.t_min_ratio, b, config.grid_points);

    let mut residuals = Vec::with_capacity(t_grid.len());
    let mut errors = Vec::new();
    for &t in &t_grid {
        match residual_with(problem, &derivative, u, t, Quadrature::Exact) {
            Ok(r) => residuals.push(Some(r)),
            Err(e) => {
                residuals.push(None);
                errors.push(PointError {
                    t,
                    message: e.to_string(),
                });
            }
        }
    }
    let max_residual = residuals.iter().flatten().fold(0.0, |m: f64, &r| m.max(r));
    debug!("max residual {max_residual:e} over {} points", t_grid.len());

    let quadrature_check = config
        .nodes
        .map(|nodes| quadrature_check(problem, u, &t_grid, nodes, &mut errors));

    let ic_times: Vec<f64> = (1..=config.ic_decades)
        .map(|k| b * 10f64.powi(-(k as i32)))
        .collect();
    let initial_condition = verify_initial(problem, u, &ic_times, config.ic)?;
    let c1mq_member = check_c1mq_membership(u, q);

    let mut warnings = Vec::new();
    let sign_reports: Vec<SignReport> = config
        .sign_checks
        .iter()
        .map(|check| SignReport::new(&check.name, sign_report(&check.coef, &t_grid)))
        .collect();
    for report in &sign_reports {
        if let Some(t) = report.first_negative_t {
            let msg = format!(
                "coefficient `{}` is negative at {} of {} grid points (first at t = {t})",
                report.name,
                report.negative,
                report.points.len()
            );
            warn!("{msg}");
            warnings.push(msg);
        }
    }

    let ordering = match &config.bounds {
        Some(bounds) => {
            let verdicts =
                verify_ordering(&bounds.lower, u, &bounds.upper, &t_grid, config.order_tol)?;
            let first_failure_t = verdicts
                .iter()
                .zip(&t_grid)
                .find(|(v, _)| !v.holds)
                .map(|(_, &t)| t);
            Some(OrderingReport {
                enforced: bounds.enforce,
                holds_everywhere: first_failure_t.is_none(),
                first_failure_t,
                verdicts,
            })
        }
        None => None,
    };

    let mut failures = Vec::new();
    if !errors.is_empty() {
        failures.push(format!("{} grid points failed to evaluate", errors.len()));
    }
    if max_residual > config.tol {
        failures.push(format!(
            "max residual {max_residual:e} exceeds tolerance {:e}",
            config.tol
        ));
    }
    if !initial_condition.converged {
        failures.push("weighted initial condition does not converge".into());
    }
    if !c1mq_member {
        failures.push(format!(
            "solution has an exponent below q - 1 = {}",
            q - 1.0
        ));
    }
    if let Some(o) = ordering
        .as_ref()
        .filter(|o| o.enforced && !o.holds_everywhere)
    {
        failures.push(format!(
            "ordering lower <= u <= upper fails at t = {}",
            o.first_failure_t.unwrap_or(f64::NAN)
        ));
    }
    let verdict = if failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        q,
        b,
        alpha_levels: grid.level_count(),
        tolerance: config.tol,
        t_grid,
        residuals,
        max_residual,
        solution_width: u.max_coef_width(),
        c1mq_member,
        initial_condition,
        sign_reports,
        ordering,
        quadrature_check,
        errors,
        warnings,
        notes: config.notes.clone(),
        failures,
        verdict,
    })
}

fn quadrature_check(
    problem: &IvpProblem,
    u: &FuzzyPowerFunc,
    t_grid: &[f64],
    nodes: usize,
    errors: &mut Vec<PointError>,
) -> QuadratureCheck {
    let mut max_deviation: f64 = 0.0;
    for &t in t_grid {
        let deviation = eval_rhs(problem, u, t, Quadrature::Exact).and_then(|exact| {
            let numeric = eval_rhs(problem, u, t, Quadrature::Numeric { nodes })?;
            Ok(exact.distance_sup(&numeric)?)
        });
        match deviation {
            Ok(d) => max_deviation = max_deviation.max(d),
            Err(e) => errors.push(PointError {
                t,
                message: format!("quadrature cross-check: {e}"),
            }),
        }
    }
    QuadratureCheck {
        nodes,
        max_deviation,
    }
}
