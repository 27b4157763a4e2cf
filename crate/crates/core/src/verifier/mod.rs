//! Encodes the initial value problem and checks candidate solutions.
//!
//! A candidate `u` is accepted when `D^q u(t)` and `f(t, u(t), Tu(t))` agree
//! levelwise on a log-spaced grid, the weighted initial condition
//! `t^{1−q} u(t) → u0` holds, and `u` lies in `C_{1−q}`. Coefficient signs
//! and bracketing orders are measured and reported alongside.

mod checks;
mod problem;
mod report;
mod rhs;
mod verify;

pub use checks::{
    check_c1mq_membership, log_grid, residual, sign_report, verify_initial, verify_ordering,
    IcCriteria, IcPoint, IcReport, Sign, SignPoint, SIGN_THRESHOLD,
};
pub use problem::IvpProblem;
pub use report::{
    OrderingReport, PointError, QuadratureCheck, SignReport, Verdict, VerificationReport,
    REPORT_SCHEMA,
};
pub use rhs::{eval_rhs, Quadrature, RhsExpr};
pub use verify::{verify_solution, Bounds, SignCheck, VerifyConfig};

use crate::fracalc::FracError;
use crate::fuzzy::FuzzyError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Frac(#[from] FracError),
}

impl From<FuzzyError> for VerifyError {
    fn from(e: FuzzyError) -> Self {
        VerifyError::Frac(FracError::Fuzzy(e))
    }
}
