//! Verification toolkit for fuzzy fractional integrodifferential equations.
//!
//! * [`fuzzy`]: fuzzy numbers in L-U form with levelwise arithmetic.
//! * [`fracalc`]: gamma function, Riemann–Liouville operators on fuzzy power
//!   functions (closed form and quadrature), Volterra integrals.
//! * [`verifier`]: initial value problems as data and a residual-based
//!   solution checker with sign, ordering and initial-condition reports.
//! * [`presets`]: the two linear example problems with their candidate
//!   solutions and bracketing functions.
//!
//! Nothing in this crate ever cancels `x − x` to `0̂`: every identity is
//! checked endpoint by endpoint with the sign of each real multiplier
//! deciding which endpoint goes where.

pub mod fracalc;
pub mod fuzzy;
pub mod presets;
pub mod verifier;

pub use fracalc::{CrispCoefFn, FracError, FuzzyPowerFunc, Kernel, PowerTerm};
pub use fuzzy::{AlphaGrid, FuzzyError, FuzzyNumber, OrderVerdict};
pub use verifier::{IvpProblem, RhsExpr, VerificationReport, VerifyConfig, VerifyError};
