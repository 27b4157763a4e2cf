//! Gamma function, Riemann–Liouville operators and Volterra integrals acting
//! on fuzzy-coefficient power functions.

mod coef;
mod gamma;
mod kernel;
mod power;
mod quadrature;

pub use coef::{CoefToken, CrispCoefFn};
pub use gamma::{gamma, gamma_ratio};
pub use kernel::{Kernel, KernelTerm};
pub use power::{FuzzyPowerFunc, PowerTerm, EXPONENT_TOLERANCE};
pub use quadrature::{rl_integral_numeric, volterra, volterra_exact, MIN_NODES};

use crate::fuzzy::FuzzyError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FracError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("fractional order must lie in (0, 1), got {0}")]
    InvalidOrder(f64),
    #[error("power exponents must be finite and > -1, got {0}")]
    InvalidExponent(f64),
    #[error("unsupported exponent {exponent}: the power rule is only used for p >= q - 1 = {}", .q - 1.0)]
    UnsupportedExponent { exponent: f64, q: f64 },
    #[error("kernel is negative at (t, s) = ({t}, {s}): {value}")]
    KernelSign { t: f64, s: f64, value: f64 },
    #[error("kernel moment of s^{exponent} at t = {t} is {value}, expected a nonnegative number")]
    NegativeKernelMoment { t: f64, exponent: f64, value: f64 },
    #[error("invalid kernel: {0}")]
    InvalidKernel(String),
    #[error("invalid coefficient function: {0}")]
    InvalidCoefficient(String),
    #[error("quadrature needs at least {min} nodes, got {nodes}")]
    TooFewNodes { nodes: usize, min: usize },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}
