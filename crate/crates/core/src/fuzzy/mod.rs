//! Fuzzy numbers in L-U (parametric) form on a uniform α-grid.
//!
//! A fuzzy number is stored as the two endpoint arrays of its α-level sets
//! `[x]^α = [x_l(α), x_r(α)]`. All arithmetic is levelwise interval
//! arithmetic: addition adds endpoints, scaling by a negative real swaps them.
//! There is no subtraction. `x + (−1)·x` is not `0̂` unless `x` is crisp.

mod grid;
mod number;
mod order;
mod parse;

pub use grid::AlphaGrid;
pub use number::{FuzzyNumber, RepairSummary, COMPARISON_TOLERANCE};
pub use order::{OrderVerdict, OrderViolation};
pub use parse::parse_shorthand;

use std::fmt;

/// Which endpoint function of a fuzzy number an error or verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Lower => f.write_str("lower"),
            Side::Upper => f.write_str("upper"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FuzzyError {
    #[error("{side} endpoint function is not monotone at level index {index}")]
    MonotonicityViolation { side: Side, index: usize },
    #[error("lower endpoint {lower} exceeds upper endpoint {upper} at α = 1")]
    CrossingViolation { lower: f64, upper: f64 },
    #[error("non-finite value in fuzzy number data")]
    NonFinite,
    #[error("triangular parameters must satisfy a <= b <= c, got ({a}, {b}, {c})")]
    InvalidOrdering { a: f64, b: f64, c: f64 },
    #[error("fuzzy numbers live on different α-grids ({left} vs {right} levels)")]
    GridMismatch { left: usize, right: usize },
    #[error("expected {expected} endpoint values, got {lower} lower and {upper} upper")]
    LengthMismatch {
        expected: usize,
        lower: usize,
        upper: usize,
    },
    #[error("an α-grid needs between 2 and 1000001 levels, got {levels}")]
    InvalidGrid { levels: usize },
    #[error("cannot parse fuzzy number {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
