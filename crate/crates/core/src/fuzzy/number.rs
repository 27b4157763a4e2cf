use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlphaGrid, FuzzyError, OrderVerdict, OrderViolation, Side};

/// Absolute tolerance for construction-time validation and crispness tests.
pub const COMPARISON_TOLERANCE: f64 = 1e-12;

/// A fuzzy number in L-U form: `lower[j] = x_l(α_j)`, `upper[j] = x_r(α_j)`.
///
/// Values between grid levels are linear interpolations, so the continuity
/// conditions of the parametric representation hold automatically. Every
/// constructor validates monotonicity and the `α = 1` crossing condition.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: AlphaGrid,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

/// What [`FuzzyNumber::repair`] had to change.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct RepairSummary {
    pub adjusted: bool,
    pub max_shift: f64,
}

impl FuzzyNumber {
    pub fn from_levels(
        grid: AlphaGrid,
        lower: Vec<f64>,
        upper: Vec<f64>,
    ) -> Result<Self, FuzzyError> {
        check_lengths(grid, &lower, &upper)?;
        if lower.iter().chain(&upper).any(|v| !v.is_finite()) {
            return Err(FuzzyError::NonFinite);
        }
        for j in 1..lower.len() {
            if lower[j] < lower[j - 1] - COMPARISON_TOLERANCE {
                return Err(FuzzyError::MonotonicityViolation {
                    side: Side::Lower,
                    index: j,
                });
            }
        }
        for j in 1..upper.len() {
            if upper[j] > upper[j - 1] + COMPARISON_TOLERANCE {
                return Err(FuzzyError::MonotonicityViolation {
                    side: Side::Upper,
                    index: j,
                });
            }
        }
        let top = grid.intervals();
        if lower[top] > upper[top] + COMPARISON_TOLERANCE {
            return Err(FuzzyError::CrossingViolation {
                lower: lower[top],
                upper: upper[top],
            });
        }
        Ok(Self { grid, lower, upper })
    }

    /// Projects noisy endpoint data onto the nearest admissible shape.
    ///
    /// `lower` becomes its running maximum and `upper` its running minimum in
    /// α; a crossing at the core is resolved at the midpoint. The returned
    /// summary must be surfaced to users so repaired data is never silent.
    pub fn repair(
        grid: AlphaGrid,
        lower: Vec<f64>,
        upper: Vec<f64>,
    ) -> Result<(Self, RepairSummary), FuzzyError> {
        check_lengths(grid, &lower, &upper)?;
        if lower.iter().chain(&upper).any(|v| !v.is_finite()) {
            return Err(FuzzyError::NonFinite);
        }
        let mut lo = lower.clone();
        let mut up = upper.clone();
        for j in 1..lo.len() {
            lo[j] = lo[j].max(lo[j - 1]);
            up[j] = up[j].min(up[j - 1]);
        }
        let top = grid.intervals();
        if lo[top] > up[top] {
            let mid = 0.5 * (lo[top] + up[top]);
            for v in &mut lo {
                *v = v.min(mid);
            }
            for v in &mut up {
                *v = v.max(mid);
            }
        }
        let max_shift = lower
            .iter()
            .zip(&lo)
            .chain(upper.iter().zip(&up))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let summary = RepairSummary {
            adjusted: max_shift > 0.0,
            max_shift,
        };
        Ok((
            Self {
                grid,
                lower: lo,
                upper: up,
            },
            summary,
        ))
    }

    /// Triangular number `(a, b, c)`: support `[a, c]`, core `{b}`.
    pub fn triangular(a: f64, b: f64, c: f64, grid: AlphaGrid) -> Result<Self, FuzzyError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(FuzzyError::NonFinite);
        }
        if a > b || b > c {
            return Err(FuzzyError::InvalidOrdering { a, b, c });
        }
        let (left, right) = (b - a, c - b);
        if !(left.is_finite() && right.is_finite()) {
            return Err(FuzzyError::NonFinite);
        }
        // anchored at the core so α = 1 is exact however wide the support;
        // the clamp keeps α = 0 exact without breaking monotonicity
        let lower = grid
            .levels()
            .enumerate()
            .map(|(j, al)| {
                if j == 0 {
                    a
                } else {
                    a.max(b - (1.0 - al) * left)
                }
            })
            .collect();
        let upper = grid
            .levels()
            .enumerate()
            .map(|(j, al)| {
                if j == 0 {
                    c
                } else {
                    c.min(b + (1.0 - al) * right)
                }
            })
            .collect();
        Ok(Self { grid, lower, upper })
    }

    pub fn crisp(r: f64, grid: AlphaGrid) -> Result<Self, FuzzyError> {
        if !r.is_finite() {
            return Err(FuzzyError::NonFinite);
        }
        let n = grid.level_count();
        Ok(Self {
            grid,
            lower: vec![r; n],
            upper: vec![r; n],
        })
    }

    /// The neutral element `0̂` of fuzzy addition.
    pub fn zero_hat(grid: AlphaGrid) -> Self {
        let n = grid.level_count();
        Self {
            grid,
            lower: vec![0.0; n],
            upper: vec![0.0; n],
        }
    }

    pub fn grid(&self) -> AlphaGrid {
        self.grid
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// `[x]^α` at an arbitrary α, linearly interpolated between grid levels.
    pub fn level_set(&self, alpha: f64) -> (f64, f64) {
        let (j, theta) = self.grid.locate(alpha);
        // exact at both grid nodes, also when neighbours differ by many orders
        let lerp = |v: &[f64]| (1.0 - theta) * v[j] + theta * v[j + 1];
        (lerp(&self.lower), lerp(&self.upper))
    }

    pub fn width(&self, alpha: f64) -> f64 {
        let (l, u) = self.level_set(alpha);
        u - l
    }

    pub fn is_crisp(&self) -> bool {
        self.width(0.0) <= COMPARISON_TOLERANCE
    }

    /// Largest endpoint magnitude over all levels.
    pub fn magnitude(&self) -> f64 {
        self.lower
            .iter()
            .chain(&self.upper)
            .fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, FuzzyError> {
        self.same_grid(other)?;
        let lower = self
            .lower
            .iter()
            .zip(&other.lower)
            .map(|(a, b)| a + b)
            .collect();
        let upper = self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            grid: self.grid,
            lower,
            upper,
        })
    }

    /// `λ·x`: endpoints scale in place for `λ ≥ 0` and swap roles for `λ < 0`.
    pub fn scalar_mul(&self, lambda: f64) -> Result<Self, FuzzyError> {
        if !lambda.is_finite() {
            return Err(FuzzyError::NonFinite);
        }
        let scale = |v: &[f64]| -> Vec<f64> { v.iter().map(|x| lambda * x).collect() };
        let (lower, upper) = if lambda >= 0.0 {
            (scale(&self.lower), scale(&self.upper))
        } else {
            (scale(&self.upper), scale(&self.lower))
        };
        if lower.iter().chain(&upper).any(|v| !v.is_finite()) {
            return Err(FuzzyError::NonFinite);
        }
        Ok(Self {
            grid: self.grid,
            lower,
            upper,
        })
    }

    /// Levelwise endpoint order: `x ≤ y` iff `x_l ≤ y_l + tol` and `x_r ≤ y_r + tol`
    /// at every grid level. Reports the first violation in α order, lower side first.
    pub fn leq(&self, other: &Self, tol: f64) -> Result<OrderVerdict, FuzzyError> {
        self.same_grid(other)?;
        for j in 0..self.grid.level_count() {
            for (side, a, b) in [
                (Side::Lower, self.lower[j], other.lower[j]),
                (Side::Upper, self.upper[j], other.upper[j]),
            ] {
                if a > b + tol {
                    return Ok(OrderVerdict::violated(OrderViolation {
                        level_index: j,
                        side,
                        gap: a - b,
                    }));
                }
            }
        }
        Ok(OrderVerdict::holds())
    }

    /// `sup_α max(|x_l − y_l|, |x_r − y_r|)` over the grid levels.
    pub fn distance_sup(&self, other: &Self) -> Result<f64, FuzzyError> {
        self.same_grid(other)?;
        let gaps = self
            .lower
            .iter()
            .zip(&other.lower)
            .chain(self.upper.iter().zip(&other.upper))
            .map(|(a, b)| (a - b).abs());
        Ok(gaps.fold(0.0, f64::max))
    }

    fn same_grid(&self, other: &Self) -> Result<(), FuzzyError> {
        if self.grid != other.grid {
            return Err(FuzzyError::GridMismatch {
                left: self.grid.level_count(),
                right: other.grid.level_count(),
            });
        }
        Ok(())
    }
}

fn check_lengths(grid: AlphaGrid, lower: &[f64], upper: &[f64]) -> Result<(), FuzzyError> {
    let expected = grid.level_count();
    if lower.len() != expected || upper.len() != expected {
        return Err(FuzzyError::LengthMismatch {
            expected,
            lower: lower.len(),
            upper: upper.len(),
        });
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzyNumberRepr {
    levels: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Serialize for FuzzyNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FuzzyNumberRepr {
            levels: self.grid.level_count(),
            lower: self.lower.clone(),
            upper: self.upper.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FuzzyNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FuzzyNumberRepr::deserialize(deserializer)?;
        let grid = AlphaGrid::with_levels(repr.levels).map_err(serde::de::Error::custom)?;
        FuzzyNumber::from_levels(grid, repr.lower, repr.upper).map_err(serde::de::Error::custom)
    }
}
