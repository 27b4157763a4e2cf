use super::FuzzyError;

/// Uniform α-grid `α_j = j / M`, `j = 0..=M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlphaGrid {
    intervals: usize,
}

impl AlphaGrid {
    /// Number of subintervals used when the caller does not pick one.
    pub const DEFAULT_INTERVALS: usize = 100;
    /// Upper limit on `M`, so untrusted input cannot request huge allocations.
    pub const MAX_INTERVALS: usize = 1_000_000;

    /// Builds a grid with `intervals` subintervals (`M`), i.e. `M + 1` levels.
    pub fn new(intervals: usize) -> Result<Self, FuzzyError> {
        if intervals == 0 || intervals > Self::MAX_INTERVALS {
            return Err(FuzzyError::InvalidGrid {
                levels: intervals.saturating_add(1),
            });
        }
        Ok(Self { intervals })
    }

    /// Builds a grid from the number of levels `M + 1`.
    pub fn with_levels(levels: usize) -> Result<Self, FuzzyError> {
        if levels < 2 {
            return Err(FuzzyError::InvalidGrid { levels });
        }
        Self::new(levels - 1)
    }

    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn level_count(&self) -> usize {
        self.intervals + 1
    }

    pub fn level(&self, j: usize) -> f64 {
        debug_assert!(j <= self.intervals);
        j as f64 / self.intervals as f64
    }

    pub fn levels(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.intervals).map(move |j| self.level(j))
    }

    /// Locates `alpha` (clamped to `[0, 1]`) as `(j, θ)` with `α = (1 − θ)α_j + θα_{j+1}`.
    pub(crate) fn locate(&self, alpha: f64) -> (usize, f64) {
        let alpha = alpha.clamp(0.0, 1.0);
        let scaled = alpha * self.intervals as f64;
        let j = (scaled.floor() as usize).min(self.intervals - 1);
        (j, scaled - j as f64)
    }
}

impl Default for AlphaGrid {
    fn default() -> Self {
        Self {
            intervals: Self::DEFAULT_INTERVALS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_exact() {
        let grid = AlphaGrid::new(7).unwrap();
        assert_eq!(grid.level(0), 0.0);
        assert_eq!(grid.level(7), 1.0);
        assert_eq!(grid.level_count(), 8);
        let levels: Vec<_> = grid.levels().collect();
        assert!(levels.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_degenerate_grid() {
        assert!(AlphaGrid::new(0).is_err());
        assert!(AlphaGrid::with_levels(1).is_err());
        assert_eq!(AlphaGrid::with_levels(2).unwrap().intervals(), 1);
        assert!(AlphaGrid::new(AlphaGrid::MAX_INTERVALS).is_ok());
        assert!(AlphaGrid::new(AlphaGrid::MAX_INTERVALS + 1).is_err());
        assert!(AlphaGrid::with_levels(usize::MAX).is_err());
    }

    #[test]
    fn locate_clamps_and_interpolates() {
        let grid = AlphaGrid::new(4).unwrap();
        assert_eq!(grid.locate(0.0), (0, 0.0));
        assert_eq!(grid.locate(1.0), (3, 1.0));
        assert_eq!(grid.locate(1.5), (3, 1.0));
        let (j, theta) = grid.locate(0.375);
        assert_eq!(j, 1);
        assert!((theta - 0.5).abs() < 1e-15);
    }
}
