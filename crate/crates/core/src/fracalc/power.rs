use serde::{Deserialize, Serialize};

use super::{gamma::gamma_ratio, FracError};
use crate::fuzzy::{AlphaGrid, FuzzyError, FuzzyNumber};

/// Exponents closer than this are treated as the same power of `t`.
pub const EXPONENT_TOLERANCE: f64 = 1e-12;

/// One term `c · t^p` with a fuzzy coefficient and real `p > −1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerTerm {
    pub coef: FuzzyNumber,
    pub exponent: f64,
}

impl PowerTerm {
    pub fn new(coef: FuzzyNumber, exponent: f64) -> Self {
        Self { coef, exponent }
    }
}

/// A fuzzy-valued function `t ↦ Σ cᵢ t^{pᵢ}` with pairwise distinct exponents.
///
/// The empty sum is the `0̂`-valued function, which is why the α-grid is stored
/// alongside the terms.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyPowerFunc {
    grid: AlphaGrid,
    terms: Vec<PowerTerm>,
}

impl FuzzyPowerFunc {
    /// Validates the terms and merges equal exponents by fuzzy addition.
    pub fn new(grid: AlphaGrid, terms: Vec<PowerTerm>) -> Result<Self, FracError> {
        let mut merged: Vec<PowerTerm> = Vec::with_capacity(terms.len());
        for term in terms {
            if !term.exponent.is_finite() || term.exponent <= -1.0 {
                return Err(FracError::InvalidExponent(term.exponent));
            }
            if term.coef.grid() != grid {
                return Err(FuzzyError::GridMismatch {
                    left: grid.level_count(),
                    right: term.coef.grid().level_count(),
                }
                .into());
            }
            match merged
                .iter_mut()
                .find(|m| (m.exponent - term.exponent).abs() <= EXPONENT_TOLERANCE)
            {
                Some(existing) => existing.coef = existing.coef.add(&term.coef)?,
                None => merged.push(term),
            }
        }
        Ok(Self {
            grid,
            terms: merged,
        })
    }

    pub fn zero(grid: AlphaGrid) -> Self {
        Self {
            grid,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: FuzzyNumber) -> Self {
        Self::monomial(c, 0.0).expect("exponent 0 is admissible")
    }

    pub fn monomial(c: FuzzyNumber, exponent: f64) -> Result<Self, FracError> {
        let grid = c.grid();
        Self::new(grid, vec![PowerTerm::new(c, exponent)])
    }

    pub fn grid(&self) -> AlphaGrid {
        self.grid
    }

    pub fn terms(&self) -> &[PowerTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<f64> {
        self.terms.iter().map(|t| t.exponent).reduce(f64::min)
    }

    /// Largest α = 0 width over the coefficients.
    pub fn max_coef_width(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef.width(0.0))
            .fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Result<Self, FracError> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.grid, terms)
    }

    /// Scales every coefficient by the real `lambda` (sign-aware).
    pub fn scale(&self, lambda: f64) -> Result<Self, FracError> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(PowerTerm::new(t.coef.scalar_mul(lambda)?, t.exponent)))
            .collect::<Result<Vec<_>, FuzzyError>>()?;
        Self::new(self.grid, terms)
    }

    /// Levelwise value `Σ t^{pᵢ}·cᵢ` at `t`.
    ///
    /// Every multiplier `t^{pᵢ}` is positive for `t > 0`, so no endpoint swap
    /// ever happens here. `t = 0` is allowed only without negative exponents.
    pub fn eval(&self, t: f64) -> Result<FuzzyNumber, FracError> {
        if !t.is_finite() || t < 0.0 {
            return Err(FracError::Domain(format!("cannot evaluate at t = {t}")));
        }
        if t == 0.0 && self.terms.iter().any(|p| p.exponent < 0.0) {
            return Err(FracError::Domain(
                "negative exponent is singular at t = 0".into(),
            ));
        }
        let mut acc = FuzzyNumber::zero_hat(self.grid);
        for term in &self.terms {
            acc = acc.add(&term.coef.scalar_mul(t.powf(term.exponent))?)?;
        }
        Ok(acc)
    }

    /// Adds `weight · u(s)` into the endpoint accumulators; `weight ≥ 0`.
    pub(crate) fn accumulate(&self, s: f64, weight: f64, lower: &mut [f64], upper: &mut [f64]) {
        debug_assert!(weight >= 0.0 && s > 0.0);
        for term in &self.terms {
            let f = weight * s.powf(term.exponent);
            for (acc, c) in lower.iter_mut().zip(term.coef.lower()) {
                *acc += f * c;
            }
            for (acc, c) in upper.iter_mut().zip(term.coef.upper()) {
                *acc += f * c;
            }
        }
    }

    /// Termwise Riemann–Liouville derivative of order `q ∈ (0, 1)`:
    /// `D^q t^p = Γ(p+1)/Γ(p+1−q) · t^{p−q}`.
    ///
    /// Terms with `p = q − 1` are annihilated. Exponents below `q − 1` are
    /// rejected because the multiplier changes sign across the poles of Γ.
    pub fn rl_deriv_power(&self, q: f64) -> Result<Self, FracError> {
        check_order(q)?;
        let mut out = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let p = term.exponent;
            if (p - (q - 1.0)).abs() <= EXPONENT_TOLERANCE {
                continue;
            }
            if p < q - 1.0 {
                return Err(FracError::UnsupportedExponent { exponent: p, q });
            }
            let factor = gamma_ratio(p + 1.0, p + 1.0 - q)?;
            out.push(PowerTerm::new(term.coef.scalar_mul(factor)?, p - q));
        }
        Self::new(self.grid, out)
    }

    /// Termwise Riemann–Liouville integral: `I^q t^p = Γ(p+1)/Γ(p+1+q) · t^{p+q}`.
    pub fn rl_integral_power(&self, q: f64) -> Result<Self, FracError> {
        check_order(q)?;
        let out = self
            .terms
            .iter()
            .map(|term| {
                let p = term.exponent;
                let factor = gamma_ratio(p + 1.0, p + 1.0 + q)?;
                Ok(PowerTerm::new(term.coef.scalar_mul(factor)?, p + q))
            })
            .collect::<Result<Vec<_>, FracError>>()?;
        Self::new(self.grid, out)
    }
}

pub(crate) fn check_order(q: f64) -> Result<(), FracError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(FracError::InvalidOrder(q))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzyPowerFuncRepr {
    levels: usize,
    terms: Vec<PowerTerm>,
}

impl Serialize for FuzzyPowerFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FuzzyPowerFuncRepr {
            levels: self.grid.level_count(),
            terms: self.terms.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FuzzyPowerFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FuzzyPowerFuncRepr::deserialize(deserializer)?;
        let grid = AlphaGrid::with_levels(repr.levels).map_err(serde::de::Error::custom)?;
        FuzzyPowerFunc::new(grid, repr.terms).map_err(serde::de::Error::custom)
    }
}
