use serde::{Deserialize, Serialize};

use super::{RhsExpr, VerifyError};
use crate::fracalc::Kernel;
use crate::fuzzy::{AlphaGrid, FuzzyNumber};

/// `D^q u = f(t, u, Tu)` on `(0, b]` with `lim_{t→0+} t^{1−q} u(t) = u0`,
/// `Tu(t) = ∫₀ᵗ k(t, s) u(s) ds`.
#[derive(Debug, Clone, PartialEq)]
pub struct IvpProblem {
    q: f64,
    b: f64,
    u0: FuzzyNumber,
    rhs: RhsExpr,
    kernel: Kernel,
}

impl IvpProblem {
    pub fn new(
        q: f64,
        b: f64,
        u0: FuzzyNumber,
        rhs: RhsExpr,
        kernel: Kernel,
    ) -> Result<Self, VerifyError> {
        if !(q > 0.0 && q < 1.0) {
            return Err(VerifyError::InvalidProblem(format!(
                "order q must lie in (0, 1), got {q}"
            )));
        }
        if !b.is_finite() || b <= 0.0 {
            return Err(VerifyError::InvalidProblem(format!(
                "domain end b must be positive and finite, got {b}"
            )));
        }
        if let Some(other) = rhs.foreign_grid(u0.grid()) {
            return Err(VerifyError::InvalidProblem(format!(
                "right-hand side constant uses {} α-levels but u0 uses {}",
                other.level_count(),
                u0.grid().level_count()
            )));
        }
        Ok(Self {
            q,
            b,
            u0,
            rhs,
            kernel,
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn u0(&self) -> &FuzzyNumber {
        &self.u0
    }

    pub fn rhs(&self) -> &RhsExpr {
        &self.rhs
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn grid(&self) -> AlphaGrid {
        self.u0.grid()
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IvpProblemRepr {
    q: f64,
    b: f64,
    u0: FuzzyNumber,
    rhs: RhsExpr,
    #[serde(default)]
    kernel: Kernel,
}

impl Serialize for IvpProblem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        IvpProblemRepr {
            q: self.q,
            b: self.b,
            u0: self.u0.clone(),
            rhs: self.rhs.clone(),
            kernel: self.kernel.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IvpProblem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = IvpProblemRepr::deserialize(deserializer)?;
        IvpProblem::new(r.q, r.b, r.u0, r.rhs, r.kernel).map_err(serde::de::Error::custom)
    }
}
