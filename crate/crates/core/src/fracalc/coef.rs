use serde::{Deserialize, Serialize};

use super::FracError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefToken {
    pub a: f64,
    pub r: f64,
}

/// A real coefficient function `t ↦ Σ aᵢ t^{rᵢ}` on `t > 0`.
///
/// Serializes as its token list, e.g. `[{"a": 1, "r": -0.5}, {"a": -1, "r": 1}]`
/// for `t^{-1/2} − t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CrispCoefFn {
    tokens: Vec<CoefToken>,
}

impl CrispCoefFn {
    pub fn new(tokens: Vec<CoefToken>) -> Result<Self, FracError> {
        if tokens.iter().any(|t| !t.a.is_finite() || !t.r.is_finite()) {
            return Err(FracError::InvalidCoefficient(
                "coefficient tokens must be finite".into(),
            ));
        }
        Ok(Self { tokens })
    }

    pub fn constant(a: f64) -> Result<Self, FracError> {
        Self::new(vec![CoefToken { a, r: 0.0 }])
    }

    pub fn monomial(a: f64, r: f64) -> Result<Self, FracError> {
        Self::new(vec![CoefToken { a, r }])
    }

    pub fn tokens(&self) -> &[CoefToken] {
        &self.tokens
    }

    /// Multiplies every token by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, FracError> {
        Self::new(
            self.tokens
                .iter()
                .map(|t| CoefToken {
                    a: factor * t.a,
                    r: t.r,
                })
                .collect(),
        )
    }

    /// Pointwise value; callers keep `t > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        self.tokens.iter().map(|tok| tok.a * t.powf(tok.r)).sum()
    }
}

impl<'de> Deserialize<'de> for CrispCoefFn {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let tokens = Vec::<CoefToken>::deserialize(deserializer)?;
        CrispCoefFn::new(tokens).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_token_sum() {
        let f = CrispCoefFn::new(vec![
            CoefToken { a: 1.0, r: -0.5 },
            CoefToken { a: -1.0, r: 1.0 },
        ])
        .unwrap();
        assert!((f.eval(0.25) - (2.0 - 0.25)).abs() < 1e-15);
        assert_eq!(CrispCoefFn::new(vec![]).unwrap().eval(3.0), 0.0);
        assert_eq!(f.scaled(2.0).unwrap().eval(1.0), 0.0);
    }

    #[test]
    fn json_form() {
        let f: CrispCoefFn =
            serde_json::from_str(r#"[{"a": 1, "r": -0.5}, {"a": -1, "r": 1}]"#).unwrap();
        assert_eq!(f.tokens().len(), 2);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"[{"a":1.0,"r":-0.5},{"a":-1.0,"r":1.0}]"#
        );
        assert!(serde_json::from_str::<CrispCoefFn>(r#"[{"a": 1}]"#).is_err());
        assert!(serde_json::from_str::<CrispCoefFn>(r#"[{"a": 1, "r": 0, "x": 2}]"#).is_err());
    }
}
