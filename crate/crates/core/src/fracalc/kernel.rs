use serde::{Deserialize, Serialize};

use super::FracError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelTerm {
    pub a: f64,
    /// power of `t`
    pub t: f64,
    /// power of `s`, must be `>= 0`
    pub s: f64,
}

/// Volterra kernel `k(t, s) = Σ aᵢ t^{mᵢ} s^{nᵢ}` on `0 ≤ s ≤ t`.
///
/// JSON: the string `"one"` for `k ≡ 1`, otherwise a list of
/// `{"a": .., "t": .., "s": ..}` terms.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    terms: Vec<KernelTerm>,
}

impl Kernel {
    pub fn one() -> Self {
        Self {
            terms: vec![KernelTerm {
                a: 1.0,
                t: 0.0,
                s: 0.0,
            }],
        }
    }

    pub fn new(terms: Vec<KernelTerm>) -> Result<Self, FracError> {
        for term in &terms {
            if !(term.a.is_finite() && term.t.is_finite() && term.s.is_finite()) {
                return Err(FracError::InvalidKernel(
                    "kernel terms must be finite".into(),
                ));
            }
            if term.s < 0.0 {
                return Err(FracError::InvalidKernel(format!(
                    "s-exponent {} is negative",
                    term.s
                )));
            }
        }
        Ok(Self { terms })
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn terms(&self) -> &[KernelTerm] {
        &self.terms
    }

    pub fn eval(&self, t: f64, s: f64) -> f64 {
        self.terms
            .iter()
            .map(|k| k.a * t.powf(k.t) * s.powf(k.s))
            .sum()
    }

    /// `∫₀ᵗ k(t, s) s^p ds` in closed form; needs `p > −1`.
    pub fn moment(&self, t: f64, p: f64) -> f64 {
        self.terms
            .iter()
            .map(|k| {
                let e = k.s + p + 1.0;
                k.a * t.powf(k.t) * t.powf(e) / e
            })
            .sum()
    }

    /// Samples `k(t, ·)` on `samples + 1` uniform points of `[0, t]`.
    pub fn check_nonnegative(&self, t: f64, samples: usize) -> Result<(), FracError> {
        let n = samples.max(1);
        for i in 0..=n {
            let s = t * i as f64 / n as f64;
            self.check_point(t, s)?;
        }
        Ok(())
    }

    pub(crate) fn check_point(&self, t: f64, s: f64) -> Result<f64, FracError> {
        let value = self.eval(t, s);
        if value < 0.0 || value.is_nan() {
            return Err(FracError::KernelSign { t, s, value });
        }
        Ok(value)
    }
}

impl Default for Kernel {
    fn default() -> Self {
        Self::one()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KernelRepr {
    Named(String),
    Terms(Vec<KernelTerm>),
}

impl Serialize for Kernel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_one() {
            KernelRepr::Named("one".into()).serialize(serializer)
        } else {
            KernelRepr::Terms(self.terms.clone()).serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for Kernel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match KernelRepr::deserialize(deserializer)? {
            KernelRepr::Named(name) if name == "one" => Ok(Kernel::one()),
            KernelRepr::Named(name) => Err(serde::de::Error::custom(format!(
                "unknown kernel {name:?}, expected \"one\" or a term list"
            ))),
            KernelRepr::Terms(terms) => Kernel::new(terms).map_err(serde::de::Error::custom),
        }
    }
}
