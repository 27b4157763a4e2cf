use serde::Serialize;

use super::Side;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderViolation {
    pub level_index: usize,
    pub side: Side,
    /// Amount by which the left endpoint exceeds the right one.
    pub gap: f64,
}

/// Outcome of a levelwise `x ≤ y` test. `holds` iff `first_violation` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderVerdict {
    pub holds: bool,
    pub first_violation: Option<OrderViolation>,
}

impl OrderVerdict {
    pub fn holds() -> Self {
        Self {
            holds: true,
            first_violation: None,
        }
    }

    pub fn violated(violation: OrderViolation) -> Self {
        Self {
            holds: false,
            first_violation: Some(violation),
        }
    }

    /// Keeps the first failing verdict of the two.
    pub fn and(self, other: Self) -> Self {
        if self.holds {
            other
        } else {
            self
        }
    }
}
