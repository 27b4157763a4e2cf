use serde::{Deserialize, Serialize};

use super::IvpProblem;
use crate::fracalc::{volterra, volterra_exact, CrispCoefFn, FracError, FuzzyPowerFunc};
use crate::fuzzy::{AlphaGrid, FuzzyNumber};

/// Right-hand side `f(t, u, Tu)` as an expression tree.
///
/// JSON uses serde's external tagging: `"u"`, `"tu"`, `{"const": power-func}`,
/// `{"scale": {"coef": [tokens], "expr": ...}}`, `{"sum": [lhs, rhs]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum RhsExpr {
    Const(FuzzyPowerFunc),
    U,
    Tu,
    Scale {
        coef: CrispCoefFn,
        expr: Box<RhsExpr>,
    },
    Sum(Box<RhsExpr>, Box<RhsExpr>),
}

/// How the Volterra term `Tu` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    /// Closed-form kernel moments.
    Exact,
    Numeric {
        nodes: usize,
    },
}

impl RhsExpr {
    pub fn scale(coef: CrispCoefFn, expr: RhsExpr) -> Self {
        RhsExpr::Scale {
            coef,
            expr: Box::new(expr),
        }
    }

    pub fn sum(lhs: RhsExpr, rhs: RhsExpr) -> Self {
        RhsExpr::Sum(Box::new(lhs), Box::new(rhs))
    }

    pub fn contains_tu(&self) -> bool {
        match self {
            RhsExpr::Tu => true,
            RhsExpr::Const(_) | RhsExpr::U => false,
            RhsExpr::Scale { expr, .. } => expr.contains_tu(),
            RhsExpr::Sum(a, b) => a.contains_tu() || b.contains_tu(),
        }
    }

    /// First constant whose α-grid differs from `grid`, if any.
    pub(crate) fn foreign_grid(&self, grid: AlphaGrid) -> Option<AlphaGrid> {
        match self {
            RhsExpr::Const(f) if f.grid() != grid => Some(f.grid()),
            RhsExpr::Const(_) | RhsExpr::U | RhsExpr::Tu => None,
            RhsExpr::Scale { expr, .. } => expr.foreign_grid(grid),
            RhsExpr::Sum(a, b) => a.foreign_grid(grid).or_else(|| b.foreign_grid(grid)),
        }
    }

    /// Levelwise value at `t`. Each `Scale` node applies the sign of its real
    /// coefficient at this `t`, so negative factors swap endpoints and no two
    /// fuzzy terms ever cancel.
    pub fn eval(
        &self,
        problem: &IvpProblem,
        u: &FuzzyPowerFunc,
        t: f64,
        mode: Quadrature,
    ) -> Result<FuzzyNumber, FracError> {
        match self {
            RhsExpr::Const(f) => f.eval(t),
            RhsExpr::U => u.eval(t),
            RhsExpr::Tu => match mode {
                Quadrature::Exact => volterra_exact(u, problem.kernel(), t),
                Quadrature::Numeric { nodes } => volterra(u, problem.kernel(), t, nodes),
            },
            RhsExpr::Scale { coef, expr } => {
                let inner = expr.eval(problem, u, t, mode)?;
                Ok(inner.scalar_mul(coef.eval(t))?)
            }
            RhsExpr::Sum(a, b) => {
                let lhs = a.eval(problem, u, t, mode)?;
                let rhs = b.eval(problem, u, t, mode)?;
                Ok(lhs.add(&rhs)?)
            }
        }
    }
}

/// `f(t, u(t), (Tu)(t))` for the problem's right-hand side.
pub fn eval_rhs(
    problem: &IvpProblem,
    u: &FuzzyPowerFunc,
    t: f64,
    mode: Quadrature,
) -> Result<FuzzyNumber, FracError> {
    problem.rhs().eval(problem, u, t, mode)
}
