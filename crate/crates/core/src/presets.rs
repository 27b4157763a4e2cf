//! The two linear example problems, their claimed exact solutions and the
//! bracketing functions that go with them.
//!
//! Example 1, on `(0, b]` with `b = (1/Γ(1−q))^{1/(1+q)}`:
//!
//! ```text
//! D^q u = (t^{−q}/Γ(1−q) − t)·u + ∫₀ᵗ u(s) ds,   t^{1−q} u(t) → 0̂,
//! candidate u = c,   bounds 0̂ ≤ u ≤ t^q.
//! ```
//!
//! Example 2, on `(0, 0.32]`, stated for `0.58 < q ≤ 0.88`:
//!
//! ```text
//! D^q u = c/Γ(1−q)·(t^{−q} − 1 − t^{q−1}) + u/Γ(1−q),   t^{1−q} u(t) → c,
//! candidate u = c + c·t^{q−1},   bounds c·t^{q−1} ≤ u ≤ 10c·t^{q−1}.
//! ```

use crate::fracalc::{gamma, CoefToken, CrispCoefFn, FuzzyPowerFunc, Kernel, PowerTerm};
use crate::fuzzy::FuzzyNumber;
use crate::verifier::{Bounds, IvpProblem, RhsExpr, SignCheck, VerifyError};

pub const EXAMPLE2_END: f64 = 0.32;
/// Exclusive lower and inclusive upper end of the stated `q` window.
pub const EXAMPLE2_Q_WINDOW: (f64, f64) = (0.58, 0.88);

/// A ready-to-verify problem with its candidate solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub problem: IvpProblem,
    pub solution: FuzzyPowerFunc,
    pub bounds: Bounds,
    pub sign_checks: Vec<SignCheck>,
    pub warnings: Vec<String>,
}

fn check_q(q: f64) -> Result<(), VerifyError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(VerifyError::InvalidInput(format!(
            "q must lie in (0, 1), got {q}"
        )))
    }
}

/// Right end `b = (1/Γ(1−q))^{1/(1+q)}`, the root of `t^{−q}/Γ(1−q) − t`.
pub fn example1_endpoint(q: f64) -> Result<f64, VerifyError> {
    check_q(q)?;
    Ok((1.0 / gamma(1.0 - q)?).powf(1.0 / (1.0 + q)))
}

/// `t^{−q}/Γ(1−q) − t`.
pub fn example1_coefficient(q: f64) -> Result<CrispCoefFn, VerifyError> {
    check_q(q)?;
    Ok(CrispCoefFn::new(vec![
        CoefToken {
            a: 1.0 / gamma(1.0 - q)?,
            r: -q,
        },
        CoefToken { a: -1.0, r: 1.0 },
    ])?)
}

/// `t^{−q} − 1 − t^{q−1}`.
pub fn example2_sign_coefficient(q: f64) -> Result<CrispCoefFn, VerifyError> {
    check_q(q)?;
    Ok(CrispCoefFn::new(vec![
        CoefToken { a: 1.0, r: -q },
        CoefToken { a: -1.0, r: 0.0 },
        CoefToken {
            a: -1.0,
            r: q - 1.0,
        },
    ])?)
}

pub fn example2_in_window(q: f64) -> bool {
    q > EXAMPLE2_Q_WINDOW.0 && q <= EXAMPLE2_Q_WINDOW.1
}

pub fn example1(q: f64, c: FuzzyNumber) -> Result<Preset, VerifyError> {
    let b = example1_endpoint(q)?;
    let grid = c.grid();
    let coefficient = example1_coefficient(q)?;
    let rhs = RhsExpr::sum(RhsExpr::scale(coefficient.clone(), RhsExpr::U), RhsExpr::Tu);
    let problem = IvpProblem::new(q, b, FuzzyNumber::zero_hat(grid), rhs, Kernel::one())?;
    let upper = FuzzyPowerFunc::monomial(FuzzyNumber::crisp(1.0, grid)?, q)?;
    Ok(Preset {
        problem,
        solution: FuzzyPowerFunc::constant(c),
        bounds: Bounds {
            lower: FuzzyPowerFunc::zero(grid),
            upper,
            enforce: false,
        },
        sign_checks: vec![SignCheck {
            name: "t^-q/Gamma(1-q) - t".into(),
            coef: coefficient,
        }],
        warnings: Vec::new(),
    })
}

pub fn example2(q: f64, c: FuzzyNumber) -> Result<Preset, VerifyError> {
    check_q(q)?;
    let grid = c.grid();
    let inv_gamma = 1.0 / gamma(1.0 - q)?;
    let sign_coefficient = example2_sign_coefficient(q)?;
    let rhs = RhsExpr::sum(
        RhsExpr::scale(
            sign_coefficient.scaled(inv_gamma)?,
            RhsExpr::Const(FuzzyPowerFunc::constant(c.clone())),
        ),
        RhsExpr::scale(CrispCoefFn::constant(inv_gamma)?, RhsExpr::U),
    );
    let problem = IvpProblem::new(q, EXAMPLE2_END, c.clone(), rhs, Kernel::one())?;
    let solution = FuzzyPowerFunc::new(
        grid,
        vec![
            PowerTerm::new(c.clone(), 0.0),
            PowerTerm::new(c.clone(), q - 1.0),
        ],
    )?;
    let lower = FuzzyPowerFunc::monomial(c.clone(), q - 1.0)?;
    let upper = FuzzyPowerFunc::monomial(c.scalar_mul(10.0)?, q - 1.0)?;
    let mut warnings = Vec::new();
    if !example2_in_window(q) {
        warnings.push(format!(
            "q = {q} lies outside the preset window {} < q <= {}",
            EXAMPLE2_Q_WINDOW.0, EXAMPLE2_Q_WINDOW.1
        ));
    }
    Ok(Preset {
        problem,
        solution,
        bounds: Bounds {
            lower,
            upper,
            enforce: false,
        },
        sign_checks: vec![SignCheck {
            name: "t^-q - 1 - t^(q-1)".into(),
            coef: sign_coefficient,
        }],
        warnings,
    })
}
