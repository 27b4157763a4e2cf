//! Product-integration quadrature for weakly singular integrals.
//!
//! The interval `[0, t]` is split at `t/2`. The left half is graded toward
//! `s = 0`, where the integrand may behave like `s^p` with `p ∈ (−1, 0)`;
//! the right half is graded toward `s = t`, where the Riemann–Liouville weight
//! `(t − s)^{q−1}` blows up. On every cell the weight is integrated exactly and
//! the fuzzy integrand is frozen at the cell midpoint. All accumulation runs
//! left to right, one pass per call, so results are bit-reproducible.

use super::{gamma, power::check_order, FracError, FuzzyPowerFunc, Kernel};
use crate::fuzzy::FuzzyNumber;

pub const MIN_NODES: usize = 16;

const MAX_GRADING: f64 = 40.0;

/// `(1/Γ(q)) ∫₀ᵗ (t − s)^{q−1} u(s) ds`, computed levelwise by quadrature.
pub fn rl_integral_numeric(
    u: &FuzzyPowerFunc,
    q: f64,
    t: f64,
    nodes: usize,
) -> Result<FuzzyNumber, FracError> {
    check_order(q)?;
    check_args(t, nodes)?;
    if u.is_empty() {
        return Ok(FuzzyNumber::zero_hat(u.grid()));
    }
    let lag = q - 1.0;
    let mesh = two_sided_mesh(t, nodes, left_grading(u), right_grading(lag));
    let norm = gamma(q)?;
    let n = u.grid().level_count();
    let (mut lower, mut upper) = (vec![0.0; n], vec![0.0; n]);
    for cell in mesh.windows(2) {
        let (a, b) = (cell[0], cell[1]);
        let w = lag_weight(t, a, b, lag) / norm;
        u.accumulate(0.5 * (a + b), w, &mut lower, &mut upper);
    }
    Ok(FuzzyNumber::from_levels(u.grid(), lower, upper)?)
}

/// `∫₀ᵗ k(t, s) u(s) ds` by quadrature. Because `k ≥ 0`, the lower endpoint
/// function integrates into the lower endpoint and likewise for the upper.
pub fn volterra(
    u: &FuzzyPowerFunc,
    kernel: &Kernel,
    t: f64,
    nodes: usize,
) -> Result<FuzzyNumber, FracError> {
    check_args(t, nodes)?;
    let mesh = two_sided_mesh(t, nodes, left_grading(u), 1.0);
    for &s in &mesh {
        kernel.check_point(t, s)?;
    }
    if u.is_empty() {
        return Ok(FuzzyNumber::zero_hat(u.grid()));
    }
    let n = u.grid().level_count();
    let (mut lower, mut upper) = (vec![0.0; n], vec![0.0; n]);
    for cell in mesh.windows(2) {
        let (a, b) = (cell[0], cell[1]);
        let mid = 0.5 * (a + b);
        let k = kernel.check_point(t, mid)?;
        u.accumulate(mid, k * (b - a), &mut lower, &mut upper);
    }
    Ok(FuzzyNumber::from_levels(u.grid(), lower, upper)?)
}

/// Closed-form `∫₀ᵗ k(t, s) u(s) ds` for power-function integrands.
pub fn volterra_exact(
    u: &FuzzyPowerFunc,
    kernel: &Kernel,
    t: f64,
) -> Result<FuzzyNumber, FracError> {
    if !t.is_finite() || t <= 0.0 {
        return Err(FracError::Domain(format!(
            "Volterra integral needs t > 0, got {t}"
        )));
    }
    kernel.check_nonnegative(t, 64)?;
    let mut acc = FuzzyNumber::zero_hat(u.grid());
    for term in u.terms() {
        let moment = kernel.moment(t, term.exponent);
        if moment < 0.0 || !moment.is_finite() {
            return Err(FracError::NegativeKernelMoment {
                t,
                exponent: term.exponent,
                value: moment,
            });
        }
        acc = acc.add(&term.coef.scalar_mul(moment)?)?;
    }
    Ok(acc)
}

fn check_args(t: f64, nodes: usize) -> Result<(), FracError> {
    if !t.is_finite() || t <= 0.0 {
        return Err(FracError::Domain(format!(
            "quadrature needs t > 0, got {t}"
        )));
    }
    if nodes < MIN_NODES {
        return Err(FracError::TooFewNodes {
            nodes,
            min: MIN_NODES,
        });
    }
    Ok(())
}

/// Grading toward 0 strong enough that an `s^p` integrand keeps second order.
fn left_grading(u: &FuzzyPowerFunc) -> f64 {
    match u.min_exponent() {
        Some(p) if p < 1.0 => (2.0 / (p + 1.0)).clamp(1.0, MAX_GRADING),
        _ => 1.0,
    }
}

fn right_grading(lag: f64) -> f64 {
    (2.0 / (lag + 2.0)).clamp(1.0, MAX_GRADING)
}

fn two_sided_mesh(t: f64, nodes: usize, left: f64, right: f64) -> Vec<f64> {
    let n_left = nodes / 2;
    let n_right = nodes - n_left;
    let half = 0.5 * t;
    let mut mesh = Vec::with_capacity(nodes + 1);
    for k in 0..=n_left {
        mesh.push(half * (k as f64 / n_left as f64).powf(left));
    }
    for k in (0..n_right).rev() {
        mesh.push(t - half * (k as f64 / n_right as f64).powf(right));
    }
    mesh
}

/// `∫ₐᵇ (t − s)^lag ds` for `lag > −1`, written to avoid cancellation on
/// short cells far from `t`.
fn lag_weight(t: f64, a: f64, b: f64, lag: f64) -> f64 {
    let e = lag + 1.0;
    let dist = t - a;
    let ratio = (b - a) / dist;
    let scale = dist.powf(e) / e;
    if ratio >= 1.0 {
        scale
    } else {
        -scale * (e * (-ratio).ln_1p()).exp_m1()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fracalc::KernelTerm;
    use crate::fuzzy::AlphaGrid;

    fn grid() -> AlphaGrid {
        AlphaGrid::new(100).unwrap()
    }

    fn crisp(r: f64) -> FuzzyNumber {
        FuzzyNumber::crisp(r, grid()).unwrap()
    }

    #[test]
    fn mesh_covers_interval_in_order() {
        let mesh = two_sided_mesh(0.7, 101, 3.0, 1.5);
        assert_eq!(mesh.len(), 102);
        assert_eq!(mesh[0], 0.0);
        assert_eq!(*mesh.last().unwrap(), 0.7);
        assert!(mesh.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn lag_weight_matches_antiderivative() {
        let (t, lag) = (1.0, -0.5);
        let direct = |a: f64, b: f64| ((t - a).powf(0.5) - (t - b).powf(0.5)) / 0.5;
        for (a, b) in [(0.0, 0.5), (0.2, 0.3), (0.9, 1.0)] {
            assert!((lag_weight(t, a, b, lag) - direct(a, b)).abs() < 1e-14);
        }
        // tiny cell near 0: weight ≈ t^{lag} (b − a)
        let w = lag_weight(1.0, 1e-200, 2e-200, -0.5);
        assert!((w / 1e-200 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rl_integral_of_one() {
        let u = FuzzyPowerFunc::constant(crisp(1.0));
        let v = rl_integral_numeric(&u, 0.5, 1.0, 10_000).unwrap();
        // t^q / Γ(q + 1) at t = 1
        let expected = std::f64::consts::FRAC_2_SQRT_PI;
        assert!(((v.lower()[0] - expected) / expected).abs() < 1e-3);
        assert!(v.is_crisp());
    }

    #[test]
    fn rl_integral_of_fuzzy_constant_is_linear() {
        let c = FuzzyNumber::triangular(1.0, 2.0, 3.0, grid()).unwrap();
        let v =
            rl_integral_numeric(&FuzzyPowerFunc::constant(c.clone()), 0.5, 1.0, 10_000).unwrap();
        let expected = c.scalar_mul(std::f64::consts::FRAC_2_SQRT_PI).unwrap();
        assert!(v.distance_sup(&expected).unwrap() < 3.0 * 1.13e-3);
    }

    #[test]
    fn zero_function_integrates_to_zero_hat_exactly() {
        let z = FuzzyPowerFunc::zero(grid());
        assert_eq!(
            rl_integral_numeric(&z, 0.3, 0.5, 64).unwrap(),
            FuzzyNumber::zero_hat(grid())
        );
        assert_eq!(
            volterra(&z, &Kernel::one(), 0.5, 64).unwrap(),
            FuzzyNumber::zero_hat(grid())
        );
    }

    #[test]
    fn singular_rl_integrand() {
        // (1/Γ(0.3)) ∫₀^0.7 (0.7 − s)^{−0.7} s^{−0.6} ds, reference from 30-digit quadrature
        let u = FuzzyPowerFunc::monomial(crisp(1.0), -0.6).unwrap();
        let v = rl_integral_numeric(&u, 0.3, 0.7, 10_000).unwrap();
        let expected = 1.901_823_293_823_672_4;
        assert!(
            ((v.lower()[0] - expected) / expected).abs() < 1e-4,
            "{}",
            v.lower()[0]
        );
    }

    #[test]
    fn volterra_examples() {
        let k = Kernel::one();
        let v = volterra(&FuzzyPowerFunc::constant(crisp(1.0)), &k, 0.5, 64).unwrap();
        assert!((v.lower()[0] - 0.5).abs() < 1e-6);

        let c = FuzzyNumber::triangular(1.0, 2.0, 3.0, grid()).unwrap();
        let v = volterra(&FuzzyPowerFunc::constant(c.clone()), &k, 0.4, 64).unwrap();
        assert!(v.distance_sup(&c.scalar_mul(0.4).unwrap()).unwrap() < 1e-6);

        // ∫₀ᵗ s^{q−1} ds = t^q / q with q = 0.7, t = 0.32
        let u = FuzzyPowerFunc::monomial(crisp(1.0), -0.3).unwrap();
        let v = volterra(&u, &k, 0.32, 10_000).unwrap();
        assert!((v.lower()[0] - 0.643_438_354_142_553_9).abs() < 1e-4);
    }

    #[test]
    fn volterra_exact_matches_quadrature() {
        let k = Kernel::new(vec![KernelTerm {
            a: 1.0,
            t: 0.5,
            s: 1.0,
        }])
        .unwrap();
        let c = FuzzyNumber::triangular(-1.0, 0.5, 2.0, grid()).unwrap();
        let u = FuzzyPowerFunc::monomial(c, -0.4).unwrap();
        let exact = volterra_exact(&u, &k, 0.8).unwrap();
        let numeric = volterra(&u, &k, 0.8, 4000).unwrap();
        assert!(exact.distance_sup(&numeric).unwrap() < 1e-6);
    }

    #[test]
    fn negative_kernel_is_rejected() {
        let k = Kernel::new(vec![KernelTerm {
            a: -1.0,
            t: 0.0,
            s: 0.0,
        }])
        .unwrap();
        let u = FuzzyPowerFunc::constant(crisp(1.0));
        assert!(matches!(
            volterra(&u, &k, 0.5, 64),
            Err(FracError::KernelSign { .. })
        ));
        assert!(matches!(
            volterra_exact(&u, &k, 0.5),
            Err(FracError::KernelSign { .. })
        ));
    }

    #[test]
    fn argument_checks() {
        let u = FuzzyPowerFunc::constant(crisp(1.0));
        assert!(matches!(
            rl_integral_numeric(&u, 0.5, 0.0, 64),
            Err(FracError::Domain(_))
        ));
        assert!(matches!(
            rl_integral_numeric(&u, 0.5, 1.0, 8),
            Err(FracError::TooFewNodes { .. })
        ));
        assert!(matches!(
            volterra(&u, &Kernel::one(), -1.0, 64),
            Err(FracError::Domain(_))
        ));
        assert!(matches!(
            rl_integral_numeric(&u, 1.2, 1.0, 64),
            Err(FracError::InvalidOrder(_))
        ));
    }

    #[test]
    fn volterra_is_second_order_on_smooth_integrands() {
        let c = FuzzyNumber::triangular(0.0, 1.0, 2.0, grid()).unwrap();
        let u = FuzzyPowerFunc::new(
            grid(),
            vec![
                crate::fracalc::PowerTerm::new(c.clone(), 2.0),
                crate::fracalc::PowerTerm::new(c, 3.5),
            ],
        )
        .unwrap();
        let k = Kernel::one();
        let exact = volterra_exact(&u, &k, 0.9).unwrap();
        let err = |n| {
            volterra(&u, &k, 0.9, n)
                .unwrap()
                .distance_sup(&exact)
                .unwrap()
        };
        let (coarse, fine) = (err(64), err(128));
        assert!(coarse / fine >= 3.5, "ratio {}", coarse / fine);
    }
}
