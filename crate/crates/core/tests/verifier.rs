use fuzzfrac_core::fracalc::{FuzzyPowerFunc, Kernel, PowerTerm};
use fuzzfrac_core::fuzzy::{AlphaGrid, FuzzyNumber};
use fuzzfrac_core::presets::{example1, example2, example2_sign_coefficient};
use fuzzfrac_core::verifier::{
    eval_rhs, log_grid, residual, sign_report, verify_initial, verify_ordering, verify_solution,
    IcCriteria, IvpProblem, Quadrature, RhsExpr, Sign, VerifyConfig,
};

fn grid() -> AlphaGrid {
    AlphaGrid::default()
}

fn tri(a: f64, b: f64, c: f64) -> FuzzyNumber {
    FuzzyNumber::triangular(a, b, c, grid()).unwrap()
}

fn preset_config(p: &fuzzfrac_core::presets::Preset) -> VerifyConfig {
    VerifyConfig {
        bounds: Some(p.bounds.clone()),
        sign_checks: p.sign_checks.clone(),
        ..VerifyConfig::default()
    }
}

#[test]
fn example1_rhs_equals_scaled_constant() {
    let q = 0.5;
    let c = tri(1.0, 2.0, 3.0);
    let preset = example1(q, c.clone()).unwrap();
    let t = 0.25;
    let rhs = eval_rhs(&preset.problem, &preset.solution, t, Quadrature::Exact).unwrap();
    let gamma_1mq = std::f64::consts::PI.sqrt();
    let expected = c.scalar_mul(t.powf(-q) / gamma_1mq).unwrap();
    assert!(rhs.distance_sup(&expected).unwrap() < 1e-14);
}

#[test]
fn example1_residual_is_round_off() {
    let preset = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    for t in log_grid(1e-6, preset.problem.b(), 50) {
        let r = residual(&preset.problem, &preset.solution, t, Quadrature::Exact).unwrap();
        assert!(r <= 1e-10, "t = {t}: {r:e}");
    }
}

#[test]
fn example2_residual_at_interior_point() {
    let preset = example2(0.88, tri(0.0, 1.0, 2.0)).unwrap();
    let r = residual(&preset.problem, &preset.solution, 0.2, Quadrature::Exact).unwrap();
    assert!(r <= 1e-10, "{r:e}");
}

#[test]
fn upper_solution_is_not_an_exact_solution() {
    let q = 0.5;
    let preset = example1(q, tri(1.0, 2.0, 3.0)).unwrap();
    let upper = preset.bounds.upper.clone();
    let worst = log_grid(1e-6, preset.problem.b(), 200)
        .into_iter()
        .map(|t| residual(&preset.problem, &upper, t, Quadrature::Exact).unwrap())
        .fold(0.0, f64::max);
    assert!(worst > 0.01, "{worst}");
    let report = verify_solution(&preset.problem, &upper, &VerifyConfig::default()).unwrap();
    assert!(!report.passed());
    assert!(report.max_residual > 0.01);
}

#[test]
fn residual_is_symmetric_in_its_sides() {
    // swapping which side is "derivative" and which is "rhs" is distance symmetry
    let preset = example2(0.7, tri(0.0, 1.0, 2.0)).unwrap();
    let t = 0.3;
    let d = preset
        .solution
        .rl_deriv_power(0.7)
        .unwrap()
        .eval(t)
        .unwrap();
    let f = eval_rhs(&preset.problem, &preset.solution, t, Quadrature::Exact).unwrap();
    let r = residual(&preset.problem, &preset.solution, t, Quadrature::Exact).unwrap();
    assert_eq!(r, f.distance_sup(&d).unwrap());
}

#[test]
fn initial_condition_traces() {
    let ts: Vec<f64> = (1..=6).map(|k| 0.3 * 10f64.powi(-k)).collect();

    // Example 2: t^{1−q}u(t) = t^{1−q}c + c, so the distance is t^{1−q}·max|c|
    let q = 0.88;
    let c = tri(0.0, 1.0, 2.0);
    let preset = example2(q, c).unwrap();
    let ic = verify_initial(
        &preset.problem,
        &preset.solution,
        &ts,
        IcCriteria::default(),
    )
    .unwrap();
    for p in &ic.trace {
        let expected = 2.0 * p.t.powf(1.0 - q);
        assert!(
            (p.distance - expected).abs() <= 1e-12 * expected.max(1.0),
            "{p:?}"
        );
    }
    assert!(ic.converged);
    assert!((ic.slope.unwrap() - (1.0 - q)).abs() < 1e-9);

    // Example 1: t^{1−q}c → 0̂
    let preset = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let ic = verify_initial(
        &preset.problem,
        &preset.solution,
        &ts,
        IcCriteria::default(),
    )
    .unwrap();
    assert!(ic.converged);
    assert!((ic.trace[0].distance - 3.0 * ts[0].sqrt()).abs() < 1e-14);
}

#[test]
fn example2_sign_survey_flags_the_low_window() {
    let ts = log_grid(1e-3, 0.32, 40);
    let high = sign_report(&example2_sign_coefficient(0.88).unwrap(), &ts);
    assert!(high.iter().all(|p| p.sign == Sign::Positive));
    let low = sign_report(&example2_sign_coefficient(0.7).unwrap(), &ts);
    assert_eq!(low.last().unwrap().sign, Sign::Negative);
    assert!(low.first().unwrap().sign == Sign::Positive);
}

#[test]
fn example2_low_q_fails_with_sign_warning() {
    let preset = example2(0.7, tri(0.0, 1.0, 2.0)).unwrap();
    let report =
        verify_solution(&preset.problem, &preset.solution, &preset_config(&preset)).unwrap();
    assert!(!report.passed());
    assert_eq!(report.warnings.len(), 1, "{:?}", report.warnings);
    assert!(report.sign_reports[0].negative > 0);
    // where the coefficient is positive the identity still holds
    for (i, p) in report.sign_reports[0].points.iter().enumerate() {
        if p.sign == Sign::Positive {
            assert!(report.residuals[i].unwrap() <= 1e-10);
        }
    }
}

#[test]
fn orderings_of_both_examples() {
    let p = example1(0.5, FuzzyNumber::zero_hat(grid())).unwrap();
    let ts = log_grid(1e-6, p.problem.b(), 200);
    let v = verify_ordering(&p.bounds.lower, &p.solution, &p.bounds.upper, &ts, 0.0).unwrap();
    assert!(v.iter().all(|v| v.holds));

    let p = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let v = verify_ordering(&p.bounds.lower, &p.solution, &p.bounds.upper, &[0.25], 0.0).unwrap();
    assert!(!v[0].holds);
    let first = v[0].first_violation.unwrap();
    assert_eq!(first.level_index, 0);
    assert!((first.gap - 0.5).abs() < 1e-15);

    let p = example2(0.88, tri(1.0, 2.0, 3.0)).unwrap();
    let ts = log_grid(1e-6, 0.32, 200);
    let v = verify_ordering(&p.bounds.lower, &p.solution, &p.bounds.upper, &ts, 0.0).unwrap();
    assert!(v.iter().all(|v| v.holds));
}

#[test]
fn presets_pass_verification() {
    let p = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let report = verify_solution(&p.problem, &p.solution, &preset_config(&p)).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert!(report.max_residual <= 1e-8);
    // ordering is reported but not enforced for the presets
    assert!(!report.ordering.as_ref().unwrap().holds_everywhere);

    let p = example2(0.88, tri(0.0, 1.0, 2.0)).unwrap();
    let report = verify_solution(&p.problem, &p.solution, &preset_config(&p)).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert!(report.c1mq_member);
}

#[test]
fn enforced_ordering_fails_the_verdict() {
    let p = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let mut config = preset_config(&p);
    config.bounds.as_mut().unwrap().enforce = true;
    let report = verify_solution(&p.problem, &p.solution, &config).unwrap();
    assert!(!report.passed());
}

#[test]
fn reports_are_deterministic() {
    let p = example2(0.8, tri(0.0, 1.0, 2.0)).unwrap();
    let config = VerifyConfig {
        nodes: Some(64),
        ..preset_config(&p)
    };
    let a = verify_solution(&p.problem, &p.solution, &config).unwrap();
    let b = verify_solution(&p.problem, &p.solution, &config).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_csv(), b.to_csv());
}

#[test]
fn refining_the_grid_does_not_raise_the_residual_much() {
    for preset in [
        example1(0.3, tri(-3.0, -2.0, -1.0)).unwrap(),
        example2(0.8, tri(0.0, 1.0, 2.0)).unwrap(),
    ] {
        let coarse = verify_solution(
            &preset.problem,
            &preset.solution,
            &VerifyConfig {
                grid_points: 50,
                ..VerifyConfig::default()
            },
        )
        .unwrap();
        let fine = verify_solution(
            &preset.problem,
            &preset.solution,
            &VerifyConfig {
                grid_points: 400,
                ..VerifyConfig::default()
            },
        )
        .unwrap();
        // both grids share their endpoints, where the round-off is largest
        assert!(fine.max_residual <= 1e-10, "{:e}", fine.max_residual);
        assert!(coarse.max_residual <= 1e-10, "{:e}", coarse.max_residual);
    }
}

#[test]
fn cross_check_deviation_shrinks_with_nodes() {
    let g = grid();
    let problem = IvpProblem::new(
        0.5,
        1.0,
        FuzzyNumber::zero_hat(g),
        RhsExpr::Tu,
        Kernel::one(),
    )
    .unwrap();
    let u = FuzzyPowerFunc::monomial(tri(0.0, 1.0, 2.0), -0.3).unwrap();
    let deviation = |nodes| {
        let config = VerifyConfig {
            nodes: Some(nodes),
            grid_points: 20,
            ..VerifyConfig::default()
        };
        let report = verify_solution(&problem, &u, &config).unwrap();
        report.quadrature_check.unwrap().max_deviation
    };
    let devs: Vec<f64> = [32, 128, 512, 2048].into_iter().map(deviation).collect();
    assert!(devs.windows(2).all(|w| w[1] < w[0]), "{devs:?}");
    assert!(devs[3] < 1e-5, "{devs:?}");
}

#[test]
fn numeric_cross_check_tracks_the_closed_form() {
    let p = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let config = VerifyConfig {
        nodes: Some(512),
        grid_points: 20,
        ..VerifyConfig::default()
    };
    let report = verify_solution(&p.problem, &p.solution, &config).unwrap();
    let check = report.quadrature_check.unwrap();
    assert_eq!(check.nodes, 512);
    // constant integrand: midpoint rule is exact up to round-off
    assert!(check.max_deviation < 1e-12, "{}", check.max_deviation);
}

#[test]
fn structural_errors_are_returned() {
    let p = example1(0.5, tri(1.0, 2.0, 3.0)).unwrap();
    let low = FuzzyPowerFunc::monomial(tri(1.0, 2.0, 3.0), -0.9).unwrap();
    assert!(verify_solution(&p.problem, &low, &VerifyConfig::default()).is_err());
    let other =
        FuzzyPowerFunc::constant(FuzzyNumber::crisp(1.0, AlphaGrid::new(3).unwrap()).unwrap());
    assert!(verify_solution(&p.problem, &other, &VerifyConfig::default()).is_err());
    let bad = VerifyConfig {
        grid_points: 1,
        ..VerifyConfig::default()
    };
    assert!(verify_solution(&p.problem, &p.solution, &bad).is_err());
}

#[test]
fn csv_has_one_row_per_grid_point() {
    let p = example2(0.88, tri(1.0, 2.0, 3.0)).unwrap();
    let config = VerifyConfig {
        grid_points: 10,
        ..preset_config(&p)
    };
    let report = verify_solution(&p.problem, &p.solution, &config).unwrap();
    let csv = report.to_csv();
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "t,residual,coef1_sign,ordering_ok");
    assert_eq!(lines.len(), 11);
    assert!(lines[10].starts_with("0.32,"));
    assert!(lines[10].ends_with(",positive,true"));
}

#[test]
fn solution_with_merged_terms_still_verifies() {
    // c + c·t^{q−1} written with the constant split in two halves
    let q = 0.8;
    let c = tri(0.0, 1.0, 2.0);
    let half = c.scalar_mul(0.5).unwrap();
    let u = FuzzyPowerFunc::new(
        grid(),
        vec![
            PowerTerm::new(half.clone(), 0.0),
            PowerTerm::new(c.clone(), q - 1.0),
            PowerTerm::new(half, 0.0),
        ],
    )
    .unwrap();
    let p = example2(q, c).unwrap();
    let report = verify_solution(&p.problem, &u, &VerifyConfig::default()).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
}
