use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use fuzzfrac_core::fuzzy::{parse_shorthand, AlphaGrid, FuzzyNumber};
use fuzzfrac_core::presets::{self, Preset};
use fuzzfrac_core::verifier::{verify_solution, IvpProblem, VerificationReport, VerifyConfig};
use fuzzfrac_core::FuzzyPowerFunc;

const MIN_GRID_POINTS: usize = 10;

#[derive(Parser)]
#[command(
    name = "fuzzfrac",
    version,
    about = "Verify candidate solutions of fuzzy fractional IVPs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Linear problem with a Volterra term on (0, b], candidate u = c.
    Example1(PresetArgs),
    /// Problem on (0, 0.32], candidate u = c + c·t^(q-1).
    Example2(PresetArgs),
    /// Print a witness for one of the fuzzy-arithmetic properties.
    Demo(DemoArgs),
    /// Verify a solution file against a problem file.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PresetArgs {
    #[arg(long)]
    q: f64,
    /// Fuzzy constant: tri:a,b,c | crisp:r | zero
    #[arg(long, default_value = "tri:1,2,3")]
    c: String,
    #[arg(long, default_value_t = 101)]
    alpha_levels: usize,
    /// Write the preset problem as JSON.
    #[arg(long)]
    emit_problem: Option<PathBuf>,
    /// Write the candidate solution as JSON.
    #[arg(long)]
    emit_solution: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    problem_file: PathBuf,
    solution_file: PathBuf,
    /// Expected number of α-levels; the files must agree.
    #[arg(long)]
    alpha_levels: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Number of log-spaced residual points.
    #[arg(long, default_value_t = 200)]
    grid: usize,
    /// Cross-check the Volterra term by quadrature with this many nodes.
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Report destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    NoOpposite,
    Distributivity,
}

#[derive(Args)]
struct DemoArgs {
    #[arg(value_enum)]
    name: Demo,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    b: f64,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FUZZFRAC_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// `Ok(passed)` after a completed run, `Err` on any input error.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Example1(args) => run_preset(args, presets::example1),
        Command::Example2(args) => run_preset(args, presets::example2),
        Command::Demo(args) => {
            demo(args)?;
            Ok(true)
        }
        Command::Verify(args) => run_verify(args),
    }
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        bail!("--q must lie in (0, 1), got {q}");
    }
    Ok(())
}

fn config(common: &CommonArgs) -> Result<VerifyConfig> {
    if common.grid < MIN_GRID_POINTS {
        bail!(
            "--grid must be at least {MIN_GRID_POINTS}, got {}",
            common.grid
        );
    }
    Ok(VerifyConfig {
        grid_points: common.grid,
        tol: common.tol,
        nodes: common.nodes,
        ..VerifyConfig::default()
    })
}

fn run_preset(
    args: PresetArgs,
    build: fn(f64, FuzzyNumber) -> Result<Preset, fuzzfrac_core::VerifyError>,
) -> Result<bool> {
    check_q(args.q)?;
    let grid = AlphaGrid::with_levels(args.alpha_levels).with_context(|| {
        format!(
            "--alpha-levels must be at least 2, got {}",
            args.alpha_levels
        )
    })?;
    let c = parse_shorthand(&args.c, grid).context("--c")?;
    let preset = build(args.q, c)?;
    for w in &preset.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(path) = &args.emit_problem {
        write_file(path, &preset.problem.to_json_pretty())?;
    }
    if let Some(path) = &args.emit_solution {
        let text = serde_json::to_string_pretty(&preset.solution)?;
        write_file(path, &text)?;
    }
    let mut config = config(&args.common)?;
    config.bounds = Some(preset.bounds.clone());
    config.sign_checks = preset.sign_checks.clone();
    let mut report = verify_solution(&preset.problem, &preset.solution, &config)?;
    report.warnings.extend(preset.warnings.iter().cloned());
    finish(&report, &args.common)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    // serde_json errors carry "at line L column C"
    serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
}

fn run_verify(args: VerifyArgs) -> Result<bool> {
    let problem: IvpProblem = read_json(&args.problem_file)?;
    let solution: FuzzyPowerFunc = read_json(&args.solution_file)?;
    if let Some(levels) = args.alpha_levels {
        let found = problem.grid().level_count();
        if levels != found {
            bail!("--alpha-levels {levels} does not match the problem file ({found} levels)");
        }
    }
    info!(
        "loaded problem with q = {}, b = {}",
        problem.q(),
        problem.b()
    );
    let config = config(&args.common)?;
    let report = verify_solution(&problem, &solution, &config)?;
    finish(&report, &args.common)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn finish(report: &VerificationReport, common: &CommonArgs) -> Result<bool> {
    let body = match common.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &common.out {
        Some(path) => write_file(path, &body)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            if !body.ends_with('\n') {
                out.write_all(b"\n")?;
            }
        }
    }
    summarize(report);
    Ok(report.passed())
}

fn summarize(report: &VerificationReport) {
    eprintln!("b = {}", report.b);
    eprintln!(
        "max residual = {:.3e} (tol {:e}) over {} points",
        report.max_residual,
        report.tolerance,
        report.t_grid.len()
    );
    if let Some(o) = &report.ordering {
        match o.first_failure_t {
            None => eprintln!("ordering holds on the grid"),
            Some(t) => eprintln!("ordering fails first at t = {t:e}"),
        }
    }
    for s in &report.sign_reports {
        eprintln!(
            "sign of {}: {} positive, {} zero, {} negative",
            s.name, s.positive, s.zero, s.negative
        );
    }
    for w in &report.warnings {
        if !w.contains("preset window") {
            eprintln!("warning: {w}");
        }
    }
    for f in &report.failures {
        eprintln!("failure: {f}");
    }
    eprintln!("verdict: {}", if report.passed() { "pass" } else { "fail" });
}

fn triple(x: &FuzzyNumber) -> String {
    let last = x.lower().len() - 1;
    if x.lower()[last] == x.upper()[last] {
        format!("({}, {}, {})", x.lower()[0], x.lower()[last], x.upper()[0])
    } else {
        format!(
            "[{}, {}] at alpha 0, [{}, {}] at alpha 1",
            x.lower()[0],
            x.upper()[0],
            x.lower()[last],
            x.upper()[last]
        )
    }
}

fn demo(args: DemoArgs) -> Result<()> {
    let grid = AlphaGrid::default();
    let x = FuzzyNumber::triangular(0.0, 1.0, 2.0, grid)?;
    match args.name {
        Demo::NoOpposite => {
            let s = x.add(&x.scalar_mul(-1.0)?)?;
            let d = s.distance_sup(&FuzzyNumber::zero_hat(grid))?;
            println!("x = {}", triple(&x));
            println!("x + (-1)x = {}", triple(&s));
            println!("distance to 0^ = {d}");
            println!("width(x, 0) = {}", x.width(0.0));
        }
        Demo::Distributivity => {
            let (a, b) = (args.a, args.b);
            let lhs = x.scalar_mul(a + b)?;
            let rhs = x.scalar_mul(a)?.add(&x.scalar_mul(b)?)?;
            let gap = lhs.distance_sup(&rhs)?;
            println!("x = {}", triple(&x));
            println!("({a} + {b})x = {}", triple(&lhs));
            println!("{a}x + {b}x = {}", triple(&rhs));
            println!("distance = {gap}");
            // rounding in a·x + b·x is a few ulps of the operands
            let scale = (a.abs() + b.abs()) * x.magnitude();
            let equal = gap <= 4.0 * f64::EPSILON * scale;
            println!(
                "sides {}",
                if equal {
                    "equal (within 4 ulps)"
                } else {
                    "differ"
                }
            );
        }
    }
    Ok(())
}
