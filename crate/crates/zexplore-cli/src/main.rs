//! Command-line explorer for the argument-tracking zeta library.
//!
//! Subcommands evaluate the identity registry over grids, locate and
//! classify critical-line zeros, export the datasets behind the numbered
//! survey figures, dump continuous-argument traces, and compare the engine
//! against an embedded high-precision reference table.
//!
//! Exit codes: `0` on success, `1` when a check ran but found failures,
//! `2` on usage or evaluation errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zexplore_core::argtrack::{self, AngleKind, RHO_START};
use zexplore_core::complexfn;
use zexplore_core::counterexample::{self, CounterexampleConfig};
use zexplore_core::identities::{self, EvalStatus};
use zexplore_core::zeros;
use zexplore_core::{ComplexPoint, EvalConfig, EvalError};

/// High-precision reference values for the special-function engine.
const GOLDEN: &str = include_str!("../../../data/golden.csv");

#[derive(Parser)]
#[command(name = "zexplore", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the identity registry over a grid and report residuals.
    Identities(IdentitiesArgs),
    /// Locate and classify critical-line zeros, full and component-wise.
    Zeros(ZerosArgs),
    /// Export the dataset behind one of the numbered figures.
    Figure(FigureArgs),
    /// Export continuous-argument traces along a vertical line.
    Trace(TraceArgs),
    /// Compare the engine against the embedded reference value table.
    OracleCheck,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Smallest abscissa of a custom grid (omit every range flag to use the
    /// built-in standard grid).
    #[arg(long)]
    sigma_min: Option<f64>,
    /// Largest abscissa of a custom grid.
    #[arg(long)]
    sigma_max: Option<f64>,
    /// Smallest ordinate of a custom grid.
    #[arg(long)]
    rho_min: Option<f64>,
    /// Largest ordinate of a custom grid.
    #[arg(long)]
    rho_max: Option<f64>,
    /// Abscissa count for a custom grid.
    #[arg(long, default_value_t = 7)]
    n_sigma: usize,
    /// Ordinate count for a custom grid.
    #[arg(long, default_value_t = 7)]
    n_rho: usize,
    /// Relative residual tolerance; falls back to the ZEXPLORE_TOL
    /// environment variable, then to the built-in default.
    #[arg(long)]
    tol: Option<f64>,
    /// Write the per-evaluation CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ZerosArgs {
    /// Lower end of the scanned ordinate range.
    #[arg(long, default_value_t = 10.0)]
    min: f64,
    /// Upper end of the scanned ordinate range.
    #[arg(long, default_value_t = 30.0)]
    max: f64,
    /// Write the CSV table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure number: 1 = argument-sum overlay on the 1/3 line,
    /// 2 = closed-form comparison around the first zero,
    /// 3 = direction-difference band on [30, 50],
    /// 4 = weighted magnitude ratio along the planted ordinate.
    #[arg(long)]
    n: u32,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    /// Abscissa of the traced vertical line.
    #[arg(long, default_value_t = 0.5)]
    sigma_min: f64,
    /// First exported ordinate.
    #[arg(long, default_value_t = 0.5)]
    rho_min: f64,
    /// Last exported ordinate.
    #[arg(long, default_value_t = 30.0)]
    rho_max: f64,
    /// Number of exported samples.
    #[arg(long, default_value_t = 400)]
    n_rho: usize,
    /// Output base path; every angle kind writes `{out}.{kind}.csv` and
    /// `{out}.{kind}.jumps.csv`.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let cfg = EvalConfig::default();
    match cli.cmd {
        Cmd::Identities(a) => run_identities(a, &cfg),
        Cmd::Zeros(a) => run_zeros(a, &cfg),
        Cmd::Figure(a) => run_figure(a, &cfg),
        Cmd::Trace(a) => run_trace(a, &cfg),
        Cmd::OracleCheck => run_oracle_check(&cfg),
    }
}

fn err_str(e: EvalError) -> String {
    format!("{e}")
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * (i as f64) / ((n - 1) as f64))
        .collect()
}

/// Write `text` to `out` if given, otherwise print it to stdout.  Returns
/// whether a file was written so summaries can pick their stream.
fn emit(out: &Option<PathBuf>, text: &str) -> Result<bool, String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(true)
        }
        None => {
            print!("{text}");
            Ok(false)
        }
    }
}

fn resolve_tol(flag: Option<f64>) -> Result<f64, String> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("ZEXPLORE_TOL") {
            Ok(v) => v
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("ZEXPLORE_TOL is not a number: {v:?}"))?,
            Err(_) => identities::REL_TOL_DEFAULT,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err("tolerance must be a positive finite number".into());
    }
    Ok(tol)
}

fn run_identities(a: IdentitiesArgs, cfg: &EvalConfig) -> Result<bool, String> {
    let tol = resolve_tol(a.tol)?;
    let custom = a.sigma_min.is_some()
        || a.sigma_max.is_some()
        || a.rho_min.is_some()
        || a.rho_max.is_some();
    let points = if custom {
        let smin = a.sigma_min.unwrap_or(0.1);
        let smax = a.sigma_max.unwrap_or(0.9);
        let rmin = a.rho_min.unwrap_or(2.0);
        let rmax = a.rho_max.unwrap_or(47.0);
        if !(smax >= smin) || !(rmax >= rmin) {
            return Err("grid ranges must be nondecreasing".into());
        }
        if !(rmin > 0.0) {
            return Err("grid ordinates must be positive".into());
        }
        let mut pts = Vec::with_capacity(a.n_sigma * a.n_rho);
        for &s in &linspace(smin, smax, a.n_sigma.max(1)) {
            for &r in &linspace(rmin, rmax, a.n_rho.max(1)) {
                pts.push(ComplexPoint::new(s, r));
            }
        }
        pts
    } else {
        identities::standard_grid()
    };

    let evals = identities::sweep(&points, cfg, tol).map_err(err_str)?;
    let mut csv = String::from(identities::CSV_HEADER);
    csv.push('\n');
    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    let mut failures: Vec<String> = Vec::new();
    let mut worst_rel = 0.0f64;
    let mut worst_id = "-";
    for e in &evals {
        match e.status {
            EvalStatus::Passed => passed += 1,
            EvalStatus::Failed => {
                failed += 1;
                failures.push(format!(
                    "  FAILED {} at sigma={:.6} rho={:.6} rel={:.3e}",
                    e.id, e.sigma, e.rho, e.rel_residual
                ));
            }
            EvalStatus::SkippedSingular => skipped += 1,
        }
        if e.status != EvalStatus::SkippedSingular && e.rel_residual > worst_rel {
            worst_rel = e.rel_residual;
            worst_id = e.id;
        }
        csv.push_str(&identities::csv_row(e));
        csv.push('\n');
    }
    let to_file = emit(&a.out, &csv)?;
    let summary = format!(
        "identities: {} evaluations over {} points, {} passed, {} failed, {} skipped (rel tol {:.1e}); worst rel residual {:.3e} [{}]",
        evals.len(),
        points.len(),
        passed,
        failed,
        skipped,
        tol,
        worst_rel,
        worst_id
    );
    if to_file {
        println!("{summary}");
        for line in failures.iter().take(20) {
            println!("{line}");
        }
        if failures.len() > 20 {
            println!("  ... and {} more", failures.len() - 20);
        }
    } else {
        eprintln!("{summary}");
    }
    Ok(failed == 0)
}

fn run_zeros(a: ZerosArgs, cfg: &EvalConfig) -> Result<bool, String> {
    if !(a.min > 0.0 && a.max > a.min) {
        return Err("the scan range needs 0 < min < max".into());
    }
    let mut recs = zeros::find_zeros(a.min, a.max, cfg).map_err(err_str)?;
    recs.extend(zeros::find_half_zeros(a.min, a.max, cfg).map_err(err_str)?);
    recs.sort_by(|x, y| x.rho0.partial_cmp(&y.rho0).expect("finite ordinates"));

    let mut csv = String::from("kind,rho0,n,residual,beta0\n");
    for r in &recs {
        let _ = writeln!(
            csv,
            "{},{:.14e},{},{:.14e},{:.14e}",
            r.kind.as_str(),
            r.rho0,
            r.n,
            r.residual_abs_zeta,
            r.beta0
        );
        if r.anomalous {
            eprintln!(
                "note: anomalous imaginary-component zero at rho = {:.9}",
                r.rho0
            );
        }
    }
    let to_file = emit(&a.out, &csv)?;
    if to_file {
        println!(
            "zeros: {} roots located in [{}, {}]",
            recs.len(),
            a.min,
            a.max
        );
    }
    Ok(true)
}

/// Sample ordinates for a figure track: the conventional anchor ordinate
/// followed by an even grid over the plotted range.  The anchor keeps the
/// branch of the continuous angle tied to the start of the line, and its
/// row is dropped from the export.
fn anchored(lo: f64, hi: f64, n: usize) -> (Vec<f64>, usize) {
    let grid = linspace(lo, hi, n);
    if grid[0] > RHO_START {
        let mut all = Vec::with_capacity(n + 1);
        all.push(RHO_START);
        all.extend_from_slice(&grid);
        (all, 1)
    } else {
        (grid, 0)
    }
}

fn run_figure(a: FigureArgs, cfg: &EvalConfig) -> Result<bool, String> {
    let csv = match a.n {
        1 => {
            let sigma = 1.0 / 3.0;
            let (samples, skip) = anchored(2.0, 14.0, 241);
            let ta = argtrack::track(AngleKind::Alpha, sigma, &samples, cfg).map_err(err_str)?;
            let tt =
                argtrack::track(AngleKind::AlphaTilde, sigma, &samples, cfg).map_err(err_str)?;
            let mut csv = String::from("rho,alpha_sum_tracked,alpha_p_closed_k2,residual\n");
            for i in skip..samples.len() {
                let r = samples[i];
                let sum = ta.angle_samples[i] + tt.angle_samples[i];
                let closed = argtrack::alpha_p_closed(ComplexPoint::new(sigma, r), 2, cfg)
                    .map_err(err_str)?;
                let _ = writeln!(
                    csv,
                    "{:.14e},{:.14e},{:.14e},{:.14e}",
                    r,
                    sum,
                    closed,
                    sum - closed
                );
            }
            csv
        }
        2 => {
            let mut csv = String::from(
                "rho,tracked_neg_alpha,closed_continuous,closed_principal,offset_over_pi\n",
            );
            for &r in &linspace(13.6, 14.7, 56) {
                let c = argtrack::brent_compare(r, cfg).map_err(err_str)?;
                let offset = (c.tracked_neg_alpha - c.closed_continuous) / core::f64::consts::PI;
                let _ = writeln!(
                    csv,
                    "{:.14e},{:.14e},{:.14e},{:.14e},{:.14e}",
                    c.rho, c.tracked_neg_alpha, c.closed_continuous, c.closed_principal, offset
                );
            }
            csv
        }
        3 => {
            let (samples, skip) = anchored(30.0, 50.0, 1001);
            let tb = argtrack::track(AngleKind::Beta, 0.5, &samples, cfg).map_err(err_str)?;
            let ta = argtrack::track(AngleKind::Alpha, 0.5, &samples, cfg).map_err(err_str)?;
            let mut csv = String::from("rho,beta_minus_alpha\n");
            for i in skip..samples.len() {
                let _ = writeln!(
                    csv,
                    "{:.14e},{:.14e}",
                    samples[i],
                    tb.angle_samples[i] - ta.angle_samples[i]
                );
            }
            csv
        }
        4 => {
            let cx = CounterexampleConfig::default();
            let rows = counterexample::figure4_data(&cx, cfg, 0.02, 0.48, 93).map_err(err_str)?;
            let mut csv = String::from("sigma,abs_zc,abs_zc_reflected,ratio\n");
            for row in &rows {
                let _ = writeln!(
                    csv,
                    "{:.14e},{:.14e},{:.14e},{:.14e}",
                    row.sigma, row.abs_value, row.abs_reflected, row.ratio
                );
            }
            csv
        }
        other => return Err(format!("no figure {other}; available figures are 1..=4")),
    };
    let to_file = emit(&a.out, &csv)?;
    if to_file {
        println!("figure {}: wrote {}", a.n, a.out.expect("emitted to a file").display());
    }
    Ok(true)
}

fn run_trace(a: TraceArgs, cfg: &EvalConfig) -> Result<bool, String> {
    if !(a.rho_min > 0.0 && a.rho_max > a.rho_min) {
        return Err("the trace range needs 0 < rho-min < rho-max".into());
    }
    if a.n_rho < 2 {
        return Err("the trace needs at least two samples".into());
    }
    let (samples, skip) = anchored(a.rho_min, a.rho_max, a.n_rho);
    let kinds: [(AngleKind, &str); 6] = [
        (AngleKind::Alpha, "alpha"),
        (AngleKind::Beta, "beta"),
        (AngleKind::GammaArg, "gamma-arg"),
        (AngleKind::Theta, "theta"),
        (AngleKind::AlphaTilde, "alpha-tilde"),
        (AngleKind::BetaTilde, "beta-tilde"),
    ];
    for (kind, name) in kinds {
        let trace = argtrack::track(kind, a.sigma_min, &samples, cfg).map_err(err_str)?;
        let mut csv = String::from("rho,angle,principal_arg,k\n");
        for i in skip..samples.len() {
            let _ = writeln!(
                csv,
                "{:.14e},{:.14e},{:.14e},{}",
                trace.rho_samples[i],
                trace.angle_samples[i],
                trace.principal_samples[i],
                trace.k_at(i)
            );
        }
        let path = format!("{}.{name}.csv", a.out.display());
        fs::write(&path, csv).map_err(|e| format!("cannot write {path}: {e}"))?;

        let mut jumps = String::from("rho,jump_over_pi,parity\n");
        for j in &trace.jump_events {
            let _ = writeln!(jumps, "{:.14e},{},{}", j.rho, j.multiple_of_pi, j.parity);
        }
        let jpath = format!("{}.{name}.jumps.csv", a.out.display());
        fs::write(&jpath, jumps).map_err(|e| format!("cannot write {jpath}: {e}"))?;
        println!("trace {name}: wrote {path} and {jpath}");
    }
    Ok(true)
}

struct QuantityCheck {
    name: &'static str,
    tol: f64,
    max_err: f64,
    count: usize,
}

fn run_oracle_check(cfg: &EvalConfig) -> Result<bool, String> {
    let mut checks = [
        QuantityCheck { name: "zeta", tol: 1e-9, max_err: 0.0, count: 0 },
        QuantityCheck { name: "zeta_d1", tol: 1e-9, max_err: 0.0, count: 0 },
        QuantityCheck { name: "zeta_d2", tol: 1e-9, max_err: 0.0, count: 0 },
        QuantityCheck { name: "gamma", tol: 1e-11, max_err: 0.0, count: 0 },
        QuantityCheck { name: "loggamma", tol: 1e-11, max_err: 0.0, count: 0 },
        QuantityCheck { name: "digamma", tol: 1e-11, max_err: 0.0, count: 0 },
    ];
    for (lineno, line) in GOLDEN.lines().enumerate() {
        if lineno == 0 || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(format!("reference table line {} is malformed", lineno + 1));
        }
        let parse = |s: &str| -> Result<f64, String> {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("reference table line {}: bad number {s:?}", lineno + 1))
        };
        let sigma = parse(fields[0])?;
        let rho = parse(fields[1])?;
        let re = parse(fields[2])?;
        let im = parse(fields[3])?;
        let quantity = fields[4].trim();
        let pt = ComplexPoint::new(sigma, rho);
        let value = match quantity {
            "zeta" => complexfn::zeta(pt, cfg),
            "zeta_d1" => complexfn::zeta_d1(pt, cfg),
            "zeta_d2" => complexfn::zeta_d2(pt, cfg),
            "gamma" => complexfn::gamma(pt),
            "loggamma" => complexfn::log_gamma(pt),
            "digamma" => complexfn::digamma(pt),
            other => {
                return Err(format!(
                    "reference table line {}: unknown quantity {other:?}",
                    lineno + 1
                ))
            }
        }
        .map_err(err_str)?;
        let err = complexfn::modulus(value - zexplore_core::ComplexValue::new(re, im));
        let check = checks
            .iter_mut()
            .find(|c| c.name == quantity)
            .expect("quantity names are covered above");
        check.count += 1;
        if err > check.max_err {
            check.max_err = err;
        }
    }
    let mut all_ok = true;
    for c in &checks {
        let ok = c.count > 0 && c.max_err <= c.tol;
        all_ok &= ok;
        println!(
            "{:<9} {:>3} points  max |err| = {:.3e}  (tol {:.1e})  {}",
            c.name,
            c.count,
            c.max_err,
            c.tol,
            if ok { "ok" } else { "FAIL" }
        );
    }
    println!("oracle-check: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(all_ok)
}
