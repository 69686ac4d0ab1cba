//! End-to-end checks of the `zexplore` binary: exit codes, CSV shapes,
//! flag and environment handling, and file outputs.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_zexplore"));
    c.env_remove("ZEXPLORE_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("zexplore-test-{tag}-{}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn identities_small_grid_passes() {
    let o = run(&[
        "identities",
        "--sigma-min", "0.4", "--sigma-max", "0.6", "--n-sigma", "2",
        "--rho-min", "8", "--rho-max", "9", "--n-rho", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.starts_with("id,sigma,rho,lhs_re,lhs_im,rhs_re,rhs_im,abs_res,rel_res,status"));
    assert!(out.contains(",passed"));
    assert!(!out.contains(",failed"));
}

#[test]
fn identities_env_tolerance_can_force_failures() {
    let o = bin()
        .env("ZEXPLORE_TOL", "1e-14")
        .args(["identities", "--sigma-min", "0.4", "--sigma-max", "0.6", "--n-sigma", "2",
               "--rho-min", "8", "--rho-max", "9", "--n-rho", "2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1), "a 1e-14 demand must flag the FD routes");
    assert!(stdout(&o).contains(",failed"));
}

#[test]
fn identities_flag_overrides_environment() {
    let o = bin()
        .env("ZEXPLORE_TOL", "not-a-number")
        .args(["identities", "--tol", "1e-7", "--sigma-min", "0.5", "--sigma-max", "0.5",
               "--n-sigma", "1", "--rho-min", "8", "--rho-max", "8", "--n-rho", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "the flag must win over the environment");
}

#[test]
fn identities_bad_env_tolerance_is_an_error() {
    let o = bin()
        .env("ZEXPLORE_TOL", "not-a-number")
        .args(["identities"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identities_out_writes_report_and_summary() {
    let dir = temp_dir("ids");
    let path = dir.join("report.csv");
    let o = run(&[
        "identities",
        "--sigma-min", "0.5", "--sigma-max", "0.5", "--n-sigma", "1",
        "--rho-min", "8", "--rho-max", "8", "--n-rho", "1",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identities:"), "summary goes to stdout");
    let body = fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("id,sigma,rho,"));
    assert!(body.lines().count() > 60, "one row per identity at least");
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn zeros_reports_census_rows() {
    let o = run(&["zeros", "--min", "14", "--max", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "kind,rho0,n,residual,beta0");
    let body: Vec<&str> = lines.collect();
    assert!(body.iter().any(|l| l.starts_with("full,1.4134725")));
    assert!(body.iter().any(|l| l.starts_with("real-half,1.4517919")));
}

#[test]
fn zeros_rejects_bad_range() {
    let o = run(&["zeros", "--min", "5", "--max", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figures_have_stable_headers() {
    for (n, header) in [
        ("1", "rho,alpha_sum_tracked,alpha_p_closed_k2,residual"),
        ("2", "rho,tracked_neg_alpha,closed_continuous,closed_principal,offset_over_pi"),
        ("3", "rho,beta_minus_alpha"),
        ("4", "sigma,abs_zc,abs_zc_reflected,ratio"),
    ] {
        let o = run(&["figure", "--n", n]);
        assert_eq!(o.status.code(), Some(0), "figure {n}");
        assert!(stdout(&o).starts_with(header), "figure {n} header");
    }
}

#[test]
fn figure_out_of_range_is_an_error() {
    let o = run(&["figure", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trace_writes_per_kind_files() {
    let dir = temp_dir("trace");
    let base = dir.join("line");
    let o = run(&[
        "trace",
        "--sigma-min", "0.5", "--rho-min", "13", "--rho-max", "15",
        "--n-rho", "40", "--out", base.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    for kind in ["alpha", "beta", "gamma-arg", "theta", "alpha-tilde", "beta-tilde"] {
        let track = fs::read_to_string(dir.join(format!("line.{kind}.csv"))).unwrap();
        assert!(track.starts_with("rho,angle,principal_arg,k"), "{kind} track header");
        assert_eq!(track.lines().count(), 41, "{kind} row count");
        let jumps = fs::read_to_string(dir.join(format!("line.{kind}.jumps.csv"))).unwrap();
        assert!(jumps.starts_with("rho,jump_over_pi,parity"), "{kind} jumps header");
    }
    // The value-direction angle drops by pi at the zero inside the range.
    let jumps = fs::read_to_string(dir.join("line.alpha.jumps.csv")).unwrap();
    assert!(jumps.lines().any(|l| l.starts_with("1.4134725") && l.contains(",-1,1")));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn oracle_check_passes() {
    let o = run(&["oracle-check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("oracle-check: PASS"));
    for q in ["zeta", "zeta_d1", "zeta_d2", "gamma", "loggamma", "digamma"] {
        assert!(out.contains(q), "report covers {q}");
    }
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let o = run(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}
