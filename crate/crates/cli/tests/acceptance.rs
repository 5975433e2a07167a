//! Acceptance run: one `PASS|FAIL` line per criterion, nonzero exit on any
//! failure. Tolerances are fixed here, not read from the suites.

use riscr_sweep::sweep::RunOptions;
use riscr_sweep::validate::{fig4_threshold_gap, run_suite, Bound, Check, Suite, SuiteOptions};
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

const SEED: u64 = 1;
const MC_TRIALS: u64 = 1_000_000;
const ORACLE_RUNTIME: Duration = Duration::from_secs(60);
const MC_RUNTIME: Duration = Duration::from_secs(600);
const GAP_TARGET_DB: f64 = 4.0;
const GAP_BAND_DB: f64 = 1.5;

struct Verdict {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

impl Verdict {
    fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        format!("{tag} criterion-{} {} {}", self.id, self.name, self.detail)
    }
}

/// Share of the bound used by a check; above 1 means failure.
fn load(c: &Check) -> f64 {
    match c.kind {
        Bound::AtMost if c.bound > 0.0 => c.observed / c.bound,
        Bound::AtMost => c.observed - c.bound,
        Bound::AtLeast => c.bound - c.observed,
    }
}

fn group(id: u8, name: &'static str, checks: &[&Check], extra: &str) -> Verdict {
    if checks.is_empty() {
        return Verdict {
            id,
            name,
            pass: false,
            detail: "no checks ran".into(),
        };
    }
    let worst = checks
        .iter()
        .copied()
        .max_by(|a, b| load(a).total_cmp(&load(b)))
        .unwrap();
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name.as_str())
        .collect();
    let mut detail = format!(
        "worst={} observed={:.4e} bound={:e} checks={}",
        worst.name,
        worst.observed,
        worst.bound,
        checks.len()
    );
    if !failed.is_empty() {
        detail.push_str(&format!(" failed=[{}]", failed.join(",")));
    }
    detail.push_str(extra);
    Verdict {
        id,
        name,
        pass: failed.is_empty(),
        detail,
    }
}

fn select<'a>(checks: &'a [Check], prefixes: &[&str]) -> Vec<&'a Check> {
    checks
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.name.starts_with(p)))
        .collect()
}

fn timed(mut v: Verdict, elapsed: Duration, limit: Duration) -> Verdict {
    v.detail.push_str(&format!(
        " runtime={:.1}s limit={}s",
        elapsed.as_secs_f64(),
        limit.as_secs()
    ));
    v.pass &= elapsed <= limit;
    v
}

fn threshold_gap(run: &RunOptions) -> Verdict {
    let (id, name) = (7, "outage-threshold-gap");
    match fig4_threshold_gap(run) {
        Ok(g) => {
            let gap = g.gap_db();
            let in_band = (gap - GAP_TARGET_DB).abs() <= GAP_BAND_DB;
            let ordered = g.min_separation > 0.0;
            let mode = if in_band { "band" } else { "ordering-fallback" };
            Verdict {
                id,
                name,
                pass: in_band || ordered,
                detail: format!(
                    "gap_db={gap:.3} band={GAP_TARGET_DB}±{GAP_BAND_DB} q_n20={:.3}dBW q_n50={:.3}dBW min_separation={:.4e} mode={mode}",
                    g.q_small, g.q_large, g.min_separation
                ),
            }
        }
        Err(e) => Verdict {
            id,
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn determinism(dir: &std::path::Path) -> Verdict {
    let (id, name) = (11, "figure-determinism");
    let run = |tag: &str, threads: &str| -> Result<Vec<u8>, String> {
        let out = dir.join(format!("{tag}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_riscr"))
            .args([
                "figure",
                "fig2",
                "--seed",
                "7",
                "--threads",
                threads,
                "--out",
            ])
            .arg(&out)
            .stdout(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("{tag} exited with {status}"));
        }
        std::fs::read(&out).map_err(|e| e.to_string())
    };
    let result = (|| -> Result<(bool, bool, usize), String> {
        let a = run("first", "1")?;
        let b = run("second", "1")?;
        let c = run("doubled", "2")?;
        Ok((a == b, a == c, a.len()))
    })();
    match result {
        Ok((repeat, parallel, bytes)) => Verdict {
            id,
            name,
            pass: repeat && parallel,
            detail: format!(
                "repeat_identical={repeat} doubled_threads_identical={parallel} bytes={bytes}"
            ),
        },
        Err(e) => Verdict {
            id,
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn suite(s: Suite, opts: &SuiteOptions) -> (Vec<Check>, Duration, Option<String>) {
    let t = Instant::now();
    match run_suite(s, opts) {
        Ok(c) => (c, t.elapsed(), None),
        Err(e) => (Vec::new(), t.elapsed(), Some(format!(" error: {e}"))),
    }
}

fn main() -> ExitCode {
    let run = RunOptions::default();
    let opts = SuiteOptions {
        seed: SEED,
        n_trials: MC_TRIALS,
        run,
    };
    let (grid, grid_time, grid_err) = suite(Suite::OracleGrid, &opts);
    let grid_err = grid_err.unwrap_or_default();
    let (spec, _, spec_err) = suite(Suite::Specfun, &opts);
    let (mc, mc_time, mc_err) = suite(Suite::McCross, &opts);
    let mc_err = mc_err.unwrap_or_default();
    let dir = tempfile::tempdir().expect("temporary directory");

    let verdicts = [
        timed(
            group(1, "sop-oracle", &select(&grid, &["sop_oracle_"]), &grid_err),
            grid_time,
            ORACLE_RUNTIME,
        ),
        group(
            2,
            "pnsc-oracle",
            &select(&grid, &["pnsc_oracle_"]),
            &grid_err,
        ),
        group(
            3,
            "outage-oracle",
            &select(
                &grid,
                &["sn_outage_oracle", "sn_outage_exact_erf_within_budget"],
            ),
            &grid_err,
        ),
        timed(
            group(
                4,
                "monte-carlo-cross",
                &select(&mc, &["mc_cross_"]),
                &mc_err,
            ),
            mc_time,
            MC_RUNTIME,
        ),
        group(
            5,
            "asymptotic-slope",
            &select(&grid, &["asymptotic_slope_"]),
            &grid_err,
        ),
        group(
            6,
            "scheme-ordering",
            &select(&grid, &["scheme_ordering_"]),
            &grid_err,
        ),
        threshold_gap(&run),
        group(
            8,
            "distribution-approximations",
            &select(
                &mc,
                &[
                    "psi_e_mean_rel_error",
                    "psi_p_mean_rel_error",
                    "psi_d_ks_distance",
                    "clt_variance_product_moment_closer",
                ],
            ),
            &mc_err,
        ),
        group(
            9,
            "special-functions",
            &spec.iter().collect::<Vec<_>>(),
            &spec_err.unwrap_or_default(),
        ),
        group(
            10,
            "pnsc-identity",
            &select(&grid, &["pnsc_identity_"]),
            &grid_err,
        ),
        determinism(dir.path()),
    ];

    for v in &verdicts {
        println!("{}", v.line());
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    println!(
        "{} of {} criteria passed",
        verdicts.len() - failed,
        verdicts.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
