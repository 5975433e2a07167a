//! Sweep driver and validation suites for `riscr-core`.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or configuration error,
//! 3 I/O error.

pub mod config;
pub mod reference;
pub mod sweep;
pub mod validate;

use clap::{Parser, Subcommand};
use riscr_core::analytics::AnalyticsError;
use riscr_core::exec::{ExecError, Execution};
use riscr_core::montecarlo::McError;
use riscr_core::quadrature::QuadError;
use riscr_core::specfun::SpecFunError;
use riscr_core::system_model::ModelError;
use std::io::Write;
use std::path::{Path, PathBuf};
use sweep::{evaluate, figure_preset, format_csv, plot_script, Figure, RunOptions, SweepSpec};
use thiserror::Error;
use validate::{format_report, run_suite, Suite, SuiteOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("invalid {field}: {message}")]
    Validation {
        field: &'static str,
        message: String,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
    #[error(transparent)]
    Analytics(#[from] AnalyticsError),
    #[error(transparent)]
    MonteCarlo(#[from] McError),
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Analytics(e.into())
    }
}

impl From<SpecFunError> for CliError {
    fn from(e: SpecFunError) -> Self {
        CliError::Analytics(e.into())
    }
}

impl From<QuadError> for CliError {
    fn from(e: QuadError) -> Self {
        CliError::Analytics(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::ChecksFailed { .. } => 1,
            CliError::Io { .. } | CliError::MonteCarlo(McError::Exec(ExecError::Pool(_))) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "riscr",
    version,
    about = "Secrecy and outage sweeps for RIS-aided cognitive radio"
)]
pub struct Cli {
    /// Monte-Carlo seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Monte-Carlo trials per point.
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    /// Output path for the CSV or report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Evaluate formulas exactly as printed instead of the corrected forms.
    #[arg(long, global = true)]
    pub strict_paper: bool,
    /// Worker threads (1 runs sequentially).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce one figure as CSV.
    Figure {
        #[arg(value_parser = ["fig2", "fig3", "fig4", "fig5"])]
        figure: String,
        /// Also write a plotting script next to the CSV.
        #[arg(long)]
        plot_script: Option<PathBuf>,
    },
    /// Run the sweeps of a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        plot_script: Option<PathBuf>,
    },
    /// Run a validation suite and report each check.
    Validate {
        #[arg(value_parser = ["specfun", "oracle-grid", "mc-cross"])]
        suite: String,
    },
}

impl Cli {
    fn run_options(&self) -> Result<RunOptions, CliError> {
        let exec = match self.threads {
            None => Execution::default(),
            Some(0) => {
                return Err(CliError::Validation {
                    field: "threads",
                    message: "must be positive".into(),
                })
            }
            Some(1) => Execution::Sequential,
            Some(k) => Execution::Parallel { threads: Some(k) },
        };
        Ok(RunOptions {
            exec,
            strict: self.strict_paper,
        })
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run_sweeps(
    specs: &[SweepSpec],
    run: &RunOptions,
    out: &Path,
    plot: Option<&Path>,
) -> Result<(), CliError> {
    for s in specs {
        s.validate()?;
    }
    let mut rows = Vec::new();
    for s in specs {
        rows.extend(evaluate(s, run)?);
    }
    write_file(out, &format_csv(&rows))?;
    if let Some(p) = plot {
        let name = out.file_name().map_or_else(
            || out.display().to_string(),
            |n| n.to_string_lossy().into_owned(),
        );
        write_file(p, &plot_script(&name))?;
    }
    Ok(())
}

/// Run one parsed command, writing progress and reports to `log`.
pub fn execute(cli: &Cli, log: &mut dyn Write) -> Result<(), CliError> {
    let run = cli.run_options()?;
    match &cli.command {
        Command::Figure {
            figure,
            plot_script,
        } => {
            let fig: Figure = figure.parse().map_err(|m| CliError::Validation {
                field: "figure",
                message: m,
            })?;
            let specs = figure_preset(
                fig,
                cli.trials.unwrap_or(sweep::DEFAULT_TRIALS),
                cli.seed.unwrap_or(sweep::DEFAULT_SEED),
            );
            let out = cli
                .out
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("{fig}.csv")));
            run_sweeps(&specs, &run, &out, plot_script.as_deref())?;
            let _ = writeln!(log, "wrote {}", out.display());
        }
        Command::Sweep {
            config,
            plot_script,
        } => {
            let text = std::fs::read_to_string(config).map_err(|source| CliError::Io {
                path: config.clone(),
                source,
            })?;
            let mut cfg = config::parse_config(&text)?;
            for s in &mut cfg.sweeps {
                if let Some(seed) = cli.seed {
                    s.seed = seed;
                }
                if let Some(t) = cli.trials {
                    s.n_trials = t;
                }
            }
            let out = cli
                .out
                .clone()
                .or(cfg.output)
                .unwrap_or_else(|| PathBuf::from("sweep.csv"));
            run_sweeps(&cfg.sweeps, &run, &out, plot_script.as_deref())?;
            let _ = writeln!(log, "wrote {}", out.display());
        }
        Command::Validate { suite } => {
            let suite: Suite = suite.parse().map_err(|m| CliError::Validation {
                field: "suite",
                message: m,
            })?;
            let opts = SuiteOptions {
                seed: cli.seed.unwrap_or(sweep::DEFAULT_SEED),
                n_trials: cli.trials.unwrap_or(sweep::DEFAULT_TRIALS),
                run,
            };
            let checks = run_suite(suite, &opts)?;
            let report = format_report(&checks);
            let _ = log.write_all(report.as_bytes());
            if let Some(out) = &cli.out {
                write_file(out, &report)?;
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            if failed > 0 {
                return Err(CliError::ChecksFailed {
                    failed,
                    total: checks.len(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("riscr").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        let e = Cli::try_parse_from(["riscr", "validate", "foo"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = Cli::try_parse_from(["riscr", "figure", "fig9"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn global_flags_after_the_verb() {
        let c = cli(&[
            "figure",
            "fig4",
            "--seed",
            "9",
            "--threads",
            "2",
            "--strict-paper",
        ]);
        assert_eq!(c.seed, Some(9));
        assert!(c.strict_paper);
        assert_eq!(
            c.run_options().unwrap().exec,
            Execution::Parallel { threads: Some(2) }
        );
        assert_eq!(
            cli(&["--threads", "1", "validate", "specfun"])
                .run_options()
                .unwrap()
                .exec,
            Execution::Sequential
        );
        assert!(cli(&["--threads", "0", "validate", "specfun"])
            .run_options()
            .is_err());
    }

    #[test]
    fn specfun_validation_succeeds_and_writes_report() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("report.txt");
        let c = cli(&["validate", "specfun", "--out", out.to_str().unwrap()]);
        let mut log = Vec::new();
        execute(&c, &mut log).unwrap();
        let report = std::fs::read_to_string(&out).unwrap();
        assert_eq!(report.as_bytes(), &log[..]);
        assert!(report.lines().all(|l| l.starts_with("PASS ")), "{report}");
    }

    #[test]
    fn config_sweep_writes_csv_and_plot_script() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("s.cfg");
        let out = dir.path().join("s.csv");
        let plot = dir.path().join("plot.py");
        std::fs::write(
            &cfg,
            "trials = 10000\n[sweep a]\nparam = omega_p\nvalues = 0dB, 10dB\nevaluators = closed, montecarlo\n",
        )
        .unwrap();
        let c = cli(&[
            "sweep",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--plot-script",
            plot.to_str().unwrap(),
        ]);
        execute(&c, &mut Vec::new()).unwrap();
        let csv = std::fs::read_to_string(&out).unwrap();
        assert_eq!(csv.lines().next().unwrap(), sweep::CSV_HEADER);
        assert_eq!(csv.lines().count(), 1 + 2 * 2 * 2);
        assert!(std::fs::read_to_string(&plot).unwrap().contains("s.csv"));
    }

    #[test]
    fn error_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("bad.cfg");
        let out = dir.path().join("never.csv");
        std::fs::write(&cfg, "[sweep a]\nparam = omega_p\nevaluators = closed\n").unwrap();
        let c = cli(&[
            "sweep",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        let e = execute(&c, &mut Vec::new()).unwrap_err();
        assert!(matches!(
            e,
            CliError::Validation {
                field: "values",
                ..
            }
        ));
        assert_eq!(e.exit_code(), 2);
        assert!(!out.exists());

        std::fs::write(&cfg, "[sweep a]\nparam = omega_p\nvalues = 1\nbogus = 2\n").unwrap();
        let e = execute(&c, &mut Vec::new()).unwrap_err();
        assert!(matches!(e, CliError::Config { line: 4, .. }));
        assert_eq!(e.exit_code(), 2);

        let missing = cli(&[
            "sweep",
            "--config",
            dir.path().join("nope.cfg").to_str().unwrap(),
        ]);
        assert_eq!(
            execute(&missing, &mut Vec::new()).unwrap_err().exit_code(),
            3
        );

        std::fs::write(&cfg, "[sweep a]\nparam = omega_p\nvalues = 1\n").unwrap();
        let unwritable = dir.path().join("no-such-dir").join("x.csv");
        let c = cli(&[
            "sweep",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            unwritable.to_str().unwrap(),
        ]);
        assert_eq!(execute(&c, &mut Vec::new()).unwrap_err().exit_code(), 3);

        assert_eq!(
            CliError::ChecksFailed {
                failed: 1,
                total: 2
            }
            .exit_code(),
            1
        );
    }
}
