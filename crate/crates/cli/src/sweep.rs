//! Parameter sweeps, figure presets and CSV output.

use crate::CliError;
use riscr_core::analytics::{
    pnsc_closed, pnsc_quadrature, sn_outage_closed, sn_outage_quadrature, sop_asymptotic,
    sop_closed, sop_quadrature, AnalyticsError, CombiningScheme, ErfKind,
};
use riscr_core::exec::Execution;
use riscr_core::montecarlo::{estimate_points, EstimateWithCI, Metric, Probe, Scenario};
use riscr_core::system_model::{
    db_to_linear, derive_params, CltVariance, Convention, DerivedParams, ModelOptions,
    NetworkGeometry, RadioConfig,
};
use std::fmt::{self, Write as _};
use std::str::FromStr;

pub const CSV_HEADER: &str = "param,param_unit,scheme,evaluator,value,std_error,n_trials,seed";
pub const DEFAULT_TRIALS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Db,
    Dbw,
    Linear,
}

impl Unit {
    pub fn label(self) -> &'static str {
        match self {
            Unit::Db => "dB",
            Unit::Dbw => "dBW",
            Unit::Linear => "linear",
        }
    }

    pub fn to_linear(self, v: f64) -> f64 {
        match self {
            Unit::Linear => v,
            Unit::Db | Unit::Dbw => db_to_linear(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptParam {
    OmegaP,
    OmegaE,
    QThreshold,
    NRis,
    Rs,
    Rd,
    GammaBarSe,
}

impl SweptParam {
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "omega_p" => SweptParam::OmegaP,
            "omega_e" => SweptParam::OmegaE,
            "q" | "q_threshold" => SweptParam::QThreshold,
            "n_ris" => SweptParam::NRis,
            "r_s" => SweptParam::Rs,
            "r_d" => SweptParam::Rd,
            "gamma_bar_se" => SweptParam::GammaBarSe,
            _ => return None,
        })
    }

    /// Whether changing this parameter changes the simulated channel gains,
    /// which rules out sharing draws across sweep points.
    fn changes_channel(self) -> bool {
        matches!(self, SweptParam::NRis | SweptParam::GammaBarSe)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluator {
    Closed,
    Asymptotic,
    Quadrature,
    MonteCarlo,
}

impl Evaluator {
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "closed" => Evaluator::Closed,
            "asymptotic" => Evaluator::Asymptotic,
            "quadrature" => Evaluator::Quadrature,
            "montecarlo" => Evaluator::MonteCarlo,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Evaluator::Closed => "closed",
            Evaluator::Asymptotic => "asymptotic",
            Evaluator::Quadrature => "quadrature",
            Evaluator::MonteCarlo => "montecarlo",
        }
    }
}

/// One curve: a metric evaluated along one swept parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Series label, appended to the scheme column as `SC[name]`.
    pub name: String,
    pub param: SweptParam,
    pub unit: Unit,
    pub values: Vec<f64>,
    pub metric: Metric,
    pub schemes: Vec<CombiningScheme>,
    pub evaluators: Vec<Evaluator>,
    pub scenario: Scenario,
    pub n_trials: u64,
    pub seed: u64,
    pub geometry: NetworkGeometry,
    pub radio: RadioConfig,
    /// Linear override of the layout-derived `ω_p`.
    pub omega_p: Option<f64>,
    /// Linear override of the layout-derived `ω_e`.
    pub omega_e: Option<f64>,
}

fn invalid(field: &'static str, message: impl Into<String>) -> CliError {
    CliError::Validation {
        field,
        message: message.into(),
    }
}

impl SweepSpec {
    /// Desk layout and radio defaults with nothing swept yet.
    pub fn base(name: &str) -> Self {
        Self {
            name: name.to_string(),
            param: SweptParam::OmegaP,
            unit: Unit::Linear,
            values: Vec::new(),
            metric: Metric::Sop,
            schemes: CombiningScheme::ALL.to_vec(),
            evaluators: vec![Evaluator::Closed],
            scenario: Scenario::IdealPhase,
            n_trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            geometry: NetworkGeometry::desk(),
            radio: RadioConfig::desk(),
            omega_p: None,
            omega_e: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.values.is_empty() {
            return Err(invalid("values", "no values to sweep"));
        }
        let up = self.values.windows(2).all(|w| w[1] > w[0]);
        let down = self.values.windows(2).all(|w| w[1] < w[0]);
        if !(up || down) {
            return Err(invalid("values", "must be strictly monotone"));
        }
        if self.evaluators.is_empty() {
            return Err(invalid("evaluators", "none selected"));
        }
        if self.metric != Metric::SnOutage && self.schemes.is_empty() {
            return Err(invalid("schemes", "none selected"));
        }
        if self.evaluators.contains(&Evaluator::Asymptotic) && self.metric != Metric::Sop {
            return Err(invalid("evaluators", "the asymptote exists only for SOP"));
        }
        let analytic = self.evaluators.iter().any(|e| *e != Evaluator::MonteCarlo);
        if analytic && self.scenario != Scenario::IdealPhase {
            return Err(invalid(
                "evaluators",
                format!(
                    "only montecarlo models the {} scenario",
                    self.scenario.label()
                ),
            ));
        }
        if self.evaluators.contains(&Evaluator::MonteCarlo)
            && self.n_trials < riscr_core::montecarlo::MIN_ESTIMATE_TRIALS
        {
            return Err(invalid(
                "trials",
                format!("{} is below the floor", self.n_trials),
            ));
        }
        match self.param {
            SweptParam::NRis | SweptParam::Rs | SweptParam::Rd if self.unit != Unit::Linear => {
                return Err(invalid("values", "this parameter takes linear values"))
            }
            SweptParam::NRis if self.values.iter().any(|v| *v < 1.0 || v.fract() != 0.0) => {
                return Err(invalid("values", "n_ris must be positive integers"))
            }
            _ => {}
        }
        self.scenario
            .validate()
            .map_err(|e| invalid("scenario", e.to_string()))
    }

    /// Parameters at one sweep value, given in the sweep's unit.
    pub fn point(&self, value: f64, opts: ModelOptions) -> Result<DerivedParams, CliError> {
        let v = self.unit.to_linear(value);
        let mut radio = self.radio;
        match self.param {
            SweptParam::QThreshold => radio.q_threshold = v,
            SweptParam::NRis => radio.n_ris = v as usize,
            SweptParam::Rs => radio.r_s = v,
            SweptParam::Rd => radio.r_d = v,
            SweptParam::GammaBarSe => radio.gamma_bar_se = v,
            SweptParam::OmegaP | SweptParam::OmegaE => {}
        }
        let mut p = derive_params(&self.geometry, &radio, opts)?;
        if let Some(w) = self.omega_p {
            p = p.with_omega_p(w)?;
        }
        if let Some(w) = self.omega_e {
            p = p.with_omega_e(w)?;
        }
        Ok(match self.param {
            SweptParam::OmegaP => p.with_omega_p(v)?,
            SweptParam::OmegaE => p.with_omega_e(v)?,
            _ => p,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    pub exec: Execution,
    /// Evaluate the formulas exactly as printed rather than corrected.
    pub strict: bool,
}

impl RunOptions {
    pub fn model(&self) -> ModelOptions {
        if self.strict {
            ModelOptions {
                convention: Convention::PaperLiteral,
                clt_variance: CltVariance::PaperPrinted,
            }
        } else {
            ModelOptions::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub param: f64,
    pub unit: Unit,
    pub scheme: String,
    pub evaluator: Evaluator,
    /// `NaN` when the selected formula variant cannot be evaluated.
    pub value: f64,
    pub mc: Option<EstimateWithCI>,
}

fn analytic(
    evaluator: Evaluator,
    metric: Metric,
    scheme: CombiningScheme,
    p: &DerivedParams,
) -> Result<f64, AnalyticsError> {
    let r = match (metric, evaluator) {
        (Metric::Sop, Evaluator::Closed) => sop_closed(scheme, p).map(|v| v.value),
        (Metric::Sop, Evaluator::Asymptotic) => sop_asymptotic(scheme, p).map(|a| a.value),
        (Metric::Sop, Evaluator::Quadrature) => sop_quadrature(scheme, p),
        (Metric::Pnsc, Evaluator::Closed) => pnsc_closed(scheme, p).map(|v| v.value),
        (Metric::Pnsc, Evaluator::Quadrature) => pnsc_quadrature(scheme, p),
        (Metric::SnOutage, Evaluator::Closed) => sn_outage_closed(p).map(|v| v.0.value),
        (Metric::SnOutage, Evaluator::Quadrature) => sn_outage_quadrature(p, ErfKind::Exact),
        _ => unreachable!("rejected by SweepSpec::validate"),
    };
    match r {
        Err(AnalyticsError::LiteralForm(_)) => Ok(f64::NAN),
        other => other,
    }
}

fn scheme_label(metric: Metric, scheme: CombiningScheme, name: &str) -> String {
    let base = if metric == Metric::SnOutage {
        "SN"
    } else {
        scheme.label()
    };
    if name.is_empty() {
        base.to_string()
    } else {
        format!("{base}[{name}]")
    }
}

/// Evaluate one sweep. Rows are ordered by value, then scheme, then evaluator.
pub fn evaluate(spec: &SweepSpec, opts: &RunOptions) -> Result<Vec<Row>, CliError> {
    spec.validate()?;
    let model = opts.model();
    let points = spec
        .values
        .iter()
        .map(|&v| spec.point(v, model))
        .collect::<Result<Vec<_>, _>>()?;
    let schemes = if spec.metric == Metric::SnOutage {
        vec![CombiningScheme::Sc]
    } else {
        spec.schemes.clone()
    };

    let mut mc = Vec::new();
    if spec.evaluators.contains(&Evaluator::MonteCarlo) {
        let probes: Vec<Probe> = points
            .iter()
            .flat_map(|p| {
                schemes.iter().map(|&scheme| Probe {
                    metric: spec.metric,
                    scheme,
                    params: *p,
                })
            })
            .collect();
        let batch = if spec.param.changes_channel() {
            schemes.len()
        } else {
            probes.len()
        };
        for group in probes.chunks(batch) {
            mc.extend(estimate_points(
                group,
                spec.scenario,
                spec.n_trials,
                spec.seed,
                opts.exec,
            )?);
        }
    }

    let mut rows = Vec::with_capacity(points.len() * schemes.len() * spec.evaluators.len());
    for (i, (value, p)) in spec.values.iter().zip(&points).enumerate() {
        for (j, &scheme) in schemes.iter().enumerate() {
            let label = scheme_label(spec.metric, scheme, &spec.name);
            for &ev in &spec.evaluators {
                let (v, est) = if ev == Evaluator::MonteCarlo {
                    let e = mc[i * schemes.len() + j];
                    (e.estimate, Some(e))
                } else {
                    (analytic(ev, spec.metric, scheme, p)?, None)
                };
                rows.push(Row {
                    param: *value,
                    unit: spec.unit,
                    scheme: label.clone(),
                    evaluator: ev,
                    value: v,
                    mc: est,
                });
            }
        }
    }
    Ok(rows)
}

/// Render rows as CSV, header included. Floats use the shortest
/// round-trip representation, so the text is a pure function of the rows.
pub fn format_csv(rows: &[Row]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let (se, n, seed) = match r.mc {
            Some(e) => (
                format!("{:e}", e.std_error),
                e.n_trials.to_string(),
                e.seed.to_string(),
            ),
            None => (String::new(), String::new(), String::new()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{:e},{se},{n},{seed}",
            r.param,
            r.unit.label(),
            r.scheme,
            r.evaluator.label(),
            r.value
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig2, Figure::Fig3, Figure::Fig4, Figure::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown figure `{s}`"))
    }
}

fn omega_p_sweep() -> Vec<f64> {
    (0..=20).map(|i| 2.0 * i as f64).collect()
}

fn q_sweep() -> Vec<f64> {
    (0..=10).map(|i| -20.0 + 2.0 * i as f64).collect()
}

/// Curves of one figure, with the trial count and seed applied to each.
pub fn figure_preset(fig: Figure, n_trials: u64, seed: u64) -> Vec<SweepSpec> {
    let spec = |name: String, n_ris: usize| {
        let mut s = SweepSpec::base(&name);
        s.radio.n_ris = n_ris;
        s.radio.n_pt = 3;
        s.radio.n_eav = 3;
        s.n_trials = n_trials;
        s.seed = seed;
        s
    };
    match fig {
        Figure::Fig2 => [20, 50]
            .map(|n| SweepSpec {
                param: SweptParam::OmegaP,
                unit: Unit::Db,
                values: omega_p_sweep(),
                metric: Metric::Sop,
                evaluators: vec![
                    Evaluator::Closed,
                    Evaluator::Asymptotic,
                    Evaluator::MonteCarlo,
                ],
                omega_e: Some(db_to_linear(10.0)),
                ..spec(format!("N={n}"), n)
            })
            .to_vec(),
        Figure::Fig3 => [(20, 5.0), (20, 10.0), (50, 5.0), (50, 10.0)]
            .map(|(n, we)| SweepSpec {
                param: SweptParam::OmegaP,
                unit: Unit::Db,
                values: omega_p_sweep(),
                metric: Metric::Pnsc,
                evaluators: vec![Evaluator::Closed, Evaluator::MonteCarlo],
                omega_e: Some(db_to_linear(we)),
                ..spec(format!("N={n} omega_e={we}dB"), n)
            })
            .to_vec(),
        Figure::Fig4 => [20, 30, 50]
            .map(|n| SweepSpec {
                param: SweptParam::QThreshold,
                unit: Unit::Dbw,
                values: q_sweep(),
                metric: Metric::SnOutage,
                evaluators: vec![Evaluator::Closed, Evaluator::MonteCarlo],
                ..spec(format!("N={n}"), n)
            })
            .to_vec(),
        Figure::Fig5 => [
            (
                Scenario::IdealPhase,
                vec![Evaluator::Closed, Evaluator::MonteCarlo],
            ),
            (Scenario::phase_error(), vec![Evaluator::MonteCarlo]),
            (Scenario::NoDirectLink, vec![Evaluator::MonteCarlo]),
        ]
        .map(|(scenario, evaluators)| SweepSpec {
            param: SweptParam::QThreshold,
            unit: Unit::Dbw,
            values: q_sweep(),
            metric: Metric::SnOutage,
            evaluators,
            scenario,
            ..spec(scenario.label().to_string(), 30)
        })
        .to_vec(),
    }
}

/// Companion plotting script for a CSV written by this tool.
pub fn plot_script(csv_name: &str) -> String {
    format!(
        r#"# Plot a sweep CSV: one line per (scheme, evaluator) series.
import csv
import collections
import matplotlib.pyplot as plt

series = collections.defaultdict(list)
unit = ""
with open({csv_name:?}) as f:
    for row in csv.DictReader(f):
        unit = row["param_unit"]
        series[(row["scheme"], row["evaluator"])].append((float(row["param"]), float(row["value"])))

styles = {{"closed": "-", "asymptotic": "--", "quadrature": ":", "montecarlo": "o"}}
for (scheme, evaluator), pts in sorted(series.items()):
    xs, ys = zip(*pts)
    plt.semilogy(xs, ys, styles.get(evaluator, "-"), label=f"{{scheme}} {{evaluator}}", fillstyle="none")
plt.xlabel(f"parameter ({{unit}})")
plt.ylabel("probability")
plt.legend(fontsize="small")
plt.grid(True, which="both", alpha=0.3)
plt.show()
"#
    )
}
