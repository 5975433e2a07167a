//! Validation suites: each check compares one observed figure of merit with a bound.

use crate::reference::{E1_TABLE, WHITTAKER_TABLE};
use crate::sweep::{evaluate, figure_preset, Evaluator, Figure, Row, RunOptions, SweepSpec};
use crate::CliError;
use riscr_core::analytics::{
    cdf_psi_d, oracle_grid, pnsc_closed, pnsc_quadrature, sn_outage_closed, sn_outage_quadrature,
    sop_closed, sop_quadrature, CombiningScheme, ErfKind, OutageCoeffs,
};
use riscr_core::montecarlo::{empirical_moments, sample_quantity, Quantity, Scenario};
use riscr_core::quadrature::{integrate_to_infinity, QuadOptions};
use riscr_core::specfun::{
    erf_approx, erf_exact, ln_tricomi_u, upper_gamma_zero, upper_gamma_zero_scaled, whittaker_w,
    ErfApproxCoeffs, ERF_APPROX_MAX_ERROR,
};
use riscr_core::system_model::{
    db_to_linear, derive_params, CltVariance, DerivedParams, NetworkGeometry, RadioConfig,
};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub observed: f64,
    pub bound: f64,
    pub kind: Bound,
}

impl Check {
    pub fn at_most(name: impl Into<String>, observed: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            observed,
            bound,
            kind: Bound::AtMost,
        }
    }

    pub fn at_least(name: impl Into<String>, observed: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            observed,
            bound,
            kind: Bound::AtLeast,
        }
    }

    pub fn passed(&self) -> bool {
        match self.kind {
            Bound::AtMost => self.observed <= self.bound,
            Bound::AtLeast => self.observed >= self.bound,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} observed={:.4e} bound={:e}",
            self.name, self.observed, self.bound
        )
    }
}

/// Plain-text report, one line per check.
pub fn format_report(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("{c}\n")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    OracleGrid,
    McCross,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Specfun, Suite::OracleGrid, Suite::McCross];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::OracleGrid => "oracle-grid",
            Suite::McCross => "mc-cross",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub n_trials: u64,
    pub run: RunOptions,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Check>, CliError> {
    match suite {
        Suite::Specfun => specfun_checks(),
        Suite::OracleGrid => oracle_grid_checks(&opts.run),
        Suite::McCross => mc_cross_checks(opts),
    }
}

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn specfun_checks() -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();

    let mut worst = 0.0f64;
    for &(x, want) in E1_TABLE {
        worst = worst.max(rel(upper_gamma_zero(x)?, want));
    }
    checks.push(Check::at_most("e1_reference_table", worst, 1e-12));

    // e^x E₁(x) = ∫₁^∞ e^{−x(t−1)}/t dt, integrated independently.
    let opts = QuadOptions {
        abs_tol: 0.0,
        rel_tol: 1e-13,
        ..QuadOptions::default()
    };
    let mut worst = 0.0f64;
    for x in [0.05, 0.3, 1.0, 3.0, 10.0, 30.0] {
        let r = integrate_to_infinity(|t| (-x * (t - 1.0)).exp() / t, &[1.0], 1.0 / x, &opts)?;
        worst = worst.max(rel(upper_gamma_zero_scaled(x)?, r.value));
    }
    checks.push(Check::at_most("e1_integral_oracle", worst, 1e-12));

    let mut worst = 0.0f64;
    for &(kappa, mu, z, want) in WHITTAKER_TABLE {
        worst = worst.max(rel(whittaker_w(kappa, mu, z)?, want));
    }
    checks.push(Check::at_most("whittaker_reference_table", worst, 1e-10));

    // W_{κ,μ} and W_{κ,−μ} through two different confluent functions.
    let mut worst = 0.0f64;
    for &(kappa, mu, z, _) in WHITTAKER_TABLE {
        let (a_plus, a_minus) = (0.5 + mu - kappa, 0.5 - mu - kappa);
        if mu == 0.0 || a_minus <= 0.0 {
            continue;
        }
        let plus = (mu + 0.5) * z.ln() + ln_tricomi_u(a_plus, 1.0 + 2.0 * mu, z)?;
        let minus = (0.5 - mu) * z.ln() + ln_tricomi_u(a_minus, 1.0 - 2.0 * mu, z)?;
        worst = worst.max((plus - minus).exp_m1().abs());
    }
    checks.push(Check::at_most("whittaker_index_symmetry", worst, 1e-12));

    let coeffs = ErfApproxCoeffs::default();
    let worst = (1..=6000)
        .map(|i| {
            let x = i as f64 * 1e-3;
            (erf_approx(x, &coeffs) - erf_exact(x)).abs()
        })
        .fold(0.0, f64::max);
    checks.push(Check::at_most(
        "erf_approx_max_error",
        worst,
        ERF_APPROX_MAX_ERROR,
    ));
    Ok(checks)
}

fn scheme_tag(s: CombiningScheme) -> &'static str {
    match s {
        CombiningScheme::Sc => "sc",
        CombiningScheme::Mrc => "mrc",
    }
}

/// Desk parameters at `N` elements and `𝒬` in dBW.
pub fn outage_point(n_ris: usize, q_dbw: f64, run: &RunOptions) -> Result<DerivedParams, CliError> {
    let radio = RadioConfig {
        n_ris,
        q_threshold: db_to_linear(q_dbw),
        ..RadioConfig::desk()
    };
    Ok(derive_params(
        &NetworkGeometry::desk(),
        &radio,
        run.model(),
    )?)
}

/// Least-squares slope of `log₁₀ y` against `log₁₀ x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.log10()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.log10()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

fn oracle_grid_checks(run: &RunOptions) -> Result<Vec<Check>, CliError> {
    let model = run.model();
    let grid = oracle_grid();
    let mut checks = Vec::new();
    for scheme in CombiningScheme::ALL {
        let tag = scheme_tag(scheme);
        let (mut sop, mut pnsc, mut fixture, mut identity) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for pt in &grid {
            let p = pt.params(model)?;
            let s = sop_closed(scheme, &p)?.raw;
            let c = pnsc_closed(scheme, &p)?.raw;
            sop = sop.max((s - sop_quadrature(scheme, &p)?).abs());
            pnsc = pnsc.max((c - pnsc_quadrature(scheme, &p)?).abs());
            let (fs, fc) = match scheme {
                CombiningScheme::Sc => (pt.sop_sc, pt.pnsc_sc),
                CombiningScheme::Mrc => (pt.sop_mrc, pt.pnsc_mrc),
            };
            fixture = fixture.max((s - fs).abs()).max((c - fc).abs());
            let zero_rate = sop_closed(scheme, &p.with_rs(0.0)?)?.raw;
            identity = identity.max((c - (1.0 - zero_rate)).abs());
        }
        checks.push(Check::at_most(format!("sop_oracle_{tag}"), sop, 1e-6));
        checks.push(Check::at_most(format!("pnsc_oracle_{tag}"), pnsc, 1e-6));
        if !run.strict {
            checks.push(Check::at_most(format!("pinned_grid_{tag}"), fixture, 1e-9));
        }
        checks.push(Check::at_most(
            format!("pnsc_identity_{tag}"),
            identity,
            1e-9,
        ));
    }

    let mut margin = f64::INFINITY;
    for pt in &grid {
        let p = pt.params(model)?;
        let gap = sop_closed(CombiningScheme::Mrc, &p)?.value
            - sop_closed(CombiningScheme::Sc, &p)?.value;
        margin = margin.min(gap);
    }
    checks.push(Check::at_least("scheme_ordering_mrc_minus_sc", margin, 0.0));

    let (mut oracle, mut budget_ratio) = (0.0f64, 0.0f64);
    for spec in figure_preset(Figure::Fig4, 0, 0) {
        for &q in &spec.values {
            let p = outage_point(spec.radio.n_ris, q, run)?;
            let closed = sn_outage_closed(&p)?.0;
            let approx = sn_outage_quadrature(&p, ErfKind::Approx(ErfApproxCoeffs::default()))?;
            oracle = oracle.max((closed.raw - approx).abs());
            let exact = sn_outage_quadrature(&p, ErfKind::Exact)?;
            let budget = OutageCoeffs::new(&p)?.erf_error_budget();
            budget_ratio = budget_ratio.max((closed.value - exact).abs() / budget);
        }
    }
    checks.push(Check::at_most("sn_outage_oracle", oracle, 1e-5));
    checks.push(Check::at_most(
        "sn_outage_exact_erf_within_budget",
        budget_ratio,
        1.0,
    ));

    for spec in figure_preset(Figure::Fig2, 0, 0) {
        let top: Vec<f64> = spec.values.iter().copied().filter(|v| *v >= 30.0).collect();
        for n_pt in 1..=3 {
            let mut s = spec.clone();
            s.radio.n_pt = n_pt;
            let xs: Vec<f64> = top.iter().map(|v| db_to_linear(*v)).collect();
            for scheme in CombiningScheme::ALL {
                let ys = top
                    .iter()
                    .map(|&v| Ok(sop_closed(scheme, &s.point(v, model)?)?.value))
                    .collect::<Result<Vec<f64>, CliError>>()?;
                let slope = log_log_slope(&xs, &ys);
                checks.push(Check::at_most(
                    format!(
                        "asymptotic_slope_{}_n{}_np{n_pt}",
                        scheme_tag(scheme),
                        spec.radio.n_ris
                    ),
                    (slope + n_pt as f64).abs(),
                    0.1,
                ));
            }
        }
    }
    Ok(checks)
}

/// Worst `|closed − mc| / max(3σ, 5 % closed)` over closed values ≥ 1e-3.
pub fn cross_ratio(rows: &[Row]) -> f64 {
    let mut worst = 0.0f64;
    for mc in rows.iter().filter(|r| r.evaluator == Evaluator::MonteCarlo) {
        let Some(closed) = rows.iter().find(|r| {
            r.evaluator == Evaluator::Closed && r.param == mc.param && r.scheme == mc.scheme
        }) else {
            continue;
        };
        if closed.value < 1e-3 {
            continue;
        }
        let se = mc.mc.map_or(0.0, |e| e.std_error);
        let tol = (3.0 * se).max(0.05 * closed.value);
        worst = worst.max((closed.value - mc.value).abs() / tol);
    }
    worst
}

fn series_tag(spec: &SweepSpec) -> String {
    spec.name.replace(' ', "_")
}

/// Kolmogorov–Smirnov distance between a sample and a CDF.
pub fn ks_distance(
    mut xs: Vec<f64>,
    cdf: impl Fn(f64) -> Result<f64, CliError>,
) -> Result<f64, CliError> {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x)?;
        d = d
            .max((f - i as f64 / n).abs())
            .max(((i + 1) as f64 / n - f).abs());
    }
    Ok(d)
}

fn mc_cross_checks(opts: &SuiteOptions) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let n = opts.n_trials;
    for fig in Figure::ALL {
        let mut scenario_rows: Vec<(Scenario, Vec<Row>)> = Vec::new();
        for mut spec in figure_preset(fig, n, opts.seed) {
            spec.evaluators.retain(|e| *e != Evaluator::Asymptotic);
            let rows = evaluate(&spec, &opts.run)?;
            if spec.evaluators.contains(&Evaluator::Closed) {
                checks.push(Check::at_most(
                    format!("mc_cross_{fig}_{}", series_tag(&spec)),
                    cross_ratio(&rows),
                    1.0,
                ));
            }
            scenario_rows.push((spec.scenario, rows));
        }
        if fig == Figure::Fig5 {
            let mc = |rows: &[Row]| -> Vec<f64> {
                rows.iter()
                    .filter(|r| r.evaluator == Evaluator::MonteCarlo)
                    .map(|r| r.value)
                    .collect()
            };
            let ideal = mc(&scenario_rows[0].1);
            let mut excess = f64::NEG_INFINITY;
            for (_, rows) in &scenario_rows[1..] {
                for (a, b) in ideal.iter().zip(mc(rows)) {
                    excess = excess.max(a - b);
                }
            }
            checks.push(Check::at_most("fig5_ideal_ris_most_reliable", excess, 0.0));
        }
    }

    let moment_trials = n.max(riscr_core::montecarlo::MIN_MOMENT_TRIALS);
    let p = outage_point(30, 10.0, &opts.run)?;
    let exec = opts.run.exec;
    let ideal = Scenario::IdealPhase;
    let psi_e = empirical_moments(Quantity::PsiE, &p, ideal, moment_trials, opts.seed, exec)?;
    checks.push(Check::at_most(
        "psi_e_mean_rel_error",
        rel(psi_e.mean, p.lambda_e),
        0.02,
    ));
    let psi_p = empirical_moments(Quantity::PsiP, &p, ideal, moment_trials, opts.seed, exec)?;
    checks.push(Check::at_most(
        "psi_p_mean_rel_error",
        rel(psi_p.mean, p.lambda_p_param),
        0.02,
    ));

    let cascade = empirical_moments(
        Quantity::CascadeSum,
        &p,
        ideal,
        moment_trials,
        opts.seed,
        exec,
    )?;
    let per_element = cascade.variance() / 30.0;
    checks.push(Check::at_most(
        "clt_variance_product_moment_closer",
        rel(CltVariance::ProductMoment.per_element(), per_element),
        rel(CltVariance::PaperPrinted.per_element(), per_element),
    ));

    let xs = sample_quantity(Quantity::PsiD, &p, ideal, moment_trials, opts.seed, exec)?;
    let ks = ks_distance(xs, |y| Ok(cdf_psi_d(y, &p)?))?;
    checks.push(Check::at_most("psi_d_ks_distance", ks, 0.01));
    Ok(checks)
}

/// Outcome of the `P_out = 10⁻²` threshold comparison between surface sizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdGap {
    /// `𝒬` in dBW reaching the target outage with the smaller surface.
    pub q_small: f64,
    /// Same with the larger surface.
    pub q_large: f64,
    /// Smallest vertical separation between neighbouring curves on the grid.
    pub min_separation: f64,
}

impl ThresholdGap {
    pub fn gap_db(&self) -> f64 {
        self.q_small - self.q_large
    }
}

/// `𝒬` (dBW) at which the closed-form outage equals `target`, by bisection.
pub fn q_for_outage(n_ris: usize, target: f64, run: &RunOptions) -> Result<f64, CliError> {
    let f = |q: f64| -> Result<f64, CliError> {
        Ok(sn_outage_closed(&outage_point(n_ris, q, run)?)?.0.value - target)
    };
    let (mut lo, mut hi) = (-60.0, 60.0);
    if f(lo)? < 0.0 || f(hi)? > 0.0 {
        return Err(CliError::Validation {
            field: "target",
            message: format!("outage {target} not bracketed for N = {n_ris}"),
        });
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Threshold gap between `N = 20` and `N = 50`, and the ordering margin of the
/// `N ∈ {20, 30, 50}` curves over the outage sweep.
pub fn fig4_threshold_gap(run: &RunOptions) -> Result<ThresholdGap, CliError> {
    let specs = figure_preset(Figure::Fig4, 0, 0);
    let mut min_separation = f64::INFINITY;
    for &q in &specs[0].values {
        let mut prev = f64::INFINITY;
        for s in &specs {
            let v = sn_outage_closed(&outage_point(s.radio.n_ris, q, run)?)?
                .0
                .value;
            min_separation = min_separation.min(prev - v);
            prev = v;
        }
    }
    Ok(ThresholdGap {
        q_small: q_for_outage(20, 1e-2, run)?,
        q_large: q_for_outage(50, 1e-2, run)?,
        min_separation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_lines() {
        let c = Check::at_most("x", 1e-13, 1e-12);
        assert!(c.passed());
        assert_eq!(c.to_string(), "PASS x observed=1.0000e-13 bound=1e-12");
        let c = Check::at_least("y", -0.5, 0.0);
        assert_eq!(c.to_string(), "FAIL y observed=-5.0000e-1 bound=0e0");
        assert!(!Check::at_most("z", f64::NAN, 1.0).passed());
        assert_eq!(format_report(&[c.clone(), c]).lines().count(), 2);
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("foo".parse::<Suite>().is_err());
    }

    #[test]
    fn specfun_suite_passes() {
        for c in specfun_checks().unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [1.0, 10.0, 100.0];
        let ys = xs.map(|x: f64| 3.0 * x.powi(-2));
        assert!((log_log_slope(&xs, &ys) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn ks_of_exact_uniform_grid() {
        let xs: Vec<f64> = (0..100).map(|i| (i as f64 + 0.5) / 100.0).collect();
        let d = ks_distance(xs, Ok).unwrap();
        assert!((d - 0.005).abs() < 1e-12);
    }

    #[test]
    fn outage_threshold_is_bracketed_and_decreasing() {
        let run = RunOptions::default();
        let q20 = q_for_outage(20, 1e-2, &run).unwrap();
        let q50 = q_for_outage(50, 1e-2, &run).unwrap();
        assert!(q50 < q20);
        let p = sn_outage_closed(&outage_point(20, q20, &run).unwrap())
            .unwrap()
            .0
            .value;
        assert!((p - 1e-2).abs() < 1e-9);
    }
}
