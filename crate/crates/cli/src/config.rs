//! Flat `key = value` sweep configuration.
//!
//! ```text
//! # keys before the first section apply to every sweep
//! seed = 7
//! trials = 1e6
//! omega_e = 10 dB
//!
//! [sweep N=20]
//! param = omega_p
//! values = 0 dB .. 40 dB step 2
//! metric = sop
//! schemes = sc, mrc
//! evaluators = closed, asymptotic, montecarlo
//! n_ris = 20
//! ```
//!
//! Numbers may carry a `dB` or `dBW` suffix and are then converted to linear
//! scale, except for `values`, which keep their unit for the CSV.

use crate::sweep::{Evaluator, SweepSpec, SweptParam, Unit};
use crate::CliError;
use riscr_core::analytics::CombiningScheme;
use riscr_core::montecarlo::{Metric, Scenario};
use riscr_core::system_model::db_to_linear;
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq)]
struct Entry {
    key: String,
    value: String,
    line: usize,
}

/// Sweeps read from a config file, plus the optional output path it names.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub sweeps: Vec<SweepSpec>,
    pub output: Option<PathBuf>,
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Config {
        line,
        message: message.into(),
    }
}

/// Split a number from an optional `dB`/`dBW` suffix.
pub fn parse_quantity(text: &str) -> Result<(f64, Unit), String> {
    let t = text.trim();
    let lower = t.to_ascii_lowercase();
    let (num, unit) = if let Some(n) = lower.strip_suffix("dbw") {
        (n, Unit::Dbw)
    } else if let Some(n) = lower.strip_suffix("db") {
        (n, Unit::Db)
    } else {
        (lower.as_str(), Unit::Linear)
    };
    let v: f64 = num
        .trim()
        .parse()
        .map_err(|_| format!("`{t}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("`{t}` is not finite"));
    }
    Ok((v, unit))
}

fn linear(text: &str) -> Result<f64, String> {
    let (v, unit) = parse_quantity(text)?;
    Ok(match unit {
        Unit::Linear => v,
        Unit::Db | Unit::Dbw => db_to_linear(v),
    })
}

fn count(text: &str) -> Result<u64, String> {
    let (v, unit) = parse_quantity(text)?;
    if unit != Unit::Linear || v < 0.0 || v.fract() != 0.0 || v > u64::MAX as f64 {
        return Err(format!("`{}` is not a non-negative integer", text.trim()));
    }
    Ok(v as u64)
}

/// Parse `a, b, c` or `start .. end step s`, all in one unit.
pub fn parse_values(text: &str) -> Result<(Vec<f64>, Unit), String> {
    if let Some((start, rest)) = text.split_once("..") {
        let (end, step) = rest
            .split_once("step")
            .ok_or_else(|| "range needs `step`".to_string())?;
        let (a, ua) = parse_quantity(start)?;
        let (b, ub) = parse_quantity(end)?;
        let (s, us) = parse_quantity(step)?;
        if ua != ub || (us != Unit::Linear && us != ua) {
            return Err("range endpoints and step must share a unit".into());
        }
        if s <= 0.0 {
            return Err("step must be positive".into());
        }
        let span = (b - a).abs() / s;
        let n = span.round();
        if (span - n).abs() > 1e-9 * span.max(1.0) {
            return Err("range is not a whole number of steps".into());
        }
        let dir = if b >= a { 1.0 } else { -1.0 };
        let values = (0..=n as u64).map(|i| a + dir * s * i as f64).collect();
        return Ok((values, ua));
    }
    let mut unit = None;
    let mut values = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (v, u) = parse_quantity(item)?;
        if *unit.get_or_insert(u) != u {
            return Err("all values must share a unit".into());
        }
        values.push(v);
    }
    Ok((values, unit.unwrap_or(Unit::Linear)))
}

fn list<T>(text: &str, one: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| one(&s.to_ascii_lowercase()).ok_or_else(|| format!("unknown item `{s}`")))
        .collect()
}

fn parse_scenario(text: &str) -> Result<Scenario, String> {
    let t = text.trim().to_ascii_lowercase();
    match t.as_str() {
        "ideal" => return Ok(Scenario::IdealPhase),
        "phase-error" => return Ok(Scenario::phase_error()),
        "no-direct" => return Ok(Scenario::NoDirectLink),
        "no-ris" => return Ok(Scenario::NoRis),
        _ => {}
    }
    let bound = t
        .strip_prefix("phase-error(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("unknown scenario `{}`", text.trim()))?;
    let bound = linear(bound)?;
    Ok(Scenario::UniformPhaseError { bound })
}

fn apply(spec: &mut SweepSpec, e: &Entry) -> Result<(), String> {
    let v = e.value.as_str();
    let r = &mut spec.radio;
    let g = &mut spec.geometry;
    match e.key.as_str() {
        "param" => {
            spec.param = SweptParam::from_name(v.trim())
                .ok_or_else(|| format!("unknown parameter `{}`", v.trim()))?
        }
        "values" => {
            let (values, unit) = parse_values(v)?;
            spec.values = values;
            spec.unit = unit;
        }
        "metric" => {
            spec.metric = match v.trim().to_ascii_lowercase().as_str() {
                "sop" => Metric::Sop,
                "pnsc" => Metric::Pnsc,
                "sn-outage" | "outage" => Metric::SnOutage,
                other => return Err(format!("unknown metric `{other}`")),
            }
        }
        "schemes" => {
            spec.schemes = list(v, |s| match s {
                "sc" => Some(CombiningScheme::Sc),
                "mrc" => Some(CombiningScheme::Mrc),
                _ => None,
            })?
        }
        "evaluators" => spec.evaluators = list(v, Evaluator::from_name)?,
        "scenario" => spec.scenario = parse_scenario(v)?,
        "trials" => spec.n_trials = count(v)?,
        "seed" => spec.seed = count(v)?,
        "n_ris" => r.n_ris = count(v)? as usize,
        "n_pt" => r.n_pt = count(v)? as usize,
        "n_eav" => r.n_eav = count(v)? as usize,
        "p_p" => r.p_p = linear(v)?,
        "q" | "q_threshold" => r.q_threshold = linear(v)?,
        "sigma2_d" => r.sigma2_d = linear(v)?,
        "sigma2_p" => r.sigma2_p = linear(v)?,
        "sigma2_e" => r.sigma2_e = linear(v)?,
        "gamma_bar_se" => r.gamma_bar_se = linear(v)?,
        "delta" => r.delta = linear(v)?,
        "r_s" => r.r_s = linear(v)?,
        "r_d" => r.r_d = linear(v)?,
        "omega_p" => spec.omega_p = Some(linear(v)?),
        "omega_e" => spec.omega_e = Some(linear(v)?),
        "d_sr" => g.d_sr = linear(v)?,
        "d_rd" => g.d_rd = linear(v)?,
        "d_sd" => g.d_sd = linear(v)?,
        "d_pp" => g.d_pp = linear(v)?,
        "d_pe" => g.d_pe = linear(v)?,
        "d_re" => g.d_re = linear(v)?,
        "d_rp" => g.d_rp = linear(v)?,
        "d_se" => g.d_se = linear(v)?,
        "d_sp" => g.d_sp = linear(v)?,
        "d_o" => g.d_o = linear(v)?,
        "eta" => g.eta = linear(v)?,
        other => return Err(format!("unknown key `{other}`")),
    }
    Ok(())
}

/// Parse a config file into sweep specifications.
pub fn parse_config(text: &str) -> Result<SweepConfig, CliError> {
    let mut global: Vec<Entry> = Vec::new();
    let mut sections: Vec<(String, usize, Vec<Entry>)> = Vec::new();
    let mut output = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(header) = content.strip_prefix('[') {
            let inner = header
                .strip_suffix(']')
                .ok_or_else(|| err(line, "unterminated section header"))?;
            let name = inner
                .trim()
                .strip_prefix("sweep")
                .ok_or_else(|| err(line, "sections must be `[sweep <name>]`"))?
                .trim();
            if name.contains(',') {
                return Err(err(line, "sweep names may not contain commas"));
            }
            sections.push((name.to_string(), line, Vec::new()));
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(line, "expected `key = value`"))?;
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim().to_string();
        if value.is_empty() {
            return Err(err(line, format!("`{key}` has no value")));
        }
        if key == "output" {
            if !sections.is_empty() {
                return Err(err(line, "`output` must precede the first section"));
            }
            output = Some(PathBuf::from(value));
            continue;
        }
        let entry = Entry { key, value, line };
        match sections.last_mut() {
            Some(s) => s.2.push(entry),
            None => global.push(entry),
        }
    }
    if sections.is_empty() {
        return Err(err(
            text.lines().count().max(1),
            "no `[sweep <name>]` section",
        ));
    }
    let mut sweeps = Vec::with_capacity(sections.len());
    for (name, _, entries) in &sections {
        let mut spec = SweepSpec::base(name);
        for e in global.iter().chain(entries) {
            apply(&mut spec, e).map_err(|m| err(e.line, m))?;
        }
        sweeps.push(spec);
    }
    Ok(SweepConfig { sweeps, output })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantities_and_units() {
        assert_eq!(parse_quantity("10 dB").unwrap(), (10.0, Unit::Db));
        assert_eq!(parse_quantity("-20dBW").unwrap(), (-20.0, Unit::Dbw));
        assert_eq!(parse_quantity(" 1e6 ").unwrap(), (1e6, Unit::Linear));
        assert!(parse_quantity("ten").is_err());
        assert!(parse_quantity("inf").is_err());
        assert!((linear("10dB").unwrap() - 10.0).abs() < 1e-12);
        assert_eq!(count("1e6").unwrap(), 1_000_000);
        assert!(count("2.5").is_err());
        assert!(count("3dB").is_err());
    }

    #[test]
    fn ranges_and_lists() {
        let (v, u) = parse_values("0 dB .. 40 dB step 2").unwrap();
        assert_eq!(u, Unit::Db);
        assert_eq!(v.len(), 21);
        assert_eq!(v[20], 40.0);
        let (v, u) = parse_values("0dBW..-20dBW step 5dBW").unwrap();
        assert_eq!((v, u), (vec![0.0, -5.0, -10.0, -15.0, -20.0], Unit::Dbw));
        assert_eq!(
            parse_values("20, 30, 50").unwrap(),
            (vec![20.0, 30.0, 50.0], Unit::Linear)
        );
        assert!(parse_values("1 .. 2 step 0.3").is_err());
        assert!(parse_values("1dB, 2").is_err());
        assert!(parse_values("0..4").is_err());
        assert!(parse_values("").unwrap().0.is_empty());
    }

    #[test]
    fn scenarios() {
        assert_eq!(parse_scenario("ideal").unwrap(), Scenario::IdealPhase);
        assert_eq!(
            parse_scenario("phase-error(0.5)").unwrap(),
            Scenario::UniformPhaseError { bound: 0.5 }
        );
        assert!(parse_scenario("chaos").is_err());
    }

    const SAMPLE: &str = "\
# shared
seed = 9
trials = 20000
omega_e = 10 dB
output = out.csv

[sweep N=20]
param = omega_p
values = 0 dB .. 10 dB step 5
metric = sop
schemes = sc, mrc
evaluators = closed, montecarlo
n_ris = 20

[sweep outage]
param = q
values = -10dBW, 0dBW
metric = sn-outage
evaluators = closed
seed = 4
";

    #[test]
    fn sections_inherit_and_override() {
        let cfg = parse_config(SAMPLE).unwrap();
        assert_eq!(cfg.output, Some(PathBuf::from("out.csv")));
        assert_eq!(cfg.sweeps.len(), 2);
        let a = &cfg.sweeps[0];
        assert_eq!(a.name, "N=20");
        assert_eq!(a.values, vec![0.0, 5.0, 10.0]);
        assert_eq!(a.seed, 9);
        assert_eq!(a.n_trials, 20_000);
        assert_eq!(a.radio.n_ris, 20);
        assert!((a.omega_e.unwrap() - 10.0).abs() < 1e-12);
        let b = &cfg.sweeps[1];
        assert_eq!(b.param, SweptParam::QThreshold);
        assert_eq!(b.unit, Unit::Dbw);
        assert_eq!(b.seed, 4);
        assert_eq!(b.metric, Metric::SnOutage);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "seed = 1\n[sweep a]\nparam = omega_p\nvalues = 0, 1\nwidth = 3\n";
        match parse_config(bad) {
            Err(CliError::Config { line, message }) => {
                assert_eq!(line, 5);
                assert!(message.contains("width"));
            }
            other => panic!("{other:?}"),
        }
        let cases = [
            ("[sweep a\n", 1),
            ("[group a]\n", 1),
            ("seed = 1\n[sweep a]\nnonsense\n", 3),
            ("[sweep a]\nseed =\n", 2),
            ("[sweep a]\nvalues = 1 .. 2\n", 2),
            ("[sweep a]\noutput = x.csv\n", 2),
            ("seed = 1\n", 1),
        ];
        for (text, want) in cases {
            match parse_config(text) {
                Err(CliError::Config { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
