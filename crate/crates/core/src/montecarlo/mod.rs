//! Monte-Carlo simulation of the physical fading channels.
//!
//! Every trial owns a ChaCha8 stream selected by its index under a key derived
//! from the seed, so estimates depend only on `(seed, n_trials, parameters)`
//! and never on the worker count. Probability estimates reduce integer
//! counts; moments reduce per-chunk summaries in chunk order.

mod channel;

pub use channel::{sample_realization, ChannelRealization, Scenario};

use crate::analytics::CombiningScheme;
use crate::exec::{map_chunks, ExecError, Execution};
use crate::system_model::{DerivedParams, ModelError};
use channel::{draw, seed_key, trial_rng, Draw, Shape};
use thiserror::Error;

/// Smallest trial count accepted by [`estimate`] and [`estimate_points`].
pub const MIN_ESTIMATE_TRIALS: u64 = 10_000;
/// Smallest trial count accepted by [`empirical_moments`].
pub const MIN_MOMENT_TRIALS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McError {
    #[error("{requested} trials requested, at least {floor} required")]
    TooFewTrials { requested: u64, floor: u64 },
    #[error("phase error bound {bound} outside (0, π]")]
    InvalidScenario { bound: f64 },
    #[error("batched points differ in {field}")]
    IncompatiblePoints { field: &'static str },
    #[error("no points to estimate")]
    NoPoints,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Exec(#[from] ExecError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// `Pr(C_S < R_s)` on the primary link.
    Sop,
    /// `Pr(C_S > 0)` on the primary link.
    Pnsc,
    /// `Pr(γ_D ≤ 2^{R_d} − 1)` on the secondary link.
    SnOutage,
}

impl Metric {
    pub fn label(self) -> &'static str {
        match self {
            Metric::Sop => "SOP",
            Metric::Pnsc => "PNSC",
            Metric::SnOutage => "SnOutage",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Jamming power at the eavesdropper.
    PsiE,
    /// Interference gain at the primary receiver.
    PsiP,
    /// Received secondary gain `(Ω₁χ₁ + Ω₂χ₂)²`.
    PsiD,
    /// `Σ |h_si| |h_di|`.
    CascadeSum,
}

impl Quantity {
    fn of(self, d: &Draw, q_over_noise: f64) -> f64 {
        match self {
            Quantity::PsiE => d.psi_e,
            Quantity::PsiP => d.psi_p,
            Quantity::PsiD => q_over_noise * d.d_gain,
            Quantity::CascadeSum => d.cascade_sum,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateWithCI {
    pub estimate: f64,
    /// Binomial standard error `√(p̂(1 − p̂)/n)`.
    pub std_error: f64,
    pub n_trials: u64,
    pub seed: u64,
}

impl EstimateWithCI {
    fn from_count(hits: u64, n_trials: u64, seed: u64) -> Self {
        let p = hits as f64 / n_trials as f64;
        Self {
            estimate: p,
            std_error: (p * (1.0 - p) / n_trials as f64).sqrt(),
            n_trials,
            seed,
        }
    }
}

/// Streaming mean and variance, mergeable across chunks.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    pub count: u64,
    pub mean: f64,
    m2: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let n = (self.count + other.count) as f64;
        let d = other.mean - self.mean;
        self.mean += d * other.count as f64 / n;
        self.m2 += other.m2 + d * d * self.count as f64 * other.count as f64 / n;
        self.count += other.count;
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }
}

/// One event to count: a metric under a combining scheme at a parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub metric: Metric,
    /// Ignored for [`Metric::SnOutage`].
    pub scheme: CombiningScheme,
    pub params: DerivedParams,
}

fn check_trials(n: u64, floor: u64) -> Result<(), McError> {
    if n < floor {
        Err(McError::TooFewTrials {
            requested: n,
            floor,
        })
    } else {
        Ok(())
    }
}

/// Estimate one probability.
pub fn estimate(
    metric: Metric,
    scheme: CombiningScheme,
    params: &DerivedParams,
    scenario: Scenario,
    n_trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<EstimateWithCI, McError> {
    let probe = Probe {
        metric,
        scheme,
        params: *params,
    };
    Ok(estimate_points(&[probe], scenario, n_trials, seed, exec)?[0])
}

/// Estimate several probabilities from one shared set of channel draws.
///
/// All probes must share the layout-dependent gains and antenna counts;
/// they may differ in `ω_p`, `ω_e`, `𝒬`, the noise powers and the rates.
pub fn estimate_points(
    probes: &[Probe],
    scenario: Scenario,
    n_trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<EstimateWithCI>, McError> {
    check_trials(n_trials, MIN_ESTIMATE_TRIALS)?;
    scenario.validate()?;
    let first = probes.first().ok_or(McError::NoPoints)?;
    let shape = Shape::of(&first.params)?;
    let mut links = Vec::with_capacity(probes.len());
    for pr in probes {
        if let Some(field) = shape.mismatch(&Shape::of(&pr.params)?) {
            return Err(McError::IncompatiblePoints { field });
        }
        links.push(*pr.params.link("monte-carlo simulation")?);
    }
    let key = seed_key(seed);
    let chunks = map_chunks(exec, n_trials, |range| {
        let mut hits = vec![0u64; probes.len()];
        for t in range {
            let d = draw(&mut trial_rng(key, t), &shape, scenario, None);
            for ((pr, link), h) in probes.iter().zip(&links).zip(hits.iter_mut()) {
                let s = d.snrs(&pr.params, link);
                let gamma_e = match pr.scheme {
                    CombiningScheme::Sc => s.gamma_e_sc,
                    CombiningScheme::Mrc => s.gamma_e_mrc,
                };
                let event = match pr.metric {
                    Metric::Sop => s.gamma_p < pr.params.beta * gamma_e + pr.params.alpha,
                    Metric::Pnsc => s.gamma_p > gamma_e,
                    Metric::SnOutage => s.gamma_d <= link.gamma_th(),
                };
                *h += u64::from(event);
            }
        }
        hits
    })?;
    let mut totals = vec![0u64; probes.len()];
    for c in &chunks {
        for (t, h) in totals.iter_mut().zip(c) {
            *t += h;
        }
    }
    Ok(totals
        .into_iter()
        .map(|h| EstimateWithCI::from_count(h, n_trials, seed))
        .collect())
}

/// Sample mean and variance of a composite channel quantity.
pub fn empirical_moments(
    quantity: Quantity,
    params: &DerivedParams,
    scenario: Scenario,
    n_trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Moments, McError> {
    check_trials(n_trials, MIN_MOMENT_TRIALS)?;
    scenario.validate()?;
    let shape = Shape::of(params)?;
    let l = params.link("monte-carlo simulation")?;
    let scale = l.q_threshold / l.sigma2_d;
    let key = seed_key(seed);
    let chunks = map_chunks(exec, n_trials, |range| {
        let mut m = Moments::default();
        for t in range {
            let d = draw(&mut trial_rng(key, t), &shape, scenario, None);
            m.push(quantity.of(&d, scale));
        }
        m
    })?;
    let mut total = Moments::default();
    for c in &chunks {
        total.merge(c);
    }
    Ok(total)
}

/// The first `n_trials` draws of a composite channel quantity, in trial order.
pub fn sample_quantity(
    quantity: Quantity,
    params: &DerivedParams,
    scenario: Scenario,
    n_trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<f64>, McError> {
    scenario.validate()?;
    let shape = Shape::of(params)?;
    let l = params.link("monte-carlo simulation")?;
    let scale = l.q_threshold / l.sigma2_d;
    let key = seed_key(seed);
    let chunks = map_chunks(exec, n_trials, |range| {
        range
            .map(|t| quantity.of(&draw(&mut trial_rng(key, t), &shape, scenario, None), scale))
            .collect::<Vec<f64>>()
    })?;
    Ok(chunks.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{pnsc_closed, sop_closed};
    use crate::system_model::{
        db_to_linear, derive_params, CltVariance, ModelOptions, NetworkGeometry, RadioConfig,
    };
    use std::f64::consts::PI;

    fn desk(n: usize) -> DerivedParams {
        let radio = RadioConfig {
            n_ris: n,
            ..RadioConfig::desk()
        };
        derive_params(&NetworkGeometry::desk(), &radio, ModelOptions::default()).unwrap()
    }

    const SEQ: Execution = Execution::Sequential;

    #[test]
    fn trial_floor_enforced() {
        let p = desk(20);
        let err = estimate(
            Metric::Sop,
            CombiningScheme::Sc,
            &p,
            Scenario::IdealPhase,
            9_999,
            1,
            SEQ,
        );
        assert_eq!(
            err.unwrap_err(),
            McError::TooFewTrials {
                requested: 9_999,
                floor: MIN_ESTIMATE_TRIALS
            }
        );
        let err = empirical_moments(Quantity::PsiE, &p, Scenario::IdealPhase, 50_000, 1, SEQ);
        assert!(matches!(err, Err(McError::TooFewTrials { .. })));
        assert_eq!(
            estimate_points(&[], Scenario::IdealPhase, 10_000, 1, SEQ),
            Err(McError::NoPoints)
        );
    }

    #[test]
    fn incompatible_batch_names_the_field() {
        let probes = [20, 30].map(|n| Probe {
            metric: Metric::Sop,
            scheme: CombiningScheme::Sc,
            params: desk(n),
        });
        assert_eq!(
            estimate_points(&probes, Scenario::IdealPhase, 10_000, 1, SEQ),
            Err(McError::IncompatiblePoints { field: "n_ris" })
        );
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let p = desk(20).with_omega_p(db_to_linear(10.0)).unwrap();
        let run = |exec| {
            let e = estimate(
                Metric::Sop,
                CombiningScheme::Mrc,
                &p,
                Scenario::phase_error(),
                20_000,
                5,
                exec,
            )
            .unwrap();
            let m = empirical_moments(
                Quantity::PsiD,
                &p,
                Scenario::phase_error(),
                100_000,
                5,
                exec,
            )
            .unwrap();
            (e, m)
        };
        let base = run(SEQ);
        for threads in [Some(1), Some(2), Some(3), None] {
            assert_eq!(run(Execution::Parallel { threads }), base);
        }
    }

    #[test]
    fn standard_error_follows_binomial_formula() {
        let e = EstimateWithCI::from_count(250, 1000, 0);
        assert_eq!(e.estimate, 0.25);
        assert!((e.std_error - (0.25f64 * 0.75 / 1000.0).sqrt()).abs() < 1e-15);
        assert_eq!(EstimateWithCI::from_count(0, 1000, 0).std_error, 0.0);
    }

    #[test]
    fn moments_merge_matches_single_pass() {
        let xs: Vec<f64> = (0..1000)
            .map(|i| ((i * 37) % 101) as f64 * 0.3 - 4.0)
            .collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|&x| whole.push(x));
        let mut merged = Moments::default();
        for c in xs.chunks(77) {
            let mut m = Moments::default();
            c.iter().for_each(|&x| m.push(x));
            merged.merge(&m);
        }
        assert_eq!(merged.count, whole.count);
        assert!((merged.mean - whole.mean).abs() < 1e-12);
        assert!((merged.variance() / whole.variance() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cascade_sum_has_quarter_pi_mean_and_product_variance() {
        let m = empirical_moments(
            Quantity::CascadeSum,
            &desk(30),
            Scenario::IdealPhase,
            200_000,
            3,
            Execution::default(),
        )
        .unwrap();
        assert!((m.mean / (30.0 * PI / 4.0) - 1.0).abs() < 0.01);
        let per = m.variance() / 30.0;
        let product = CltVariance::ProductMoment.per_element();
        let printed = CltVariance::PaperPrinted.per_element();
        assert!((per - product).abs() < (per - printed).abs());
        assert!((per / product - 1.0).abs() < 0.02);
    }

    #[test]
    fn exponential_means_match_model() {
        let p = desk(30);
        let e = empirical_moments(
            Quantity::PsiE,
            &p,
            Scenario::IdealPhase,
            200_000,
            4,
            Execution::default(),
        )
        .unwrap();
        assert!(
            (e.mean / p.lambda_e - 1.0).abs() < 0.02,
            "{} vs {}",
            e.mean,
            p.lambda_e
        );
        let pp = empirical_moments(
            Quantity::PsiP,
            &p,
            Scenario::IdealPhase,
            200_000,
            4,
            Execution::default(),
        )
        .unwrap();
        assert!((pp.mean / p.lambda_p_param - 1.0).abs() < 0.02);
    }

    #[test]
    fn direct_only_gain_matches_rayleigh_mean() {
        let p = desk(30);
        let l = p.link.unwrap();
        let m = empirical_moments(
            Quantity::PsiD,
            &p,
            Scenario::NoRis,
            400_000,
            6,
            Execution::default(),
        )
        .unwrap();
        let want = l.q_threshold / l.sigma2_d * l.gain_sd * l.gain_sd * 2.0 * l.delta;
        assert!((m.mean / want - 1.0).abs() < 0.01, "{} vs {want}", m.mean);
    }

    #[test]
    fn sop_estimate_tracks_closed_form() {
        let base = desk(20).with_omega_e(db_to_linear(10.0)).unwrap();
        let mut probes = Vec::new();
        for db in [0.0, 5.0, 10.0, 15.0, 20.0] {
            for scheme in CombiningScheme::ALL {
                probes.push(Probe {
                    metric: Metric::Sop,
                    scheme,
                    params: base.with_omega_p(db_to_linear(db)).unwrap(),
                });
            }
        }
        let est = estimate_points(
            &probes,
            Scenario::IdealPhase,
            200_000,
            21,
            Execution::default(),
        )
        .unwrap();
        for (pr, e) in probes.iter().zip(&est) {
            let closed = sop_closed(pr.scheme, &pr.params).unwrap().value;
            let tol = (3.0 * e.std_error).max(0.05 * closed);
            assert!(
                (e.estimate - closed).abs() <= tol,
                "{pr:?}: {} vs {closed}",
                e.estimate
            );
        }
    }

    #[test]
    fn zero_rate_sop_complements_pnsc() {
        let p = desk(20)
            .with_rs(0.0)
            .unwrap()
            .with_omega_p(db_to_linear(8.0))
            .unwrap();
        for scheme in CombiningScheme::ALL {
            let probes = [Metric::Sop, Metric::Pnsc].map(|metric| Probe {
                metric,
                scheme,
                params: p,
            });
            let e = estimate_points(&probes, Scenario::IdealPhase, 50_000, 8, SEQ).unwrap();
            assert!((e[0].estimate + e[1].estimate - 1.0).abs() <= 2.0 * e[0].std_error);
            let closed = pnsc_closed(scheme, &p).unwrap().value;
            assert!((e[1].estimate - closed).abs() <= (4.0 * e[1].std_error).max(0.05 * closed));
        }
    }

    #[test]
    fn scenario_ordering_on_outage() {
        let base = desk(30);
        let probes: Vec<Probe> = (-20..=0)
            .step_by(4)
            .map(|q| Probe {
                metric: Metric::SnOutage,
                scheme: CombiningScheme::Sc,
                params: base.with_q_threshold(db_to_linear(q as f64)).unwrap(),
            })
            .collect();
        let run = |s| estimate_points(&probes, s, 50_000, 2, Execution::default()).unwrap();
        let (ideal, noisy, bare) = (
            run(Scenario::IdealPhase),
            run(Scenario::phase_error()),
            run(Scenario::NoRis),
        );
        for i in 0..probes.len() {
            assert!(ideal[i].estimate <= noisy[i].estimate);
            assert!(noisy[i].estimate <= bare[i].estimate);
        }
    }

    #[test]
    fn quadrupling_trials_halves_error() {
        let p = desk(20).with_omega_p(db_to_linear(6.0)).unwrap();
        let e1 = estimate(
            Metric::Sop,
            CombiningScheme::Sc,
            &p,
            Scenario::IdealPhase,
            20_000,
            13,
            SEQ,
        )
        .unwrap();
        let e4 = estimate(
            Metric::Sop,
            CombiningScheme::Sc,
            &p,
            Scenario::IdealPhase,
            80_000,
            13,
            SEQ,
        )
        .unwrap();
        let ratio = e1.std_error / e4.std_error;
        assert!((1.6..=2.4).contains(&ratio), "{ratio}");
    }

    #[test]
    fn samples_follow_trial_order() {
        let p = desk(10);
        let xs = sample_quantity(
            Quantity::PsiE,
            &p,
            Scenario::IdealPhase,
            5000,
            17,
            Execution::default(),
        )
        .unwrap();
        assert_eq!(xs.len(), 5000);
        let r = sample_realization(&p, Scenario::IdealPhase, 4321, 17).unwrap();
        assert_eq!(xs[4321], r.psi_e);
    }
}
