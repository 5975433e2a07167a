use super::McError;
use crate::system_model::{DerivedParams, LinkTerms};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Propagation variant applied to every draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scenario {
    /// RIS phases co-phase the cascade with the direct secondary link.
    IdealPhase,
    /// Each RIS phase is off by an error uniform on `[−bound, bound]`.
    UniformPhaseError { bound: f64 },
    /// No line of sight between the secondary source and destination.
    NoDirectLink,
    /// The surface is absent from every link.
    NoRis,
}

impl Scenario {
    pub const DEFAULT_PHASE_ERROR_BOUND: f64 = PI / 4.0;

    pub fn phase_error() -> Self {
        Scenario::UniformPhaseError {
            bound: Self::DEFAULT_PHASE_ERROR_BOUND,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Scenario::IdealPhase => "ideal",
            Scenario::UniformPhaseError { .. } => "phase-error",
            Scenario::NoDirectLink => "no-direct",
            Scenario::NoRis => "no-ris",
        }
    }

    pub fn validate(&self) -> Result<(), McError> {
        match *self {
            Scenario::UniformPhaseError { bound } if !(bound > 0.0 && bound <= PI) => {
                Err(McError::InvalidScenario { bound })
            }
            _ => Ok(()),
        }
    }

    fn phase_bound(&self) -> f64 {
        match *self {
            Scenario::UniformPhaseError { bound } => bound,
            _ => 0.0,
        }
    }

    fn has_ris(&self) -> bool {
        *self != Scenario::NoRis
    }

    fn has_direct(&self) -> bool {
        *self != Scenario::NoDirectLink
    }
}

/// One full draw of every fading coefficient and the resulting SNRs.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization {
    pub h_s: Vec<Complex64>,
    pub h_d: Vec<Complex64>,
    pub h_p_ris: Vec<Complex64>,
    pub h_e_ris: Vec<Complex64>,
    /// Per-element phase error in radians (zero unless the scenario adds one).
    pub phase_error: Vec<f64>,
    pub h_pp: Vec<Complex64>,
    pub h_pe: Vec<Complex64>,
    /// Direct secondary-source to eavesdropper gain (one jamming term shared by all antennas).
    pub h_se: Complex64,
    pub h_sp: Complex64,
    pub h_sd: Complex64,
    pub cascade_sum: f64,
    pub psi_p: f64,
    pub psi_e: f64,
    pub psi_d: f64,
    pub p_s_instant: f64,
    pub gamma_d: f64,
    pub gamma_p: f64,
    pub gamma_e_sc: f64,
    pub gamma_e_mrc: f64,
}

/// Geometry-dependent constants shared by every point of a batch.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Shape {
    pub n_ris: usize,
    pub n_pt: usize,
    pub n_eav: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub gain_rd: f64,
    pub gain_sd: f64,
    pub gain_rp: f64,
    pub gain_sp: f64,
    pub delta: f64,
}

impl Shape {
    pub fn of(p: &DerivedParams) -> Result<Self, McError> {
        let l: &LinkTerms = p.link("monte-carlo simulation")?;
        Ok(Self {
            n_ris: l.n_ris,
            n_pt: p.n_pt,
            n_eav: p.n_eav,
            lambda1: l.lambda1,
            lambda2: l.lambda2,
            gain_rd: l.gain_rd,
            gain_sd: l.gain_sd,
            gain_rp: l.gain_rp,
            gain_sp: l.gain_sp,
            delta: l.delta,
        })
    }

    /// Name of the first field in which `other` differs, if any.
    pub fn mismatch(&self, other: &Shape) -> Option<&'static str> {
        let fields = [
            ("n_ris", self.n_ris == other.n_ris),
            ("n_pt", self.n_pt == other.n_pt),
            ("n_eav", self.n_eav == other.n_eav),
            ("lambda1", self.lambda1 == other.lambda1),
            ("lambda2", self.lambda2 == other.lambda2),
            ("gain_rd", self.gain_rd == other.gain_rd),
            ("gain_sd", self.gain_sd == other.gain_sd),
            ("gain_rp", self.gain_rp == other.gain_rp),
            ("gain_sp", self.gain_sp == other.gain_sp),
            ("delta", self.delta == other.delta),
        ];
        fields.iter().find(|f| !f.1).map(|f| f.0)
    }
}

/// Per-trial quantities that do not depend on `ω_p`, `ω_e`, `𝒬` or the rates.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Draw {
    pub cascade_sum: f64,
    pub psi_p: f64,
    pub psi_e: f64,
    /// `|received amplitude|²` at the secondary destination per unit transmit SNR.
    pub d_gain: f64,
    pub x_pp_max: f64,
    pub x_pe_max: f64,
    pub x_pe_sum: f64,
}

/// SNR triple of one draw at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Snrs {
    pub p_s: f64,
    pub psi_d: f64,
    pub gamma_d: f64,
    pub gamma_p: f64,
    pub gamma_e_sc: f64,
    pub gamma_e_mrc: f64,
}

impl Draw {
    pub fn snrs(&self, p: &DerivedParams, l: &LinkTerms) -> Snrs {
        let p_s = l.q_threshold / self.psi_p;
        let psi_d = l.q_threshold / l.sigma2_d * self.d_gain;
        let gamma_p = p.omega_p * self.x_pp_max / (p_s * self.psi_p / l.sigma2_p + 1.0);
        let jam = self.psi_e + 1.0;
        Snrs {
            p_s,
            psi_d,
            gamma_d: p_s / l.sigma2_d * self.d_gain,
            gamma_p,
            gamma_e_sc: p.omega_e * self.x_pe_max / jam,
            gamma_e_mrc: p.omega_e * self.x_pe_sum / jam,
        }
    }
}

/// Key shared by every trial of one seed; each trial then selects its own stream.
pub(crate) fn seed_key(seed: u64) -> [u8; 32] {
    ChaCha8Rng::seed_from_u64(seed).get_seed()
}

pub(crate) fn trial_rng(key: [u8; 32], trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(trial_index);
    rng
}

fn cn(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * FRAC_1_SQRT_2
}

fn unit(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r > 0.0 {
        z / r
    } else {
        Complex64::new(1.0, 0.0)
    }
}

/// Draw one trial.
///
/// Every coefficient is drawn in a fixed order whatever the scenario, so
/// scenarios evaluated with the same seed see common random numbers:
/// per element `h_s, h_d, h_p, h_e, error`, then `h_pp`, `h_pe`, `h_se`,
/// `h_sp` and finally `h_sd`.
pub(crate) fn draw(
    rng: &mut ChaCha8Rng,
    shape: &Shape,
    scenario: Scenario,
    mut record: Option<&mut ChannelRealization>,
) -> Draw {
    let bound = scenario.phase_bound();
    let ris = scenario.has_ris();

    // The element draws precede h_sd in the stream, so the cascade is
    // accumulated in the frame of h_sd and rotated once it is known.
    let mut d_sum = Complex64::new(0.0, 0.0);
    let mut p_sum = Complex64::new(0.0, 0.0);
    let mut e_sum = Complex64::new(0.0, 0.0);
    let mut cascade_sum = 0.0;
    for _ in 0..shape.n_ris {
        let h_s = cn(rng);
        let h_d = cn(rng);
        let h_p = cn(rng);
        let h_e = cn(rng);
        let u: f64 = rng.random();
        let err = bound * (2.0 * u - 1.0);
        if let Some(r) = record.as_deref_mut() {
            r.h_s.push(h_s);
            r.h_d.push(h_d);
            r.h_p_ris.push(h_p);
            r.h_e_ris.push(h_e);
            r.phase_error.push(err);
        }
        if !ris {
            continue;
        }
        let (a, b) = (h_s.norm(), h_d.norm());
        let rot = if err == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, err)
        };
        cascade_sum += a * b;
        d_sum += rot * (a * b);
        // h_s e^{jθ} relative to the direction of h_sd.
        let reflected = rot * a * unit(h_d).conj();
        p_sum += reflected * h_p;
        e_sum += reflected * h_e;
    }

    let mut x_pp_max = 0.0f64;
    for _ in 0..shape.n_pt {
        let h = cn(rng);
        x_pp_max = x_pp_max.max(h.norm_sqr());
        if let Some(r) = record.as_deref_mut() {
            r.h_pp.push(h);
        }
    }
    let (mut x_pe_max, mut x_pe_sum) = (0.0f64, 0.0);
    for _ in 0..shape.n_eav {
        let h = cn(rng);
        x_pe_max = x_pe_max.max(h.norm_sqr());
        x_pe_sum += h.norm_sqr();
        if let Some(r) = record.as_deref_mut() {
            r.h_pe.push(h);
        }
    }
    let h_se = cn(rng);
    let h_sp = cn(rng);
    let h_sd = cn(rng) * (2.0 * shape.delta).sqrt();
    let frame = unit(h_sd);

    let direct = if scenario.has_direct() {
        shape.gain_sd * h_sd.norm()
    } else {
        0.0
    };
    let d_field = shape.gain_rd * d_sum + direct;
    let p_field = shape.gain_rp * frame * p_sum + shape.gain_sp * h_sp;
    let e_field = shape.lambda1 * frame * e_sum + shape.lambda2 * h_se;

    if let Some(r) = record {
        r.h_se = h_se;
        r.h_sp = h_sp;
        r.h_sd = h_sd;
    }
    Draw {
        cascade_sum,
        psi_p: p_field.norm_sqr(),
        psi_e: e_field.norm_sqr(),
        d_gain: d_field.norm_sqr(),
        x_pp_max,
        x_pe_max,
        x_pe_sum,
    }
}

/// Draw trial `trial_index` of `seed`, keeping every coefficient.
pub fn sample_realization(
    p: &DerivedParams,
    scenario: Scenario,
    trial_index: u64,
    seed: u64,
) -> Result<ChannelRealization, McError> {
    scenario.validate()?;
    let shape = Shape::of(p)?;
    let link = p.link("monte-carlo simulation")?;
    let mut rec = ChannelRealization {
        h_s: Vec::with_capacity(shape.n_ris),
        h_d: Vec::with_capacity(shape.n_ris),
        h_p_ris: Vec::with_capacity(shape.n_ris),
        h_e_ris: Vec::with_capacity(shape.n_ris),
        phase_error: Vec::with_capacity(shape.n_ris),
        h_pp: Vec::with_capacity(shape.n_pt),
        h_pe: Vec::with_capacity(shape.n_eav),
        h_se: Complex64::default(),
        h_sp: Complex64::default(),
        h_sd: Complex64::default(),
        cascade_sum: 0.0,
        psi_p: 0.0,
        psi_e: 0.0,
        psi_d: 0.0,
        p_s_instant: 0.0,
        gamma_d: 0.0,
        gamma_p: 0.0,
        gamma_e_sc: 0.0,
        gamma_e_mrc: 0.0,
    };
    let mut rng = trial_rng(seed_key(seed), trial_index);
    let d = draw(&mut rng, &shape, scenario, Some(&mut rec));
    let s = d.snrs(p, link);
    rec.cascade_sum = d.cascade_sum;
    rec.psi_p = d.psi_p;
    rec.psi_e = d.psi_e;
    rec.psi_d = s.psi_d;
    rec.p_s_instant = s.p_s;
    rec.gamma_d = s.gamma_d;
    rec.gamma_p = s.gamma_p;
    rec.gamma_e_sc = s.gamma_e_sc;
    rec.gamma_e_mrc = s.gamma_e_mrc;
    Ok(rec)
}
