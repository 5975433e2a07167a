//! Network geometry, radio configuration and the derived closed-form symbols.

use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("invalid {field}: {value}")]
    Invalid { field: &'static str, value: f64 },
    #[error("{operation} needs geometry-derived parameters, but these were built from raw closed-form values")]
    MissingGeometry { operation: &'static str },
}

fn require(cond: bool, field: &'static str, value: f64) -> Result<(), ModelError> {
    if cond {
        Ok(())
    } else {
        Err(ModelError::Invalid { field, value })
    }
}

fn positive(field: &'static str, value: f64) -> Result<(), ModelError> {
    require(value > 0.0 && value.is_finite(), field, value)
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Node-pair distances in metres.
///
/// `s` secondary source, `r` RIS, `d` secondary destination, `p` primary
/// transmitter or receiver, `e` eavesdropper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkGeometry {
    pub d_sr: f64,
    pub d_rd: f64,
    pub d_sd: f64,
    pub d_pp: f64,
    pub d_pe: f64,
    pub d_re: f64,
    pub d_rp: f64,
    pub d_se: f64,
    pub d_sp: f64,
    pub d_o: f64,
    pub eta: f64,
}

impl NetworkGeometry {
    /// Normalised layout: every link at the reference distance except the
    /// eavesdropper links `d_pe = d_re = 1.2`, path-loss exponent 4.
    pub fn desk() -> Self {
        Self {
            d_sr: 1.0,
            d_rd: 1.0,
            d_sd: 1.0,
            d_pp: 1.0,
            d_pe: 1.2,
            d_re: 1.2,
            d_rp: 1.0,
            d_se: 1.0,
            d_sp: 1.0,
            d_o: 1.0,
            eta: 4.0,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for (field, v) in [
            ("d_sr", self.d_sr),
            ("d_rd", self.d_rd),
            ("d_sd", self.d_sd),
            ("d_pp", self.d_pp),
            ("d_pe", self.d_pe),
            ("d_re", self.d_re),
            ("d_rp", self.d_rp),
            ("d_se", self.d_se),
            ("d_sp", self.d_sp),
            ("d_o", self.d_o),
        ] {
            positive(field, v)?;
        }
        require((2.0..=6.0).contains(&self.eta), "eta", self.eta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioConfig {
    pub n_ris: usize,
    pub n_pt: usize,
    pub n_eav: usize,
    /// Primary transmit power (W).
    pub p_p: f64,
    /// Interference temperature at the primary receiver (W).
    pub q_threshold: f64,
    pub sigma2_d: f64,
    pub sigma2_p: f64,
    pub sigma2_e: f64,
    /// Average SNR of the secondary-source to eavesdropper link (linear).
    pub gamma_bar_se: f64,
    /// Rayleigh parameter of the direct secondary link.
    pub delta: f64,
    /// Primary target secrecy rate (b/s/Hz).
    pub r_s: f64,
    /// Secondary target rate (b/s/Hz).
    pub r_d: f64,
}

impl RadioConfig {
    pub fn desk() -> Self {
        Self {
            n_ris: 30,
            n_pt: 3,
            n_eav: 3,
            p_p: 100.0,
            q_threshold: 10.0,
            sigma2_d: 1.0,
            sigma2_p: 10.0,
            sigma2_e: 1.0,
            gamma_bar_se: 10f64.powf(0.5),
            delta: 2.0,
            r_s: 1.0,
            r_d: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        require(self.n_ris >= 1, "n_ris", self.n_ris as f64)?;
        require(self.n_pt >= 1, "n_pt", self.n_pt as f64)?;
        require(self.n_eav >= 1, "n_eav", self.n_eav as f64)?;
        for (field, v) in [
            ("p_p", self.p_p),
            ("q_threshold", self.q_threshold),
            ("sigma2_d", self.sigma2_d),
            ("sigma2_p", self.sigma2_p),
            ("sigma2_e", self.sigma2_e),
            ("gamma_bar_se", self.gamma_bar_se),
            ("delta", self.delta),
        ] {
            positive(field, v)?;
        }
        require(self.r_s >= 0.0 && self.r_s.is_finite(), "r_s", self.r_s)?;
        require(self.r_d >= 0.0 && self.r_d.is_finite(), "r_d", self.r_d)
    }
}

/// Which form of the link-budget definitions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// Physically consistent distances in every link gain.
    #[default]
    Corrected,
    /// Definitions exactly as originally printed, including the squared
    /// reference distance on single-hop links, `d_sd` in the primary to
    /// eavesdropper gain and `d_re` in the destination cascade.
    PaperLiteral,
}

/// Variance of `Σ|h_s||h_d|` used by the Gaussian approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CltVariance {
    /// `N(1 − π²/16)`, the variance of a product of unit Rayleigh amplitudes.
    #[default]
    ProductMoment,
    /// `N(1 − π/16)`.
    PaperPrinted,
}

impl CltVariance {
    pub fn per_element(self) -> f64 {
        match self {
            CltVariance::ProductMoment => 1.0 - PI * PI / 16.0,
            CltVariance::PaperPrinted => 1.0 - PI / 16.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ModelOptions {
    pub convention: Convention,
    pub clt_variance: CltVariance,
}

/// Terms that only exist when parameters come from a physical layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkTerms {
    pub n_ris: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub epsilon_clt: f64,
    pub sigma2_clt: f64,
    pub clt_variance: CltVariance,
    pub delta: f64,
    pub r_d: f64,
    pub q_threshold: f64,
    pub sigma2_d: f64,
    pub sigma2_p: f64,
    /// Amplitude gain of the RIS cascade towards the secondary destination.
    pub gain_rd: f64,
    /// Amplitude gain of the direct secondary link.
    pub gain_sd: f64,
    /// Amplitude gain of the RIS cascade towards the primary receiver.
    pub gain_rp: f64,
    /// Amplitude gain of the secondary-source to primary-receiver link.
    pub gain_sp: f64,
}

impl LinkTerms {
    /// SNR threshold `2^{r_d} − 1` for the secondary link.
    pub fn gamma_th(&self) -> f64 {
        2f64.powf(self.r_d) - 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub n_pt: usize,
    pub n_eav: usize,
    /// Mean of the exponential jamming power at the eavesdropper.
    pub lambda_e: f64,
    /// Mean of the exponential interference gain at the primary receiver.
    pub lambda_p_param: f64,
    pub omega_e: f64,
    pub omega_p: f64,
    pub vartheta: f64,
    pub phi_cap: f64,
    pub alpha: f64,
    pub beta: f64,
    pub r_s: f64,
    pub convention: Convention,
    pub link: Option<LinkTerms>,
}

fn amp(ratio: f64, eta: f64) -> f64 {
    ratio.powf(-eta / 2.0)
}

/// Compute every closed-form symbol from a layout and radio configuration.
pub fn derive_params(
    geom: &NetworkGeometry,
    radio: &RadioConfig,
    opts: ModelOptions,
) -> Result<DerivedParams, ModelError> {
    geom.validate()?;
    radio.validate()?;
    let literal = opts.convention == Convention::PaperLiteral;
    let eta = geom.eta;
    let d_o = geom.d_o;
    let d_o2 = d_o * d_o;
    let single_hop_ref = if literal { d_o2 } else { d_o };
    let n = radio.n_ris as f64;

    let sqrt_se = radio.gamma_bar_se.sqrt();
    let lambda1 = sqrt_se * amp(geom.d_sr * geom.d_re / d_o2, eta);
    let lambda2 = sqrt_se * amp(geom.d_se / single_hop_ref, eta);
    let lambda_e = n * lambda1 * lambda1 + lambda2 * lambda2;

    let gain_rp = amp(geom.d_sr * geom.d_rp / d_o2, eta);
    let gain_sp = amp(geom.d_sp / d_o, eta);
    let lambda_p_param = n * gain_rp * gain_rp + gain_sp * gain_sp;

    let d_eav = if literal { geom.d_sd } else { geom.d_pe };
    let omega_e = radio.p_p / radio.sigma2_e * (d_eav / d_o).powf(-eta);
    let omega_p = radio.p_p / radio.sigma2_p * (geom.d_pp / single_hop_ref).powf(-eta);
    let vartheta = 1.0 / (radio.q_threshold / radio.sigma2_p + 1.0);

    let gain_rd_analytic = amp(geom.d_sr * geom.d_rd / d_o2, eta);
    let gain_rd = if literal {
        amp(geom.d_sr * geom.d_re / d_o2, eta)
    } else {
        gain_rd_analytic
    };
    let gain_sd = amp(geom.d_sd / single_hop_ref, eta);
    let scale_d = radio.q_threshold.sqrt() / radio.sigma2_d.sqrt();

    let beta = 2f64.powf(radio.r_s);
    let link = LinkTerms {
        n_ris: radio.n_ris,
        lambda1,
        lambda2,
        omega1: scale_d * gain_rd_analytic,
        omega2: scale_d * gain_sd,
        epsilon_clt: n * PI / 4.0,
        sigma2_clt: n * opts.clt_variance.per_element(),
        clt_variance: opts.clt_variance,
        delta: radio.delta,
        r_d: radio.r_d,
        q_threshold: radio.q_threshold,
        sigma2_d: radio.sigma2_d,
        sigma2_p: radio.sigma2_p,
        gain_rd,
        gain_sd,
        gain_rp,
        gain_sp,
    };
    Ok(DerivedParams {
        n_pt: radio.n_pt,
        n_eav: radio.n_eav,
        lambda_e,
        lambda_p_param,
        omega_e,
        omega_p,
        vartheta,
        phi_cap: omega_p * vartheta,
        alpha: beta - 1.0,
        beta,
        r_s: radio.r_s,
        convention: opts.convention,
        link: Some(link),
    })
}

/// Build parameters directly from closed-form symbols, without a layout.
///
/// The secondary-link terms are absent, so secondary outage and simulation
/// reject the result.
#[allow(clippy::too_many_arguments)]
pub fn params_from_raw(
    n_pt: usize,
    n_eav: usize,
    omega_p: f64,
    omega_e: f64,
    lambda_e: f64,
    lambda_p_param: f64,
    vartheta: f64,
    r_s: f64,
) -> Result<DerivedParams, ModelError> {
    require(n_pt >= 1, "n_pt", n_pt as f64)?;
    require(n_eav >= 1, "n_eav", n_eav as f64)?;
    positive("omega_p", omega_p)?;
    positive("omega_e", omega_e)?;
    positive("lambda_e", lambda_e)?;
    positive("lambda_p_param", lambda_p_param)?;
    require(vartheta > 0.0 && vartheta <= 1.0, "vartheta", vartheta)?;
    require(r_s >= 0.0 && r_s.is_finite(), "r_s", r_s)?;
    let beta = 2f64.powf(r_s);
    Ok(DerivedParams {
        n_pt,
        n_eav,
        lambda_e,
        lambda_p_param,
        omega_e,
        omega_p,
        vartheta,
        phi_cap: omega_p * vartheta,
        alpha: beta - 1.0,
        beta,
        r_s,
        convention: Convention::Corrected,
        link: None,
    })
}

impl DerivedParams {
    pub fn link(&self, operation: &'static str) -> Result<&LinkTerms, ModelError> {
        self.link
            .as_ref()
            .ok_or(ModelError::MissingGeometry { operation })
    }

    /// Override the primary link SNR, keeping everything else.
    pub fn with_omega_p(mut self, omega_p: f64) -> Result<Self, ModelError> {
        positive("omega_p", omega_p)?;
        self.omega_p = omega_p;
        self.phi_cap = omega_p * self.vartheta;
        Ok(self)
    }

    /// Override the primary to eavesdropper SNR, keeping everything else.
    pub fn with_omega_e(mut self, omega_e: f64) -> Result<Self, ModelError> {
        positive("omega_e", omega_e)?;
        self.omega_e = omega_e;
        Ok(self)
    }

    pub fn with_rs(mut self, r_s: f64) -> Result<Self, ModelError> {
        require(r_s >= 0.0 && r_s.is_finite(), "r_s", r_s)?;
        self.r_s = r_s;
        self.beta = 2f64.powf(r_s);
        self.alpha = self.beta - 1.0;
        Ok(self)
    }

    pub fn with_rd(mut self, r_d: f64) -> Result<Self, ModelError> {
        require(r_d >= 0.0 && r_d.is_finite(), "r_d", r_d)?;
        let link = self.link.as_mut().ok_or(ModelError::MissingGeometry {
            operation: "with_rd",
        })?;
        link.r_d = r_d;
        Ok(self)
    }

    /// Change the interference threshold, rescaling `ϑ`, `Φ`, `Ω₁` and `Ω₂`.
    pub fn with_q_threshold(mut self, q: f64) -> Result<Self, ModelError> {
        positive("q_threshold", q)?;
        let link = self.link.as_mut().ok_or(ModelError::MissingGeometry {
            operation: "with_q_threshold",
        })?;
        let ratio = (q / link.q_threshold).sqrt();
        link.omega1 *= ratio;
        link.omega2 *= ratio;
        link.q_threshold = q;
        self.vartheta = 1.0 / (q / link.sigma2_p + 1.0);
        self.phi_cap = self.omega_p * self.vartheta;
        Ok(self)
    }
}
