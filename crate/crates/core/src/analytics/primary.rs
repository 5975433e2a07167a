use super::{
    alternating, ln_binomial, ln_factorial, AnalyticsError, CombiningScheme, Probability,
    SignedLogSum, MAX_ANTENNAS,
};
use crate::quadrature::{integrate_to_infinity, QuadOptions};
use crate::specfun::{ln_whittaker_w_scaled, upper_gamma_zero_scaled};
use crate::system_model::{Convention, DerivedParams};

const LN_OVERFLOW: f64 = 700.0;

fn check_orders(p: &DerivedParams) -> Result<(), AnalyticsError> {
    if p.n_pt == 0 || p.n_eav == 0 || p.n_pt > MAX_ANTENNAS || p.n_eav > MAX_ANTENNAS {
        return Err(AnalyticsError::UnsupportedOrder {
            n_pt: p.n_pt,
            n_eav: p.n_eav,
            max: MAX_ANTENNAS,
        });
    }
    Ok(())
}

fn check_gamma(gamma: f64) -> Result<(), AnalyticsError> {
    if gamma >= 0.0 {
        Ok(())
    } else {
        Err(AnalyticsError::Domain {
            what: "gamma",
            value: gamma,
        })
    }
}

/// The `𝓗` bundles of the secrecy expressions for one `(n, k)` term.
///
/// `h1`–`h5` are evaluated at the configured target rate, `h6`–`h8` at zero
/// target rate (`β = 1`, `α = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SopCoeffs {
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    pub h4: f64,
    pub h5: f64,
    pub h6: f64,
    pub h7: f64,
    pub h8: f64,
}

impl SopCoeffs {
    pub fn at(p: &DerivedParams, n: usize, k: usize) -> Self {
        let (phi, we, lam) = (p.phi_cap, p.omega_e, p.lambda_e);
        let n1 = (n + 1) as f64;
        let h1 = (k + 1) as f64 / we;
        let h4 = p.beta * n1 / phi + h1;
        let h7 = n1 / phi + h1;
        Self {
            h1,
            h2: p.alpha * n1 / phi,
            h3: h4 / (lam * h1),
            h4,
            h5: (phi + p.beta * we * n1) / (phi * lam),
            h6: h7 / (lam * h1),
            h7,
            h8: (phi + we * n1) / (phi * lam),
        }
    }
}

/// CDF of the selected primary-link SINR, `(1 − e^{−γ/Φ})^{N_P}` written as
/// a binomial sum over antenna subsets.
pub fn cdf_gamma_p(gamma: f64, p: &DerivedParams) -> Result<f64, AnalyticsError> {
    check_gamma(gamma)?;
    check_orders(p)?;
    let np = p.n_pt;
    let mut sum = 0.0;
    for n in 0..np {
        let c = np as f64 * ln_binomial(np - 1, n).exp() / (n + 1) as f64;
        sum += alternating(n) * c * -(-gamma * (n + 1) as f64 / p.phi_cap).exp_m1();
    }
    Ok(sum.clamp(0.0, 1.0))
}

fn direct_cdf_gamma_p(x: f64, p: &DerivedParams) -> f64 {
    (-(-x / p.phi_cap).exp_m1()).powi(p.n_pt as i32)
}

/// Density of the eavesdropper SINR after combining.
pub fn pdf_gamma_e(
    gamma: f64,
    scheme: CombiningScheme,
    p: &DerivedParams,
) -> Result<f64, AnalyticsError> {
    check_gamma(gamma)?;
    check_orders(p)?;
    let (we, lam, ne) = (p.omega_e, p.lambda_e, p.n_eav);
    let v = match scheme {
        CombiningScheme::Sc => {
            let mut s = 0.0;
            for k in 0..ne {
                let k1 = (k + 1) as f64;
                let u = gamma * k1 / we + 1.0 / lam;
                s += alternating(k) * ne as f64 * ln_binomial(ne - 1, k).exp() / (we * lam)
                    * (-gamma * k1 / we).exp()
                    * (1.0 + u)
                    / (u * u);
            }
            s
        }
        CombiningScheme::Mrc => {
            let u = gamma / we + 1.0 / lam;
            let mut s = 0.0;
            for k in 0..=ne {
                s += (ln_binomial(ne, k) + ln_factorial(k) - (k + 1) as f64 * u.ln()).exp();
            }
            let ln_pre = -gamma / we - ln_factorial(ne - 1) - ne as f64 * we.ln() - lam.ln();
            gamma.powi(ne as i32 - 1) * ln_pre.exp() * s
        }
    };
    Ok(v.max(0.0))
}

fn secrecy_kernel(
    scheme: CombiningScheme,
    p: &DerivedParams,
    beta: f64,
    alpha: f64,
) -> Result<f64, AnalyticsError> {
    check_orders(p)?;
    let literal = p.convention == Convention::PaperLiteral;
    let (phi, we, lam) = (p.phi_cap, p.omega_e, p.lambda_e);
    let (np, ne) = (p.n_pt, p.n_eav);
    let mut sum = SignedLogSum::default();
    let mut push = |sign: f64, ln_mag: f64, n: usize, k: usize| {
        if ln_mag > LN_OVERFLOW || ln_mag.is_nan() {
            return Err(AnalyticsError::Overflow { n, k });
        }
        sum.push(sign, ln_mag);
        Ok(())
    };
    for n in 0..np {
        let n1 = (n + 1) as f64;
        let ln_c = (np as f64).ln() + ln_binomial(np - 1, n) - n1.ln();
        let sign_c = alternating(n);
        push(sign_c, ln_c, n, 0)?;
        let h2 = alpha * n1 / phi;
        match scheme {
            CombiningScheme::Sc => {
                let ln_front = (ne as f64).ln() - (we * lam).ln();
                for k in 0..ne {
                    let h1 = (k + 1) as f64 / we;
                    let h4 = beta * n1 / phi + h1;
                    let h3 = h4 / (lam * h1);
                    let e1s = upper_gamma_zero_scaled(h3)?;
                    let ratio = (h4 - h1) / h1;
                    let (bracket, ln_exp) = if literal {
                        (lam + ratio * (-2.0 * h3).exp() * e1s, 2.0 * h3 - h2)
                    } else {
                        (lam - ratio * e1s, -h2)
                    };
                    let ln_term = ln_c + ln_front + ln_binomial(ne - 1, k) + ln_exp - h1.ln()
                        + bracket.abs().ln();
                    push(-sign_c * alternating(k) * bracket.signum(), ln_term, n, k)?;
                }
            }
            CombiningScheme::Mrc => {
                let h5 = (phi + beta * we * n1) / (phi * lam);
                for k in 0..=ne {
                    let m = (ne - k) as f64;
                    let kappa = -((ne + k) as f64) / 2.0;
                    let mu = (-(ne as f64) + k as f64 + 1.0) / 2.0;
                    let ln_term = ln_c + ln_binomial(ne, k) + ln_factorial(k)
                        - m * lam.ln()
                        - 0.5 * m * h5.ln()
                        + ln_whittaker_w_scaled(kappa, mu, h5)?
                        - h2;
                    push(-sign_c, ln_term, n, k)?;
                }
            }
        }
    }
    Ok(sum.value())
}

/// Secrecy outage probability in closed form.
pub fn sop_closed(
    scheme: CombiningScheme,
    p: &DerivedParams,
) -> Result<Probability, AnalyticsError> {
    if !(p.beta >= 1.0) {
        return Err(AnalyticsError::Domain {
            what: "beta",
            value: p.beta,
        });
    }
    secrecy_kernel(scheme, p, p.beta, p.alpha).map(Probability::clamped)
}

/// Probability of non-zero secrecy capacity in closed form.
pub fn pnsc_closed(
    scheme: CombiningScheme,
    p: &DerivedParams,
) -> Result<Probability, AnalyticsError> {
    secrecy_kernel(scheme, p, 1.0, 0.0).map(|v| Probability::clamped(1.0 - v))
}

/// Eavesdropper SINR law used by the quadrature oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EavDensity {
    Combining(CombiningScheme),
    /// Degenerate eavesdropper that never receives anything.
    PointMassAtZero,
}

fn oracle_options() -> QuadOptions {
    QuadOptions {
        abs_tol: 1e-12,
        rel_tol: 1e-10,
        ..QuadOptions::default()
    }
}

fn outage_integral(
    density: EavDensity,
    p: &DerivedParams,
    beta: f64,
    alpha: f64,
    opts: &QuadOptions,
) -> Result<f64, AnalyticsError> {
    check_orders(p)?;
    let scheme = match density {
        EavDensity::PointMassAtZero => return Ok(direct_cdf_gamma_p(alpha, p)),
        EavDensity::Combining(s) => s,
    };
    let mut points = vec![0.0, p.phi_cap / beta, p.omega_e];
    points.sort_by(f64::total_cmp);
    points.dedup();
    let r = integrate_to_infinity(
        |g| direct_cdf_gamma_p(beta * g + alpha, p) * pdf_gamma_e(g, scheme, p).unwrap_or(f64::NAN),
        &points,
        p.omega_e,
        opts,
    )?;
    Ok(r.value)
}

/// `∫ F_{γP}(βγ + α) f_{γE}(γ) dγ` by adaptive quadrature.
pub fn sop_quadrature_with(
    density: EavDensity,
    p: &DerivedParams,
    opts: &QuadOptions,
) -> Result<f64, AnalyticsError> {
    outage_integral(density, p, p.beta, p.alpha, opts)
}

/// Quadrature oracle for [`sop_closed`].
pub fn sop_quadrature(scheme: CombiningScheme, p: &DerivedParams) -> Result<f64, AnalyticsError> {
    sop_quadrature_with(EavDensity::Combining(scheme), p, &oracle_options())
}

/// Quadrature oracle for [`pnsc_closed`], `1 − ∫ F_{γP}(γ) f_{γE}(γ) dγ`.
pub fn pnsc_quadrature(scheme: CombiningScheme, p: &DerivedParams) -> Result<f64, AnalyticsError> {
    let v = outage_integral(
        EavDensity::Combining(scheme),
        p,
        1.0,
        0.0,
        &oracle_options(),
    )?;
    Ok(1.0 - v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticSop {
    /// Secrecy diversity order, equal to the primary antenna count.
    pub diversity_order: usize,
    /// Secrecy array gain.
    pub array_gain: f64,
    /// `(array_gain · ω_p)^{−diversity_order}`.
    pub value: f64,
}

fn ln_add(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// `E[γ_E^n]` for the combined eavesdropper SINR.
pub(crate) fn eav_moment(
    scheme: CombiningScheme,
    n: usize,
    p: &DerivedParams,
) -> Result<f64, AnalyticsError> {
    let (we, lam, ne) = (p.omega_e, p.lambda_e, p.n_eav);
    let z = 1.0 / lam;
    let nf = n as f64;
    let mut sum = SignedLogSum::default();
    match scheme {
        CombiningScheme::Sc => {
            let w1 = ln_whittaker_w_scaled(-(nf + 1.0) / 2.0, -nf / 2.0, z)? - 0.5 * lam.ln();
            let w2 = ln_whittaker_w_scaled(-(nf + 2.0) / 2.0, (1.0 - nf) / 2.0, z)?;
            let w = ln_add(w1, w2);
            for k in 0..ne {
                let ln_term =
                    (ne as f64).ln() + ln_binomial(ne - 1, k) + ln_factorial(n) + nf * we.ln()
                        - 0.5 * nf * lam.ln()
                        - (nf + 1.0) * ((k + 1) as f64).ln()
                        + w;
                sum.push(alternating(k), ln_term);
            }
        }
        CombiningScheme::Mrc => {
            let nef = ne as f64;
            for k in 0..=ne {
                let kf = k as f64;
                let ln_term = ln_binomial(ne, k) + ln_factorial(k) + libm::lgamma(nef + nf)
                    - libm::lgamma(nef)
                    + nf * we.ln()
                    + ln_whittaker_w_scaled(
                        -(nef + kf + nf) / 2.0,
                        (-nef + kf - nf + 1.0) / 2.0,
                        z,
                    )?
                    - 0.5 * (nef + nf - kf) * lam.ln();
                sum.push(1.0, ln_term);
            }
        }
    }
    Ok(sum.value())
}

fn literal_mrc_gain_sum(p: &DerivedParams) -> Result<f64, AnalyticsError> {
    let (we, lam, ne, np) = (p.omega_e, p.lambda_e, p.n_eav, p.n_pt);
    let nef = ne as f64;
    let mut sum = SignedLogSum::default();
    for k in 0..=ne {
        for n in 0..=np {
            let (kf, nf) = (k as f64, n as f64);
            let a_pow = (np - n) as f64;
            if p.alpha == 0.0 && np != n {
                continue;
            }
            let ln_z2 = nf * p.beta.ln()
                + if a_pow > 0.0 {
                    a_pow * p.alpha.ln()
                } else {
                    0.0
                }
                + libm::lgamma(nef + nf)
                + ln_factorial(k)
                + nf * we.ln()
                - libm::lgamma(nef)
                - np as f64 * p.vartheta.ln()
                + 1.0 / (2.0 * we)
                - 0.5 * (nef + nf - kf) * lam.ln();
            let z = 1.0 / we;
            let ln_w =
                ln_whittaker_w_scaled(-(nef + kf + nf) / 2.0, (-nef + kf - nf + 1.0) / 2.0, z)?
                    - 0.5 * z;
            sum.push(1.0, ln_binomial(ne, k) + ln_binomial(np, n) + ln_z2 + ln_w);
        }
    }
    Ok(sum.value())
}

/// High-SNR secrecy outage `(𝒢_a ω_p)^{−N_P}`.
pub fn sop_asymptotic(
    scheme: CombiningScheme,
    p: &DerivedParams,
) -> Result<AsymptoticSop, AnalyticsError> {
    check_orders(p)?;
    let np = p.n_pt;
    let npf = np as f64;
    let gain_sum = if p.convention == Convention::PaperLiteral {
        match scheme {
            CombiningScheme::Sc => {
                return Err(AnalyticsError::LiteralForm(
                    "SC array gain uses an unbound Whittaker index",
                ))
            }
            CombiningScheme::Mrc => literal_mrc_gain_sum(p)?,
        }
    } else {
        let mut s = 0.0;
        for n in 0..=np {
            let weight =
                ln_binomial(np, n).exp() * p.beta.powi(n as i32) * p.alpha.powi((np - n) as i32);
            if weight != 0.0 {
                s += weight * eav_moment(scheme, n, p)?;
            }
        }
        s / p.vartheta.powi(np as i32)
    };
    let array_gain = gain_sum.powf(-1.0 / npf);
    Ok(AsymptoticSop {
        diversity_order: np,
        array_gain,
        value: (array_gain * p.omega_p).powf(-npf),
    })
}
