use super::{AnalyticsError, Probability};
use crate::quadrature::{integrate_to_infinity, QuadOptions};
use crate::specfun::{erf_approx, erf_exact, erfc, ErfApproxCoeffs, ERF_APPROX_MAX_ERROR};
use crate::system_model::{Convention, DerivedParams, LinkTerms};
use std::f64::consts::PI;

fn checked_sqrt(x: f64, coefficient: &'static str) -> Result<f64, AnalyticsError> {
    if x >= 0.0 {
        Ok(x.sqrt())
    } else {
        Err(AnalyticsError::NegativeSqrt { coefficient })
    }
}

/// Constants of the Gaussian/Rayleigh destination-gain CDF.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageCoeffs {
    pub varphi1: f64,
    pub varphi2: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
    pub xi4: f64,
    pub xi5: f64,
    pub epsilon: f64,
    pub sigma2: f64,
    pub delta: f64,
    pub lambda_p: f64,
}

impl OutageCoeffs {
    pub fn new(p: &DerivedParams) -> Result<Self, AnalyticsError> {
        let l: &LinkTerms = p.link("secondary outage")?;
        let varphi1 = 1.0 / l.omega2;
        let varphi2 = l.omega1 / l.omega2;
        let s2 = l.sigma2_clt;
        let xi1_sq = match p.convention {
            Convention::Corrected => s2 * varphi2 * varphi2 + l.delta,
            Convention::PaperLiteral => s2 * varphi2 + l.delta,
        };
        Ok(Self {
            varphi1,
            varphi2,
            xi1: checked_sqrt(xi1_sq, "xi1")?,
            xi2: checked_sqrt(2.0 * s2 * l.delta, "xi2")?,
            xi3: s2 * varphi1 * varphi2,
            xi4: l.delta * varphi1 / varphi2,
            xi5: l.delta * l.epsilon_clt,
            epsilon: l.epsilon_clt,
            sigma2: s2,
            delta: l.delta,
            lambda_p: p.lambda_p_param,
        })
    }

    /// Square-root argument at which every `erf` in the CDF changes sign.
    pub fn sign_change(&self) -> f64 {
        self.epsilon * self.varphi2 / self.varphi1
    }

    /// Upper bound on `|F_exact − F_approx|` implied by the worst-case `erf`
    /// approximation error: one half-weighted and two envelope-weighted terms.
    pub fn erf_error_budget(&self) -> f64 {
        ERF_APPROX_MAX_ERROR * (0.5 + self.delta.sqrt() / self.xi1)
    }

    fn cdf_with(&self, y: f64, erf: &dyn Fn(f64) -> f64) -> f64 {
        let sy = y.sqrt();
        let s = (2.0 * self.sigma2).sqrt();
        let b2 = self.epsilon / s;
        let gauss = 0.5 * (erf((self.varphi1 / self.varphi2) * sy / s - b2) + erf_exact(b2));
        let k = self.xi1 * self.xi2;
        let env = (self.delta.sqrt() / (2.0 * self.xi1))
            * (-(self.varphi1 * sy - self.varphi2 * self.epsilon).powi(2)
                / (2.0 * self.xi1 * self.xi1))
                .exp();
        let w2 = (self.xi4 * sy - self.xi5) / k;
        let w3 = (self.xi3 * sy + self.xi5) / k;
        gauss - env * (erf(w2) + erf(w3))
    }
}

/// CDF of the destination gain `Ψ_D = (Ω₁χ₁ + Ω₂χ₂)²` with `χ₁` Gaussian
/// and `χ₂` Rayleigh.
pub fn cdf_psi_d(gamma: f64, p: &DerivedParams) -> Result<f64, AnalyticsError> {
    if !(gamma >= 0.0) {
        return Err(AnalyticsError::Domain {
            what: "gamma",
            value: gamma,
        });
    }
    let c = OutageCoeffs::new(p)?;
    if gamma.is_infinite() {
        return Ok(1.0);
    }
    Ok(c.cdf_with(gamma, &erf_exact).clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErfKind {
    Exact,
    Approx(ErfApproxCoeffs),
}

/// `∫ F_{Ψ_D}(γ_th x) f_{Ψ_P}(x) dx` by adaptive quadrature, with `F` built
/// from either the exact or the approximate error function.
pub fn sn_outage_quadrature(p: &DerivedParams, erf: ErfKind) -> Result<f64, AnalyticsError> {
    let c = OutageCoeffs::new(p)?;
    let gamma = p.link("secondary outage")?.gamma_th();
    if gamma == 0.0 {
        return Ok(0.0);
    }
    let lam = c.lambda_p;
    let erf_fn: Box<dyn Fn(f64) -> f64> = match erf {
        ErfKind::Exact => Box::new(erf_exact),
        ErfKind::Approx(coeffs) => Box::new(move |x| erf_approx(x, &coeffs)),
    };
    let x0 = c.sign_change().powi(2) / gamma;
    let mut points = vec![0.0, x0.min(lam), x0.max(lam)];
    points.dedup();
    let opts = QuadOptions {
        abs_tol: 1e-11,
        rel_tol: 1e-10,
        ..QuadOptions::default()
    };
    let r = integrate_to_infinity(
        |x| c.cdf_with(gamma * x, &*erf_fn) * (-x / lam).exp() / lam,
        &points,
        lam,
        &opts,
    )?;
    Ok(r.value)
}

/// `erf(b) − erf(a)` without cancellation in either tail.
fn erf_diff(a: f64, b: f64) -> f64 {
    if a >= 0.0 && b >= 0.0 {
        erfc(a) - erfc(b)
    } else if a <= 0.0 && b <= 0.0 {
        erfc(-b) - erfc(-a)
    } else {
        erf_exact(b) - erf_exact(a)
    }
}

/// `∫_a^b (2t/λ) exp(−P t² + 2 q t − r) dt` for `P > 0` and `r ≥ q²/P`.
fn gaussian_moment(pp: f64, q: f64, r: f64, lam: f64, a: f64, b: f64) -> f64 {
    let m = q / pp;
    let edge = |t: f64| {
        if t.is_infinite() {
            0.0
        } else {
            (-pp * t * t + 2.0 * q * t - r).exp()
        }
    };
    let sp = pp.sqrt();
    let shift = (q * q / pp - r).min(0.0);
    let hi = if b.is_infinite() {
        f64::INFINITY
    } else {
        sp * (b - m)
    };
    let tail = m * (PI / pp).sqrt() * shift.exp() * erf_diff(sp * (a - m), hi);
    ((edge(a) - edge(b)) / pp + tail) / lam
}

/// The three additive pieces of the closed-form outage, `P = A₁ − A₂ − A₃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageTerms {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl OutageTerms {
    pub fn total(&self) -> f64 {
        self.a1 - self.a2 - self.a3
    }
}

fn outage_terms(c: &OutageCoeffs, gamma: f64, coeffs: &ErfApproxCoeffs) -> OutageTerms {
    let lam = c.lambda_p;
    let sg = gamma.sqrt();
    let s = (2.0 * c.sigma2).sqrt();
    let b1 = (c.varphi1 / c.varphi2) * sg / s;
    let b2 = c.epsilon / s;
    let t0 = b2 / b1;
    let inf = f64::INFINITY;

    let mut a1 = (-t0 * t0 / lam).exp() + 0.5 * (erf_exact(b2) - 1.0);
    for (th, up) in coeffs.pairs() {
        let (pp, q, r) = (th * b1 * b1 + 1.0 / lam, th * b1 * b2, th * b2 * b2);
        a1 += 0.5
            * up
            * (gaussian_moment(pp, q, r, lam, 0.0, t0) - gaussian_moment(pp, q, r, lam, t0, inf));
    }

    let amp = c.delta.sqrt() / (2.0 * c.xi1);
    let two_xi1_sq = 2.0 * c.xi1 * c.xi1;
    let pg = c.varphi1 * c.varphi1 * gamma / two_xi1_sq + 1.0 / lam;
    let qg = c.varphi1 * sg * c.varphi2 * c.epsilon / two_xi1_sq;
    let rg = (c.varphi2 * c.epsilon).powi(2) / two_xi1_sq;
    let k = c.xi1 * c.xi2;

    let t1 = c.xi5 / (c.xi4 * sg);
    let mut a2 = amp
        * (gaussian_moment(pg, qg, rg, lam, t1, inf) - gaussian_moment(pg, qg, rg, lam, 0.0, t1));
    let (al, be) = (c.xi4 * sg / k, c.xi5 / k);
    for (th, up) in coeffs.pairs() {
        let (pp, q, r) = (pg + th * al * al, qg + th * al * be, rg + th * be * be);
        a2 += amp
            * up
            * (gaussian_moment(pp, q, r, lam, 0.0, t1) - gaussian_moment(pp, q, r, lam, t1, inf));
    }

    let mut a3 = amp * gaussian_moment(pg, qg, rg, lam, 0.0, inf);
    let (al, be) = (c.xi3 * sg / k, -c.xi5 / k);
    for (th, up) in coeffs.pairs() {
        let (pp, q, r) = (pg + th * al * al, qg + th * al * be, rg + th * be * be);
        a3 -= amp * up * gaussian_moment(pp, q, r, lam, 0.0, inf);
    }
    OutageTerms { a1, a2, a3 }
}

/// Secondary-network outage probability in closed form.
///
/// Built on the exponential-sum `erf` approximation, so it tracks
/// [`sn_outage_quadrature`] with [`ErfKind::Approx`] to within rounding.
pub fn sn_outage_closed(p: &DerivedParams) -> Result<(Probability, OutageTerms), AnalyticsError> {
    let c = OutageCoeffs::new(p)?;
    let gamma = p.link("secondary outage")?.gamma_th();
    if gamma == 0.0 {
        let zero = OutageTerms {
            a1: 0.0,
            a2: 0.0,
            a3: 0.0,
        };
        return Ok((Probability::clamped(0.0), zero));
    }
    let terms = outage_terms(&c, gamma, &ErfApproxCoeffs::default());
    let raw = terms.total();
    if !raw.is_finite() {
        return Err(AnalyticsError::Domain {
            what: "secondary outage",
            value: raw,
        });
    }
    Ok((Probability::clamped(raw), terms))
}
