//! Closed-form secrecy and outage expressions with their quadrature oracles.

mod grid;
mod primary;
mod secondary;

pub use grid::{oracle_grid, GridPoint, ORACLE_GRID_FIXTURE};
pub use primary::{
    cdf_gamma_p, pdf_gamma_e, pnsc_closed, pnsc_quadrature, sop_asymptotic, sop_closed,
    sop_quadrature, sop_quadrature_with, AsymptoticSop, EavDensity, SopCoeffs,
};
pub use secondary::{
    cdf_psi_d, sn_outage_closed, sn_outage_quadrature, ErfKind, OutageCoeffs, OutageTerms,
};

use crate::quadrature::QuadError;
use crate::specfun::SpecFunError;
use crate::system_model::ModelError;
use std::fmt;
use thiserror::Error;

/// Largest antenna count accepted at either the primary transmitter or the
/// eavesdropper.
pub const MAX_ANTENNAS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CombiningScheme {
    Sc,
    Mrc,
}

impl CombiningScheme {
    pub const ALL: [CombiningScheme; 2] = [CombiningScheme::Sc, CombiningScheme::Mrc];

    pub fn label(self) -> &'static str {
        match self {
            CombiningScheme::Sc => "SC",
            CombiningScheme::Mrc => "MRC",
        }
    }
}

impl fmt::Display for CombiningScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticsError {
    #[error("{what} = {value} is outside the domain")]
    Domain { what: &'static str, value: f64 },
    #[error("intermediate overflow in term (n = {n}, k = {k})")]
    Overflow { n: usize, k: usize },
    #[error("negative argument under square root in {coefficient}")]
    NegativeSqrt { coefficient: &'static str },
    #[error("antenna counts N_P = {n_pt}, N_E = {n_eav} exceed the supported maximum {max}")]
    UnsupportedOrder {
        n_pt: usize,
        n_eav: usize,
        max: usize,
    },
    #[error("literal form is not evaluable: {0}")]
    LiteralForm(&'static str),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A closed-form probability after clamping to `[0, 1]`, with the value
/// before clamping kept for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probability {
    pub value: f64,
    pub raw: f64,
}

impl Probability {
    pub(crate) fn clamped(raw: f64) -> Self {
        Self {
            value: raw.clamp(0.0, 1.0),
            raw,
        }
    }
}

/// Accumulates `Σ sᵢ exp(ℓᵢ)` from `(sign, log-magnitude)` pairs.
///
/// Terms are rescaled by the largest magnitude before summing, so individual
/// terms may lie far outside the `f64` exponent range.
#[derive(Debug, Default, Clone)]
pub(crate) struct SignedLogSum {
    terms: Vec<(f64, f64)>,
}

impl SignedLogSum {
    pub(crate) fn push(&mut self, sign: f64, ln_mag: f64) {
        if sign != 0.0 && ln_mag > f64::NEG_INFINITY {
            self.terms.push((sign.signum(), ln_mag));
        }
    }

    pub(crate) fn max_ln(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.1)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub(crate) fn value(&self) -> f64 {
        let top = self.max_ln();
        if top == f64::NEG_INFINITY {
            return 0.0;
        }
        // Neumaier summation of the rescaled terms.
        let mut sum = 0.0;
        let mut comp = 0.0;
        for &(s, l) in &self.terms {
            let x = s * (l - top).exp();
            let t = sum + x;
            if sum.abs() >= x.abs() {
                comp += (sum - t) + x;
            } else {
                comp += (x - t) + sum;
            }
            sum = t;
        }
        (sum + comp) * top.exp()
    }
}

pub(crate) fn ln_binomial(n: usize, k: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

pub(crate) fn ln_factorial(n: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

pub(crate) fn alternating(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
