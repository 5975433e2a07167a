//! Special functions used by the closed-form secrecy and outage expressions.
//!
//! Everything here is pure and re-entrant. Accuracy targets on the tested
//! grids are 1e-12 relative for `Γ(0, x)`, 1e-10 relative for the Whittaker
//! function and 1e-14 absolute for `erf`.

mod erf;
mod expint;
mod whittaker;

pub use erf::{erf_approx, erf_exact, erfc, ErfApproxCoeffs, ERF_APPROX_MAX_ERROR};
pub use expint::{upper_gamma_zero, upper_gamma_zero_scaled};
pub use whittaker::{
    ln_tricomi_u, ln_whittaker_w_scaled, tricomi_u, whittaker_w, WHITTAKER_MAX_INDEX,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("{function}: argument {x} outside the domain")]
    Domain { function: &'static str, x: f64 },
    #[error("{function}: pole at x = 0")]
    Pole { function: &'static str },
    #[error("{function}: unsupported parameters a = {a}, b = {b}")]
    UnsupportedParameters {
        function: &'static str,
        a: f64,
        b: f64,
    },
}
