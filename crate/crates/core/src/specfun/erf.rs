#![allow(clippy::excessive_precision)]

/// Exponential-sum approximation of `erf` for `x ≥ 0`:
/// `erf(x) ≈ 1 − Σ_m υ_m exp(−θ_m x²)`, extended to `x < 0` by odd symmetry.
///
/// The sum of the weights is 7/8, so the approximation is 1/8 at `0⁺` rather
/// than 0. The closed-form outage expression is built on this form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErfApproxCoeffs {
    pub theta: [f64; 4],
    pub upsilon: [f64; 4],
}

impl Default for ErfApproxCoeffs {
    fn default() -> Self {
        Self {
            theta: [1.0, 2.0, 20.0 / 3.0, 20.0 / 17.0],
            upsilon: [1.0 / 8.0, 1.0 / 4.0, 1.0 / 4.0, 1.0 / 4.0],
        }
    }
}

impl ErfApproxCoeffs {
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.theta.iter().copied().zip(self.upsilon.iter().copied())
    }
}

/// Worst `|erf_approx − erf|` with the default coefficients, attained at `0⁺`.
pub const ERF_APPROX_MAX_ERROR: f64 = 0.125;

/// Error function.
pub fn erf_exact(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function `1 − erf(x)`, accurate in the far tail.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Piecewise approximation. `x = 0` takes the non-negative branch.
pub fn erf_approx(x: f64, coeffs: &ErfApproxCoeffs) -> f64 {
    let x2 = x * x;
    let tail: f64 = coeffs.pairs().map(|(t, u)| u * (-t * x2).exp()).sum();
    if x >= 0.0 {
        1.0 - tail
    } else {
        tail - 1.0
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn default_coefficients() {
        let c = ErfApproxCoeffs::default();
        assert_eq!(c.theta, [1.0, 2.0, 20.0 / 3.0, 20.0 / 17.0]);
        assert_eq!(c.upsilon.iter().sum::<f64>(), 7.0 / 8.0);
    }

    #[test]
    fn exact_reference_values() {
        assert_eq!(erf_exact(0.0), 0.0);
        assert_eq!(erf_exact(f64::INFINITY), 1.0);
        assert_eq!(erf_exact(f64::NEG_INFINITY), -1.0);
        // mpmath.erf
        assert_relative_eq!(erf_exact(1.0), 0.8427007929497148693, max_relative = 1e-15);
        assert_relative_eq!(erf_exact(0.1), 0.1124629160182848922, max_relative = 1e-15);
        assert_relative_eq!(
            erf_exact(-2.5),
            -0.9995930479825550411,
            max_relative = 1e-15
        );
        assert_relative_eq!(erfc(5.0), 1.5374597944280348502e-12, max_relative = 1e-13);
    }

    #[test]
    fn approx_reference_points() {
        let c = ErfApproxCoeffs::default();
        assert_eq!(erf_approx(0.0, &c), 0.125);
        assert!((erf_approx(5.0, &c) - erf_exact(5.0)).abs() < 1e-6);
        assert_eq!(erf_approx(-5.0, &c), -erf_approx(5.0, &c));
    }

    #[test]
    fn approx_error_budget_does_not_regress() {
        let c = ErfApproxCoeffs::default();
        let worst = (0..=60_000)
            .map(|i| i as f64 * 1e-4)
            .map(|x| (erf_approx(x, &c) - erf_exact(x)).abs())
            .fold(0.0, f64::max);
        assert!(worst <= ERF_APPROX_MAX_ERROR + 1e-15, "worst = {worst}");
    }

    proptest! {
        #[test]
        fn exact_plus_complement_is_one(x in -6.0f64..6.0) {
            prop_assert!((erf_exact(x) + erfc(x) - 1.0).abs() <= 1e-15);
        }

        #[test]
        fn approx_is_odd(x in 1e-9f64..20.0) {
            let c = ErfApproxCoeffs::default();
            prop_assert_eq!(erf_approx(-x, &c), -erf_approx(x, &c));
        }
    }
}
