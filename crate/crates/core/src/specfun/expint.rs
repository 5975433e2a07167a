#![allow(clippy::excessive_precision)]

use super::SpecFunError;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 500;

fn check(x: f64) -> Result<(), SpecFunError> {
    if x == 0.0 {
        return Err(SpecFunError::Pole {
            function: "upper_gamma_zero",
        });
    }
    if !(x > 0.0) {
        return Err(SpecFunError::Domain {
            function: "upper_gamma_zero",
            x,
        });
    }
    Ok(())
}

/// Upper incomplete gamma function with zero order, `Γ(0, x) = E₁(x)`.
///
/// Power series below 1, modified-Lentz continued fraction above.
pub fn upper_gamma_zero(x: f64) -> Result<f64, SpecFunError> {
    check(x)?;
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x < 1.0 {
        Ok(series(x))
    } else {
        Ok(continued_fraction_scaled(x) * (-x).exp())
    }
}

/// `eˣ Γ(0, x)`, finite for every `x > 0`.
///
/// The closed-form SOP needs the product `e^{H₃} Γ(0, H₃)` for arguments where
/// the two factors separately overflow and underflow.
pub fn upper_gamma_zero_scaled(x: f64) -> Result<f64, SpecFunError> {
    check(x)?;
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x < 1.0 {
        Ok(series(x) * x.exp())
    } else {
        Ok(continued_fraction_scaled(x))
    }
}

// E₁(x) = −γ − ln x − Σ_{k≥1} (−x)^k / (k·k!)
fn series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= -x / kf;
        let contrib = term / kf;
        sum += contrib;
        if contrib.abs() < sum.abs() * f64::EPSILON * 0.5 {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

// eˣE₁(x) = 1/(x+1− 1/(x+3− 4/(x+5− ...))), evaluated with modified Lentz.
fn continued_fraction_scaled(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reference_values() {
        // mpmath.e1 at 30 digits
        let cases = [
            (1e-6, 13.23829589306249),
            (0.1, 1.822923958419390616),
            (0.5, 0.5597735947761608118),
            (0.999, 0.2197521820229445411),
            (1.0, 0.2193839343955202737),
            (2.5, 0.02491491787026973549),
            (10.0, 4.156968929685324277e-6),
            (40.0, 1.036773261451657e-19),
        ];
        for (x, want) in cases {
            assert_relative_eq!(upper_gamma_zero(x).unwrap(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn scaled_matches_unscaled() {
        for &x in &[0.01, 0.7, 1.0, 3.0, 25.0] {
            let direct = upper_gamma_zero(x).unwrap() * x.exp();
            assert_relative_eq!(
                upper_gamma_zero_scaled(x).unwrap(),
                direct,
                max_relative = 1e-13
            );
        }
        // e^x E1(x) ~ 1/x for large x
        let big = 1e8;
        assert_relative_eq!(
            upper_gamma_zero_scaled(big).unwrap(),
            1.0 / big,
            max_relative = 1e-7
        );
    }

    proptest::proptest! {
        #[test]
        fn positive_and_decreasing(x in 1e-6f64..50.0, step in 1e-6f64..1.0) {
            let lo = upper_gamma_zero(x).unwrap();
            let hi = upper_gamma_zero(x + step * x).unwrap();
            proptest::prop_assert!(hi > 0.0 && hi < lo);
        }
    }

    #[test]
    fn pole_and_domain_errors_differ() {
        assert!(matches!(
            upper_gamma_zero(0.0),
            Err(SpecFunError::Pole { .. })
        ));
        assert!(matches!(
            upper_gamma_zero(-1.0),
            Err(SpecFunError::Domain { .. })
        ));
        assert!(matches!(
            upper_gamma_zero(f64::NAN),
            Err(SpecFunError::Domain { .. })
        ));
        assert_eq!(upper_gamma_zero(f64::INFINITY).unwrap(), 0.0);
    }
}
