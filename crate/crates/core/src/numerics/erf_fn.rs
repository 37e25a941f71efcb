//! Error function via the regularized incomplete gamma: erf(x) = P(1/2, x²).

use super::gamma_fn::regularized_gamma_p;

/// erf(x) = (2/√π) ∫₀ˣ e^{−t²} dt.
///
/// Odd, strictly increasing, with range (−1, 1). Accurate to ~1e−15 relative
/// through the series/continued-fraction split of P(1/2, x²).
pub fn erf(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    // |x| ≥ 6 is 1 to within f64 resolution.
    if x.abs() >= 6.0 {
        return 1.0_f64.copysign(x);
    }
    // P(1/2, x²) converges for every finite x; unwrap is safe here.
    let p = regularized_gamma_p(0.5, x * x).expect("incomplete gamma for erf");
    p.copysign(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn erf_zero() {
        assert_eq!(erf(0.0), 0.0);
    }

    #[test]
    fn erf_is_odd() {
        for x in [0.1, 0.5, 1.0, 2.5, 4.0] {
            assert_relative_eq!(erf(x) + erf(-x), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn erf_one_matches_quadrature_oracle() {
        let oracle = integrate(|t: f64| (-t * t).exp(), 0.0, 1.0, 1e-13).unwrap();
        let expected = 2.0 / PI.sqrt() * oracle.value;
        assert_relative_eq!(erf(1.0), expected, max_relative = 1e-12);
        assert_relative_eq!(erf(1.0), 0.8427007929497149, max_relative = 1e-13);
    }

    #[test]
    fn erf_monotone_and_bounded() {
        let mut prev = -1.0;
        let mut x = -5.0;
        while x <= 5.0 {
            let v = erf(x);
            assert!(v > prev);
            assert!(v > -1.0 && v < 1.0);
            prev = v;
            x += 0.25;
        }
    }
}
