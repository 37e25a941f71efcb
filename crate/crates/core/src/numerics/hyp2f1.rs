//! Gauss hypergeometric function ₂F₁(a, b; c; z) for z ≤ 0.
//!
//! The interference Laplace transform evaluates the family
//! ₂F₁(−δ, ½; 1−δ; −ρ G_m R^{−α}), whose argument can be very large in
//! magnitude at high SINR thresholds. Direct series summation is used only
//! on (−0.5, 0]; everything further out goes through the Pfaff
//! transformation ₂F₁(a, b; c; z) = (1−z)^{−b} ₂F₁(c−a, b; c; z/(z−1)),
//! whose transformed argument lies in (0, 1) for every z < 0 so the series
//! always converges (and, for the target family, with all-positive terms).

use super::NumericsError;

/// Series termination: stop once a term's relative magnitude drops below this.
const SERIES_EPS: f64 = 1e-15;
/// Iteration cap; the Pfaff-transformed series needs roughly 35·(1+|z|)
/// terms, so this covers |z| up to several times 10⁴.
const MAX_TERMS: usize = 2_000_000;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Plain power series Σ (a)ₖ(b)ₖ/(c)ₖ · zᵏ/k!, valid for |z| < 1.
fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64, NumericsError> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.abs() < SERIES_EPS * sum.abs() {
            return Ok(sum);
        }
    }
    Err(NumericsError::HypergeometricNoConvergence {
        a,
        b,
        c,
        z,
        terms: MAX_TERMS,
    })
}

/// ₂F₁(a, b; c; z) for z ≤ 0.
///
/// `c` must not be a non-positive integer. Positive arguments are outside
/// this implementation's domain and rejected.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64, NumericsError> {
    if is_nonpositive_integer(c) {
        return Err(NumericsError::Domain(format!(
            "2F1 undefined for c a non-positive integer, got c={c}"
        )));
    }
    if !z.is_finite() || z > 0.0 {
        return Err(NumericsError::Domain(format!(
            "2F1 implemented for z <= 0 only, got z={z}"
        )));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z > -0.5 {
        series(a, b, c, z)
    } else {
        let w = z / (z - 1.0); // in (1/3, 1) for z < -0.5
        let err_with_original_args = |e| match e {
            NumericsError::HypergeometricNoConvergence { terms, .. } => {
                NumericsError::HypergeometricNoConvergence { a, b, c, z, terms }
            }
            other => other,
        };
        Ok((1.0 - z).powf(-b) * series(c - a, b, c, w).map_err(err_with_original_args)?)
    }
}
