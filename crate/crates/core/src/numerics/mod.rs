//! Special functions and adaptive quadrature used by the analytic engine.
//!
//! Everything here is pure and deterministic: the gamma function (including
//! negative non-integer arguments), the upper incomplete gamma function, the
//! error function, the Gauss hypergeometric function ₂F₁ restricted to
//! non-positive arguments, and an adaptive Gauss-Kronrod integrator that
//! tolerates inverse-square-root endpoint singularities.

use thiserror::Error;

mod erf_fn;
mod gamma_fn;
mod hyp2f1;
mod quad;

pub use erf_fn::erf;
pub use gamma_fn::{gamma, upper_incomplete_gamma};
pub use hyp2f1::gauss_2f1;
pub use quad::{integrate, integrate_tol};

/// Errors from special-function evaluation and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    /// Input outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Result too large for f64; never silently saturated to infinity.
    #[error("overflow evaluating {0}")]
    Overflow(&'static str),
    /// The hypergeometric series hit its iteration cap.
    #[error("2F1({a}, {b}; {c}; {z}) did not converge within {terms} terms")]
    HypergeometricNoConvergence {
        a: f64,
        b: f64,
        c: f64,
        z: f64,
        terms: usize,
    },
    /// Adaptive subdivision exhausted; carries the best estimate so far.
    #[error("quadrature did not converge: best {best:e} (abs error {abs_error:e}, {evaluations} evaluations)")]
    QuadratureNoConvergence {
        best: f64,
        abs_error: f64,
        evaluations: u64,
    },
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Estimate of the integral.
    pub value: f64,
    /// Estimated absolute error of `value`; always non-negative.
    pub abs_error_estimate: f64,
    /// Number of integrand evaluations performed (at least one panel's worth).
    pub evaluations: u64,
}
