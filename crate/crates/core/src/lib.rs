//! SINR coverage of directional millimeter-wave device-to-device networks
//! under beam alignment error.
//!
//! Two engines compute the same quantity and are meant to be cross-checked:
//!
//! * [`analytic`] — closed-form stochastic-geometry expressions built from
//!   the interference Laplace transform over a Poisson field of LOS
//!   interferers inside a fixed-radius ball;
//! * [`montecarlo`] — trial-by-trial simulation of the same network model
//!   (Poisson transmitters, rectangular blockages, Rayleigh fading, cosine
//!   antenna pattern with misaligned bore-sight), with reproducible
//!   counter-based random substreams.
//!
//! Supporting modules: [`numerics`] (special functions and quadrature),
//! [`antenna`] (cosine pattern and misaligned-gain distributions),
//! [`geometry`] (spatial sampling and LOS blockage tests), [`channel`]
//! (path loss, fading, SINR assembly), [`stats`] (empirical CDFs,
//! Kolmogorov-Smirnov distances, Wilson intervals), and [`units`]
//! (dB/linear conversions, kept at the API boundary).

pub mod numerics;
pub mod units;
