//! Winding-number analytics: the vortex propagator `G_α(x)`, the finite
//! regularized areas `Z_α(m)`, mean winding-sector areas and their large-`m`
//! behaviour.
//!
//! Every area scales linearly with the path duration `t`; quantities are
//! computed at `t = 1` and rescaled.

mod areas;
mod asymptotics;
mod propagator;

pub use areas::{mean_sector_area, mean_total_minus_zero, sector_spectrum, z_alpha};
pub use asymptotics::{asymptotic_leading, asymptotic_subleading, EULER_GAMMA};
pub use propagator::{g_alpha, g_alpha_deriv, g_alpha_tail, heaviside_limit_check};

use crate::error::{domain, Result};
use std::collections::BTreeMap;

/// Winding phase parameter, `0 ≤ α ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaValue(f64);

impl AlphaValue {
    pub fn new(alpha: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(Self(alpha))
        } else {
            Err(domain("AlphaValue", format!("alpha = {alpha} outside [0, 1]")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `1 − α`; every quantity here is invariant under it.
    pub fn reflect(self) -> Self {
        Self(1.0 - self.0)
    }

    /// The representative in `[0, ½]`.
    pub fn folded(self) -> f64 {
        self.0.min(1.0 - self.0)
    }
}

/// Tolerances for the semi-infinite `x` integrals and the `α` integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Target for the neglected `x > x_max` tail of `1 − G^m`.
    pub x_cutoff_eps: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, x_cutoff_eps: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0 && rel_tol > 0.0 && x_cutoff_eps > 0.0) {
            return Err(domain("QuadratureSpec", "tolerances must be > 0"));
        }
        if max_subdivisions == 0 {
            return Err(domain("QuadratureSpec", "max_subdivisions must be >= 1"));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            x_cutoff_eps,
            max_subdivisions,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            x_cutoff_eps: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

/// Mean areas of the winding sectors of `m` superposed paths.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorSpectrum {
    pub m: u32,
    pub t: f64,
    /// `n ↦ ⟨S_n(m)⟩` for `0 < |n| ≤ n_max`.
    pub coefficients: BTreeMap<i64, f64>,
    /// `⟨S(m) − S₀(m)⟩`, the sum over all `n ≠ 0`.
    pub total_minus_zero: f64,
}

impl SectorSpectrum {
    pub fn get(&self, n: i64) -> Option<f64> {
        self.coefficients.get(&n).copied()
    }

    /// Sum of the tabulated coefficients.
    pub fn partial_sum(&self) -> f64 {
        self.coefficients.values().sum()
    }
}
