//! Special functions and the algebraic-area densities.

mod area;
mod bessel;
mod hyperu;

pub use area::{
    levy_cdf, levy_density, p2_rescaled, p3_rescaled, pinf_rescaled, pm_char_fn,
    pm_density_quad, pm_density_series, pm_variance, AreaDensityParams,
};
pub use bessel::bessel_i_scaled;
pub use hyperu::hyper_u;

pub(crate) use bessel::scaled_unchecked as bessel_i_scaled_unchecked;
pub(crate) use hyperu::hyper_u_nonneg;

use crate::error::{domain, Result};

/// Truncation control for the infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTolerance {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesTolerance {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(domain("SeriesTolerance", "rel_tol must be > 0"));
        }
        if max_terms == 0 {
            return Err(domain("SeriesTolerance", "max_terms must be >= 1"));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

impl Default for SeriesTolerance {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 200_000,
        }
    }
}
