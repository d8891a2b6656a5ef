//! Algebraic and arithmetic areas enclosed by `m` independent closed planar
//! Brownian paths.
//!
//! - [`specfun`]: scaled Bessel `I_ν`, Tricomi `U`, and the algebraic-area
//!   densities `P_m(A)`.
//! - [`winding`]: the vortex propagator `G_α(x)`, the regularized areas
//!   `Z_α(m)`, mean winding-sector areas and their large-`m` asymptotics.
//! - [`sim`]: exact sampling of closed lattice walks, winding fields, sector
//!   tallies, convex hulls and parallel reproducible experiments.
//! - [`validation`]: the numerical checks run by `winding-atlas validate`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod quad;
pub mod sim;
pub mod specfun;
pub mod stats;
pub mod validation;
pub mod winding;

pub use error::{Error, Result};
pub use sim::{
    ClosedWalk, ExperimentConfig, ExperimentResult, SectorTally, Step, WindingField,
};
pub use specfun::{AreaDensityParams, SeriesTolerance};
pub use stats::McEstimate;
pub use winding::{AlphaValue, QuadratureSpec, SectorSpectrum};
