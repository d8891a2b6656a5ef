//! Lattice Monte Carlo for closed random walks: exact sampling, winding
//! fields of superposed walks, sector tallies and convex hulls.

mod experiment;
mod field;
mod hull;
mod tally;
mod walk;

pub use experiment::{
    observable, run_experiment, sample_rng, sample_walks, ExperimentConfig, ExperimentResult,
};
pub use field::{winding_field, winding_field_with_cap, CellBox, WindingField, DEFAULT_MEMORY_CAP};
pub use hull::{convex_hull_area, hull_area_of_points};
pub use tally::{sector_tally, SectorTally};
pub use walk::{
    algebraic_area, read_walks, sample_closed_walk, write_walks, ClosedWalk, ClosedWalkSampler, Step,
};
