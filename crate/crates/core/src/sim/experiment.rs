use super::field::{winding_field_with_cap, DEFAULT_MEMORY_CAP};
use super::tally::{sector_tally, SectorTally};
use super::walk::{ClosedWalk, ClosedWalkSampler};
use crate::error::{domain, Error, Result};
use crate::stats::McEstimate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Observable names reported by [`run_experiment`].
pub mod observable {
    pub const S: &str = "S_over_t";
    pub const S_MINUS_S0: &str = "S_minus_S0_over_t";
    pub const S0: &str = "S0_over_t";
    pub const HULL: &str = "hull_over_t";
    pub const A: &str = "A_over_t";
    pub const A2: &str = "A2_over_t2";
    pub const A_VAR: &str = "A_var_over_t2";

    pub const ALL: [&str; 7] = [S, S_MINUS_S0, S0, HULL, A, A2, A_VAR];
}

/// One Monte Carlo experiment: `n_samples` independent sets of `m` closed
/// walks of `n_steps` steps each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub m: u32,
    pub n_steps: usize,
    pub n_samples: usize,
    pub master_seed: u64,
    /// Per-sector estimates are reported for `0 < |n| ≤ n_max`.
    pub n_max: u32,
    pub memory_cap_bytes: u64,
}

impl ExperimentConfig {
    pub fn new(m: u32, n_steps: usize, n_samples: usize, master_seed: u64) -> Result<Self> {
        let cfg = Self {
            m,
            n_steps,
            n_samples,
            master_seed,
            n_max: 8,
            memory_cap_bytes: DEFAULT_MEMORY_CAP,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(domain("ExperimentConfig", "m must be >= 1"));
        }
        if self.n_steps == 0 || !self.n_steps.is_multiple_of(2) {
            return Err(domain("ExperimentConfig", "n_steps must be even and positive"));
        }
        if self.n_samples < 2 {
            return Err(domain("ExperimentConfig", "n_samples must be >= 2"));
        }
        Ok(())
    }

    /// Continuum duration matched to the lattice walk: `t = N/2`, so that
    /// `⟨r²⟩ = N` on the lattice equals `2t` in the continuum.
    pub fn t_eff(&self) -> f64 {
        self.n_steps as f64 / 2.0
    }
}

/// Random stream of sample `index`: ChaCha8 keyed by the master seed, with
/// the sample index as stream number.
pub fn sample_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// Draws the `m` walks of sample `index`.
pub fn sample_walks(sampler: &ClosedWalkSampler, m: u32, master_seed: u64, index: u64) -> Vec<ClosedWalk> {
    let mut rng = sample_rng(master_seed, index);
    (0..m).map(|_| sampler.sample(&mut rng)).collect()
}

fn run_sample(cfg: &ExperimentConfig, sampler: &ClosedWalkSampler, index: u64) -> Result<SectorTally> {
    let walks = sample_walks(sampler, cfg.m, cfg.master_seed, index);
    let field = winding_field_with_cap(&walks, cfg.memory_cap_bytes)?;
    sector_tally(&field)
}

/// Outcome of [`run_experiment`].
#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    /// Keyed by the names in [`observable`].
    pub estimates: BTreeMap<&'static str, McEstimate>,
    /// `n ↦ ⟨S_n⟩/t` for `0 < |n| ≤ n_max`.
    pub sectors: BTreeMap<i32, McEstimate>,
    /// Successful samples in index order.
    pub tallies: Vec<(u64, SectorTally)>,
    /// Samples that failed, with the reason.
    pub failures: Vec<(u64, Error)>,
}

impl ExperimentResult {
    pub fn estimate(&self, name: &str) -> Option<McEstimate> {
        self.estimates.get(name).copied()
    }
}

/// Runs every sample (in parallel, each on its own random stream) and
/// reduces them in index order, so the result does not depend on the number
/// of worker threads.
///
/// A sample whose grid exceeds the memory cap aborts the experiment; any
/// other per-sample failure is recorded and the sample skipped.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    let sampler = ClosedWalkSampler::new(cfg.n_steps)?;
    let outcomes: Vec<(u64, Result<SectorTally>)> = (0..cfg.n_samples as u64)
        .into_par_iter()
        .map(|i| (i, run_sample(cfg, &sampler, i)))
        .collect();

    let mut tallies = Vec::with_capacity(outcomes.len());
    let mut failures = Vec::new();
    for (i, r) in outcomes {
        match r {
            Ok(t) => tallies.push((i, t)),
            Err(e @ Error::MemoryBudget { .. }) => return Err(e),
            Err(e) => failures.push((i, e)),
        }
    }
    if tallies.len() < 2 {
        return Err(failures
            .first()
            .map(|(_, e)| e.clone())
            .unwrap_or_else(|| domain("run_experiment", "fewer than two usable samples")));
    }

    let t = cfg.t_eff();
    let column = |f: &dyn Fn(&SectorTally) -> f64| -> Vec<f64> { tallies.iter().map(|(_, s)| f(s)).collect() };
    let a_over_t = column(&|s| s.algebraic_a as f64 / t);
    let mut estimates = BTreeMap::new();
    let mut put = |name: &'static str, v: Vec<f64>| {
        estimates.insert(name, McEstimate::from_samples(&v).expect("nonempty"));
    };
    put(observable::S, column(&|s| s.total_s as f64 / t));
    put(observable::S_MINUS_S0, column(&|s| s.nonzero_area() as f64 / t));
    put(observable::S0, column(&|s| s.s0_inside as f64 / t));
    put(observable::HULL, column(&|s| s.hull_area / t));
    put(observable::A2, a_over_t.iter().map(|a| a * a).collect());
    put(observable::A, a_over_t.clone());
    estimates.insert(observable::A_VAR, McEstimate::variance_of(&a_over_t).expect("nonempty"));

    let mut sectors = BTreeMap::new();
    for n in 1..=cfg.n_max as i32 {
        for k in [-n, n] {
            sectors.insert(
                k,
                McEstimate::from_samples(&column(&|s| s.sector(k) as f64 / t)).expect("nonempty"),
            );
        }
    }

    Ok(ExperimentResult {
        config: *cfg,
        estimates,
        sectors,
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::new(0, 10, 1, 0).is_err());
        assert!(ExperimentConfig::new(1, 11, 1, 0).is_err());
        assert!(ExperimentConfig::new(1, 10, 0, 0).is_err());
        assert!(ExperimentConfig::new(1, 10, 1, 0).is_err());
        let c = ExperimentConfig::new(2, 1000, 5, 9).unwrap();
        assert_eq!(c.t_eff(), 500.0);
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let s = ClosedWalkSampler::new(200).unwrap();
        assert_eq!(sample_walks(&s, 3, 11, 4), sample_walks(&s, 3, 11, 4));
        assert_ne!(sample_walks(&s, 1, 11, 4), sample_walks(&s, 1, 11, 5));
        assert_ne!(sample_walks(&s, 1, 11, 4), sample_walks(&s, 1, 12, 4));
    }

    #[test]
    fn small_experiment_has_all_observables() {
        let cfg = ExperimentConfig::new(2, 400, 20, 1).unwrap();
        let r = run_experiment(&cfg).unwrap();
        for name in observable::ALL {
            let e = r.estimate(name).unwrap();
            assert_eq!(e.n_samples, 20);
        }
        assert_eq!(r.sectors.len(), 16);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn memory_budget_aborts() {
        let mut cfg = ExperimentConfig::new(1, 400, 3, 1).unwrap();
        cfg.memory_cap_bytes = 10;
        assert!(matches!(run_experiment(&cfg), Err(Error::MemoryBudget { .. })));
    }
}
