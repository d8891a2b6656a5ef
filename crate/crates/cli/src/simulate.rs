use crate::config::load;
use crate::error::CliError;
use crate::manifest::{self, RunManifest};
use clap::Args;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use winding_atlas::sim::{observable, run_experiment, ExperimentConfig, DEFAULT_MEMORY_CAP};

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// JSON file with any of the fields below.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Numbers of superposed walks, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    m: Option<Vec<u32>>,
    /// Steps per walk (even).
    #[arg(long)]
    steps: Option<usize>,
    /// Independent samples per m.
    #[arg(long)]
    samples: Option<usize>,
    /// Master seed of all random streams.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest |n| reported in sectors.csv.
    #[arg(long)]
    nmax: Option<u32>,
    /// Memory budget of one winding grid, in MiB.
    #[arg(long)]
    memory_cap_mib: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulateConfig {
    pub m: Vec<u32>,
    pub steps: usize,
    pub samples: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub nmax: u32,
    pub memory_cap_mib: u64,
}

impl Default for SimulateConfig {
    fn default() -> Self {
        Self {
            m: vec![1],
            steps: 10_000,
            samples: 1000,
            seed: 1,
            out: PathBuf::from("out"),
            nmax: 8,
            memory_cap_mib: DEFAULT_MEMORY_CAP >> 20,
        }
    }
}

impl SimulateConfig {
    fn resolve(args: SimulateArgs) -> Result<Self, CliError> {
        let mut c: Self = load(args.config.as_deref())?;
        if let Some(v) = args.m {
            c.m = v;
        }
        if let Some(v) = args.steps {
            c.steps = v;
        }
        if let Some(v) = args.samples {
            c.samples = v;
        }
        if let Some(v) = args.seed {
            c.seed = v;
        }
        if let Some(v) = args.out {
            c.out = v;
        }
        if let Some(v) = args.nmax {
            c.nmax = v;
        }
        if let Some(v) = args.memory_cap_mib {
            c.memory_cap_mib = v;
        }
        if c.m.is_empty() || c.m.contains(&0) {
            return Err(CliError::Usage("m values must be >= 1".into()));
        }
        Ok(c)
    }

    fn experiment(&self, m: u32) -> Result<ExperimentConfig, CliError> {
        let mut e = ExperimentConfig::new(m, self.steps, self.samples, self.seed)
            .map_err(|e| CliError::core("simulate", e))?;
        e.n_max = self.nmax;
        e.memory_cap_bytes = self.memory_cap_mib << 20;
        Ok(e)
    }
}

pub const ESTIMATES_HEADER: [&str; 7] = ["m", "n_steps", "t_eff", "observable", "mean", "stderr", "n_samples"];
pub const SECTORS_HEADER: [&str; 4] = ["m", "n", "mean_area_over_t", "stderr"];

pub fn run(args: SimulateArgs) -> Result<(), CliError> {
    let cfg = SimulateConfig::resolve(args)?;
    // validate every m up front so bad flags fail before any work
    for &m in &cfg.m {
        cfg.experiment(m)?;
    }
    manifest::ensure_dir(&cfg.out)?;
    let started = manifest::now();
    let mut estimates = csv::Writer::from_path(cfg.out.join("estimates.csv"))?;
    let mut sectors = csv::Writer::from_path(cfg.out.join("sectors.csv"))?;
    estimates.write_record(ESTIMATES_HEADER)?;
    sectors.write_record(SECTORS_HEADER)?;

    let mut failure = None;
    for &m in &cfg.m {
        let exp = cfg.experiment(m)?;
        let result = match run_experiment(&exp) {
            Ok(r) => r,
            Err(e) => {
                failure = Some(CliError::core(format!("m={m}"), e));
                break;
            }
        };
        for (i, f) in &result.failures {
            eprintln!("warning: m={m} sample {i} skipped: {f}");
        }
        for name in observable::ALL {
            let e = result.estimates[name];
            estimates.write_record([
                m.to_string(),
                exp.n_steps.to_string(),
                exp.t_eff().to_string(),
                name.to_string(),
                e.mean.to_string(),
                e.stderr.to_string(),
                e.n_samples.to_string(),
            ])?;
        }
        for (n, e) in &result.sectors {
            sectors.write_record([m.to_string(), n.to_string(), e.mean.to_string(), e.stderr.to_string()])?;
        }
        estimates.flush()?;
        sectors.flush()?;
    }

    let partial = failure.is_some();
    manifest::write(
        &cfg.out,
        &RunManifest {
            command: "simulate",
            master_seed: Some(cfg.seed),
            config: &cfg,
            tool_version: manifest::TOOL_VERSION,
            started,
            finished: manifest::now(),
            partial,
            outputs: vec!["estimates.csv".into(), "sectors.csv".into()],
        },
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

