use crate::config::load;
use crate::error::CliError;
use crate::manifest::{self, RunManifest};
use clap::Args;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use winding_atlas::validation::{full_suite, quick_suite, CriterionReport, McScale};

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// JSON file with any of the fields below.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Analytic checks only (A1–A4).
    #[arg(long, conflicts_with = "full")]
    quick: bool,
    /// All checks, including Monte Carlo (A1–A8).
    #[arg(long)]
    full: bool,
    /// Samples for the one-path sector means.
    #[arg(long)]
    samples: Option<usize>,
    /// Samples for the one-path area law.
    #[arg(long)]
    area_samples: Option<usize>,
    /// Samples per m for the many-path comparison.
    #[arg(long)]
    multi_samples: Option<usize>,
    /// Steps per walk.
    #[arg(long)]
    steps: Option<usize>,
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Directory for report.json and manifest.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ValidateConfig {
    pub full: bool,
    pub samples: usize,
    pub area_samples: usize,
    pub multi_samples: usize,
    pub steps: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for ValidateConfig {
    fn default() -> Self {
        let s = McScale::default();
        Self {
            full: false,
            samples: s.samples_moments,
            area_samples: s.samples_area_law,
            multi_samples: s.samples_multi,
            steps: s.n_steps,
            seed: s.seed,
            out: None,
        }
    }
}

impl ValidateConfig {
    fn resolve(args: ValidateArgs) -> Result<Self, CliError> {
        let mut c: Self = load(args.config.as_deref())?;
        if args.full {
            c.full = true;
        }
        if args.quick {
            c.full = false;
        }
        if let Some(v) = args.samples {
            c.samples = v;
        }
        if let Some(v) = args.area_samples {
            c.area_samples = v;
        }
        if let Some(v) = args.multi_samples {
            c.multi_samples = v;
        }
        if let Some(v) = args.steps {
            c.steps = v;
        }
        if let Some(v) = args.seed {
            c.seed = v;
        }
        if args.out.is_some() {
            c.out = args.out;
        }
        if c.full && (c.steps == 0 || !c.steps.is_multiple_of(2)) {
            return Err(CliError::Usage(format!("--steps {} must be even and positive", c.steps)));
        }
        if c.full && (c.samples < 2 || c.area_samples < 2 || c.multi_samples < 2) {
            return Err(CliError::Usage("sample counts must be >= 2".into()));
        }
        Ok(c)
    }

    fn scale(&self) -> McScale {
        McScale {
            n_steps: self.steps,
            samples_moments: self.samples,
            samples_area_law: self.area_samples,
            samples_multi: self.multi_samples,
            seed: self.seed,
            ..McScale::default()
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    passed: bool,
    criteria: &'a [CriterionReport],
}

pub fn run(args: ValidateArgs) -> Result<(), CliError> {
    let cfg = ValidateConfig::resolve(args)?;
    let started = manifest::now();
    let reports = if cfg.full { full_suite(&cfg.scale()) } else { quick_suite() };
    for r in &reports {
        println!("{}", r.summary_line());
        for c in &r.checks {
            println!(
                "    {:<28} observed {:<12.6e} expected {:<12.6e} tol {:<10.3e} {}",
                c.name,
                c.observed,
                c.expected,
                c.tolerance,
                if c.passed { "ok" } else { "FAIL" }
            );
        }
    }
    let passed = reports.iter().all(CriterionReport::passed);
    let report = Report { passed, criteria: &reports };
    match &cfg.out {
        Some(dir) => {
            manifest::ensure_dir(dir)?;
            std::fs::write(dir.join("report.json"), serde_json::to_string_pretty(&report)? + "\n")?;
            manifest::write(
                dir,
                &RunManifest {
                    command: "validate",
                    master_seed: Some(cfg.seed),
                    config: &cfg,
                    tool_version: manifest::TOOL_VERSION,
                    started,
                    finished: manifest::now(),
                    partial: false,
                    outputs: vec!["report.json".into()],
                },
            )?;
        }
        None => println!("{}", serde_json::to_string(&report)?),
    }
    if passed {
        Ok(())
    } else {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
        Err(CliError::Validation(format!("failed criteria: {}", failed.join(", "))))
    }
}
