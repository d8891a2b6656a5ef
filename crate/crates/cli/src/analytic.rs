use crate::config::load;
use crate::error::CliError;
use crate::manifest::{self, RunManifest};
use crate::svg::{Plot, Series, Style};
use clap::Args;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::E;
use std::path::{Path, PathBuf};
use winding_atlas::specfun::{levy_density, p2_rescaled, p3_rescaled, pinf_rescaled};
use winding_atlas::winding::{asymptotic_leading, asymptotic_subleading, mean_total_minus_zero};
use winding_atlas::QuadratureSpec;

#[derive(Debug, Args)]
pub struct AnalyticArgs {
    /// JSON file with any of the fields below.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Emit fig1.csv: rescaled area densities for m = 1, 2, 3, ∞.
    #[arg(long)]
    fig1: bool,
    /// Emit fig2_curves.csv: mean non-zero-winding area against m.
    #[arg(long)]
    fig2_curves: bool,
    /// Values of m for the fig2 curves, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    m_list: Option<Vec<u32>>,
    /// Absolute and relative quadrature tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render fig1.svg / fig2.svg.
    #[arg(long)]
    svg: bool,
    /// estimates.csv from `simulate`, drawn as markers on fig2.svg.
    #[arg(long)]
    overlay: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalyticConfig {
    pub fig1: bool,
    pub fig2_curves: bool,
    pub m_list: Vec<u32>,
    pub tol: f64,
    pub out: PathBuf,
    pub svg: bool,
    pub overlay: Option<PathBuf>,
}

impl Default for AnalyticConfig {
    fn default() -> Self {
        Self {
            fig1: false,
            fig2_curves: false,
            m_list: (0..=10).map(|k| 1 << k).collect(),
            tol: 1e-9,
            out: PathBuf::from("out"),
            svg: false,
            overlay: None,
        }
    }
}

impl AnalyticConfig {
    fn resolve(args: AnalyticArgs) -> Result<Self, CliError> {
        let mut c: Self = load(args.config.as_deref())?;
        c.fig1 |= args.fig1;
        c.fig2_curves |= args.fig2_curves;
        c.svg |= args.svg;
        if let Some(v) = args.m_list {
            c.m_list = v;
        }
        if let Some(v) = args.tol {
            c.tol = v;
        }
        if let Some(v) = args.out {
            c.out = v;
        }
        if args.overlay.is_some() {
            c.overlay = args.overlay;
        }
        if !c.fig1 && !c.fig2_curves {
            return Err(CliError::Usage("nothing to do: pass --fig1 and/or --fig2-curves".into()));
        }
        if !(c.tol > 0.0 && c.tol < 1.0) {
            return Err(CliError::Usage(format!("--tol {} must lie in (0, 1)", c.tol)));
        }
        Ok(c)
    }
}

pub const FIG1_HEADER: [&str; 3] = ["m", "A_prime", "density"];
pub const FIG2_HEADER: [&str; 3] = ["m", "quantity", "value"];
const FIG1_CURVES: [&str; 4] = ["1", "2", "3", "inf"];

/// Density of the rescaled area `A' = A/(t√m)`.
fn rescaled_density(curve: &str, ap: f64) -> f64 {
    match curve {
        "1" => levy_density(ap, 1.0).expect("t = 1"),
        "2" => p2_rescaled(ap),
        "3" => p3_rescaled(ap),
        _ => pinf_rescaled(ap),
    }
}

/// `A' = −1.5, −1.49, …, 1.5`.
fn fig1_grid() -> impl Iterator<Item = f64> {
    (-150..=150).map(|i| f64::from(i) / 100.0)
}

fn write_fig1(cfg: &AnalyticConfig, outputs: &mut Vec<String>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(cfg.out.join("fig1.csv"))?;
    w.write_record(FIG1_HEADER)?;
    let mut series = Vec::new();
    for curve in FIG1_CURVES {
        let mut pts = Vec::new();
        for ap in fig1_grid() {
            let d = rescaled_density(curve, ap);
            w.write_record([curve.to_string(), ap.to_string(), d.to_string()])?;
            pts.push((ap, d));
        }
        series.push(Series {
            label: format!("m = {}", if curve == "inf" { "∞" } else { curve }),
            points: pts,
            style: Style::Line,
        });
    }
    w.flush()?;
    outputs.push("fig1.csv".into());
    if cfg.svg {
        let plot = Plot {
            title: "Rescaled algebraic area density".into(),
            x_label: "A' = A / (t √m)".into(),
            y_label: "density".into(),
            log2_x: false,
            series,
        };
        std::fs::write(cfg.out.join("fig1.svg"), plot.render())?;
        outputs.push("fig1.svg".into());
    }
    Ok(())
}

/// `(m, observable) ↦ mean` from an estimates.csv file.
fn read_overlay(path: &Path) -> Result<BTreeMap<(u32, String), f64>, CliError> {
    let mut r = csv::Reader::from_path(path)?;
    let mut out = BTreeMap::new();
    for rec in r.records() {
        let rec = rec?;
        let bad = || CliError::Usage(format!("{}: malformed estimates row", path.display()));
        let m: u32 = rec.get(0).and_then(|v| v.parse().ok()).ok_or_else(bad)?;
        let name = rec.get(3).ok_or_else(bad)?.to_string();
        let mean: f64 = rec.get(4).and_then(|v| v.parse().ok()).ok_or_else(bad)?;
        out.insert((m, name), mean);
    }
    Ok(out)
}

fn write_fig2(cfg: &AnalyticConfig, outputs: &mut Vec<String>) -> Result<(), CliError> {
    let spec = QuadratureSpec::new(cfg.tol, cfg.tol, 1e-14, 4000).map_err(|e| CliError::core("--tol", e))?;
    let mut w = csv::Writer::from_path(cfg.out.join("fig2_curves.csv"))?;
    w.write_record(FIG2_HEADER)?;
    let (mut quad, mut lead, mut sub) = (Vec::new(), Vec::new(), Vec::new());
    for &m in &cfg.m_list {
        let mf = f64::from(m);
        let v = mean_total_minus_zero(m, 1.0, &spec).map_err(|e| CliError::core(format!("m={m}"), e))?;
        w.write_record([m.to_string(), "quadrature_S_minus_S0_over_t".into(), v.to_string()])?;
        quad.push((mf, v));
        if m >= 2 {
            let l = asymptotic_leading(mf, 1.0).map_err(|e| CliError::core(format!("m={m}"), e))?;
            w.write_record([m.to_string(), "leading".into(), l.to_string()])?;
            lead.push((mf, l));
        }
        if mf > E {
            let s = asymptotic_subleading(mf, 1.0).map_err(|e| CliError::core(format!("m={m}"), e))?;
            w.write_record([m.to_string(), "subleading".into(), s.to_string()])?;
            sub.push((mf, s));
        }
    }
    w.flush()?;
    outputs.push("fig2_curves.csv".into());
    if cfg.svg {
        let mut series = vec![
            Series { label: "<S - S0>/t".into(), points: quad, style: Style::Line },
            Series { label: "leading".into(), points: lead, style: Style::Line },
            Series { label: "subleading".into(), points: sub, style: Style::Line },
        ];
        if let Some(path) = &cfg.overlay {
            let est = read_overlay(path)?;
            for (name, label) in [
                ("S_minus_S0_over_t", "MC <S - S0>/t"),
                ("S_over_t", "MC <S>/t"),
                ("hull_over_t", "MC <S>_convex/t"),
            ] {
                let pts: Vec<(f64, f64)> =
                    est.iter().filter(|((_, n), _)| n == name).map(|((m, _), &v)| (f64::from(*m), v)).collect();
                if !pts.is_empty() {
                    series.push(Series { label: label.into(), points: pts, style: Style::Markers });
                }
            }
        }
        let plot = Plot {
            title: "Mean enclosed area of m closed paths".into(),
            x_label: "m".into(),
            y_label: "area / t".into(),
            log2_x: true,
            series,
        };
        std::fs::write(cfg.out.join("fig2.svg"), plot.render())?;
        outputs.push("fig2.svg".into());
    }
    Ok(())
}

pub fn run(args: AnalyticArgs) -> Result<(), CliError> {
    let cfg = AnalyticConfig::resolve(args)?;
    manifest::ensure_dir(&cfg.out)?;
    let started = manifest::now();
    let mut outputs = Vec::new();
    let mut result = Ok(());
    if cfg.fig1 {
        result = write_fig1(&cfg, &mut outputs);
    }
    if cfg.fig2_curves && result.is_ok() {
        result = write_fig2(&cfg, &mut outputs);
    }
    manifest::write(
        &cfg.out,
        &RunManifest {
            command: "analytic",
            master_seed: None,
            config: &cfg,
            tool_version: manifest::TOOL_VERSION,
            started,
            finished: manifest::now(),
            partial: result.is_err(),
            outputs,
        },
    )?;
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_grid_is_exact() {
        let g: Vec<f64> = fig1_grid().collect();
        assert_eq!(g.len(), 301);
        assert_eq!(g[0], -1.5);
        assert_eq!(g[150], 0.0);
        assert_eq!(g[300], 1.5);
    }

    #[test]
    fn one_path_curve_has_the_greatest_maximum() {
        let peak = |c| rescaled_density(c, 0.0);
        assert!(FIG1_CURVES[1..].iter().all(|c| peak(c) < peak("1")));
        assert!((peak("inf") - (6.0 / std::f64::consts::PI).sqrt()).abs() < 1e-15);
    }
}
