use super::propagator::{g_alpha, one_minus_power, series_tol};
use super::{AlphaValue, QuadratureSpec, SectorSpectrum};
use crate::error::{domain, Result};
use crate::quad;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::f64::consts::PI;

// x < e^{-SMALL_X_LOG_SPAN} is dropped; the integrand there is at most 1.
const SMALL_X_LOG_SPAN: f64 = 40.0;

fn check_common(func: &'static str, m: u32, t: f64) -> Result<()> {
    if m == 0 {
        return Err(domain(func, "m must be >= 1"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(func, format!("t = {t} must be > 0")));
    }
    Ok(())
}

/// `∫₀^∞ (1 − G_α(x)^m) dx` for `α` in `(0, ½]`.
fn z_unit(m: u32, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    let alpha = AlphaValue::new(a)?;
    let tol = series_tol();
    let defect = |x: f64| -> Result<f64> { Ok(one_minus_power(g_alpha(alpha, x, tol)?, m)) };
    // g_alpha only fails on exhausted term budgets; surface that after the
    // integration rather than threading Results through the rule.
    let failure = std::sync::Mutex::new(None);
    let guarded = |x: f64| match defect(x) {
        Ok(v) => v,
        Err(e) => {
            failure.lock().unwrap().get_or_insert(e);
            0.0
        }
    };
    // x ∈ (0, 1] as x = e^{−u}: resolves the (x/2)^α behaviour at the origin.
    let inner = quad::integrate(
        |u: f64| guarded((-u).exp()) * (-u).exp(),
        0.0,
        SMALL_X_LOG_SPAN,
        0.5 * spec.abs_tol,
        spec.rel_tol,
        spec.max_subdivisions,
    )?;
    // 1 − G^m ≤ m (1 − G) ≤ m e^{−2x}, so stop where that drops below eps.
    let x_max = (0.5 * (f64::from(m) / spec.x_cutoff_eps).ln() + 5.0).max(2.0);
    let outer = quad::integrate(
        guarded,
        1.0,
        x_max,
        0.5 * spec.abs_tol,
        spec.rel_tol,
        spec.max_subdivisions,
    )?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(inner.value + outer.value)
}

/// Regularized area `Z_α(m) = πt ∫₀^∞ (1 − G_α(x)^m) dx`.
pub fn z_alpha(m: u32, alpha: AlphaValue, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_common("z_alpha", m, t)?;
    let a = alpha.folded();
    if a == 0.0 {
        return Ok(0.0);
    }
    Ok(PI * t * z_unit(m, a, spec)?)
}

/// `∫₀^½ Z_α(m) w(α) dα` at `t = 1`, node evaluations fanned out on rayon.
fn alpha_integral<W: Fn(f64) -> f64 + Sync>(
    m: u32,
    weight: W,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let failure = std::sync::Mutex::new(None);
    let f = |a: f64| match z_unit(m, a, spec) {
        Ok(z) => PI * z * weight(a),
        Err(e) => {
            failure.lock().unwrap().get_or_insert(e);
            0.0
        }
    };
    let r = quad::integrate_par(f, lo, hi, spec.abs_tol, spec.rel_tol, spec.max_subdivisions)?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(r.value)
}

/// `⟨S_n(m)⟩ = −∫₀¹ Z_α(m) cos(2παn) dα` for `n ≠ 0`.
pub fn mean_sector_area(n: i64, m: u32, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_common("mean_sector_area", m, t)?;
    if n == 0 {
        return Err(domain("mean_sector_area", "n must be nonzero"));
    }
    let freq = 2.0 * PI * n.unsigned_abs() as f64;
    // one panel per half period of the cosine on [0, ½]
    let pieces = n.unsigned_abs().max(1) as usize;
    let mut total = 0.0;
    for i in 0..pieces {
        let lo = 0.5 * i as f64 / pieces as f64;
        let hi = 0.5 * (i + 1) as f64 / pieces as f64;
        total += alpha_integral(m, |a| (freq * a).cos(), lo, hi, spec)?;
    }
    Ok(-2.0 * total * t)
}

/// `⟨S(m) − S₀(m)⟩ = ∫₀¹ Z_α(m) dα`.
pub fn mean_total_minus_zero(m: u32, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_common("mean_total_minus_zero", m, t)?;
    Ok(2.0 * alpha_integral(m, |_| 1.0, 0.0, 0.5, spec)? * t)
}

const SPECTRUM_NODES: usize = 20;

/// All `⟨S_n(m)⟩` with `0 < |n| ≤ n_max` and `⟨S(m) − S₀(m)⟩` from one
/// shared table of `Z_α(m)` on a composite Gauss-Legendre grid over `[0, ½]`.
pub fn sector_spectrum(m: u32, t: f64, n_max: u32, spec: &QuadratureSpec) -> Result<SectorSpectrum> {
    check_common("sector_spectrum", m, t)?;
    let panels = (n_max as usize).max(8);
    let (gx, gw) = quad::gauss_legendre(SPECTRUM_NODES);
    let h = 0.5 / panels as f64;
    let mut nodes = Vec::with_capacity(panels * SPECTRUM_NODES);
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in gx.iter().zip(&gw) {
            nodes.push((mid + 0.5 * h * x, 0.5 * h * w));
        }
    }
    let z: Vec<f64> = nodes
        .par_iter()
        .map(|&(a, _)| z_unit(m, a, spec).map(|v| PI * v))
        .collect::<Result<_>>()?;
    let total: f64 = 2.0 * nodes.iter().zip(&z).map(|((_, w), z)| w * z).sum::<f64>();
    let mut coefficients = BTreeMap::new();
    for n in 1..=i64::from(n_max) {
        let freq = 2.0 * PI * n as f64;
        let c: f64 = nodes
            .iter()
            .zip(&z)
            .map(|(&(a, w), z)| w * z * (freq * a).cos())
            .sum();
        coefficients.insert(n, -2.0 * c * t);
        coefficients.insert(-n, -2.0 * c * t);
    }
    Ok(SectorSpectrum {
        m,
        t,
        coefficients,
        total_minus_zero: total * t,
    })
}
