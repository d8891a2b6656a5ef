use crate::error::{domain, Result};
use std::f64::consts::{E, PI};

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn check_t(func: &'static str, t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(func, format!("t = {t} must be > 0")))
    }
}

/// Leading large-`m` behaviour `(πt/2) ln m`.
pub fn asymptotic_leading(m: f64, t: f64) -> Result<f64> {
    check_t("asymptotic_leading", t)?;
    if !(m >= 2.0) || !m.is_finite() {
        return Err(domain("asymptotic_leading", format!("m = {m} must be >= 2")));
    }
    Ok(0.5 * PI * t * m.ln())
}

/// Leading plus subleading terms,
/// `t [(π/2) ln m − (π/4) ln ln m − (π/2)(ln √(4π) − γ)]`.
pub fn asymptotic_subleading(m: f64, t: f64) -> Result<f64> {
    check_t("asymptotic_subleading", t)?;
    if !(m > E) || !m.is_finite() {
        return Err(domain("asymptotic_subleading", format!("m = {m} must exceed e")));
    }
    let l = m.ln();
    Ok(t * (0.5 * PI * l - 0.25 * PI * l.ln() - 0.5 * PI * ((4.0 * PI).sqrt().ln() - EULER_GAMMA)))
}
