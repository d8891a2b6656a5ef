//! Exponentially scaled modified Bessel function of the first kind,
//! `e^{-x} I_ν(x)`, for real order `ν ≥ 0` and argument `x ≥ 0`.
//!
//! Three regimes:
//! - order `ν ≥ 25`: Debye uniform expansion through `u_8`;
//! - `x ≥ 20` and small order: Hankel large-argument expansion, used only
//!   when its terms shrink below roundoff without first growing;
//! - everything else: ascending power series.

use crate::error::{domain, Result};
use statrs::function::gamma::ln_gamma;
use std::f64::consts::PI;

const DEBYE_MIN_ORDER: f64 = 25.0;
const HANKEL_MIN_ARG: f64 = 20.0;

/// Polynomials `u_k(p)` of the Debye expansion, as (denominator, coefficients
/// of p^k, p^{k+2}, ...).
const DEBYE_U: [(f64, &[f64]); 8] = [
    (24.0, &[3.0, -5.0]),
    (1152.0, &[81.0, -462.0, 385.0]),
    (414_720.0, &[30375.0, -369_603.0, 765_765.0, -425_425.0]),
    (
        39_813_120.0,
        &[4_465_125.0, -94_121_676.0, 349_922_430.0, -446_185_740.0, 185_910_725.0],
    ),
    (
        6_688_604_160.0,
        &[
            1_519_035_525.0,
            -49_286_948_607.0,
            284_499_769_554.0,
            -614_135_872_350.0,
            566_098_157_625.0,
            -188_699_385_875.0,
        ],
    ),
    (
        4_815_794_995_200.0,
        &[
            2_757_049_477_875.0,
            -127_577_298_354_750.0,
            1_050_760_774_457_901.0,
            -3_369_032_068_261_860.0,
            5_104_696_716_244_125.0,
            -3_685_299_006_138_750.0,
            1_023_694_168_371_875.0,
        ],
    ),
    (
        115_579_079_884_800.0,
        &[
            199_689_155_040_375.0,
            -12_493_049_053_044_375.0,
            138_799_253_740_521_843.0,
            -613_221_795_981_706_275.0,
            1_347_119_637_570_231_525.0,
            -1_570_320_948_552_481_125.0,
            931_766_432_052_080_625.0,
            -221_849_150_488_590_625.0,
        ],
    ),
    (
        22_191_183_337_881_600.0,
        &[
            134_790_179_652_253_125.0,
            -10_960_565_081_605_263_000.0,
            157_768_535_329_832_893_644.0,
            -914_113_758_588_905_038_248.0,
            2_711_772_922_412_520_971_550.0,
            -4_513_690_624_987_320_777_000.0,
            4_272_845_805_510_421_639_500.0,
            -2_152_114_239_059_719_935_000.0,
            448_357_133_137_441_653_125.0,
        ],
    ),
];

/// `e^{-x} I_ν(x)`.
///
/// At `x = 0` this is 1 for `ν = 0` and 0 otherwise. Values below the
/// smallest positive double flush to zero.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(domain("bessel_i_scaled", format!("order {nu} must be finite and >= 0")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("bessel_i_scaled", format!("argument {x} must be finite and >= 0")));
    }
    Ok(scaled_unchecked(nu, x))
}

pub(crate) fn scaled_unchecked(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if nu >= DEBYE_MIN_ORDER {
        return debye(nu, x);
    }
    if x >= HANKEL_MIN_ARG {
        if let Some(v) = hankel(nu, x) {
            return v;
        }
    }
    power_series(nu, x)
}

fn power_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut log_scale = nu * (0.5 * x).ln() - x - ln_gamma(nu + 1.0);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= q / (k * (k + nu));
        sum += term;
        if term < 1e-17 * sum && k * (k + nu) > q {
            break;
        }
        if sum > 1e250 {
            sum *= 1e-250;
            term *= 1e-250;
            log_scale += 250.0 * std::f64::consts::LN_10;
        }
    }
    sum * log_scale.exp()
}

fn hankel(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut term: f64 = 1.0;
    let mut sum: f64 = 1.0;
    let mut peak: f64 = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        let odd = 2.0 * k - 1.0;
        let next = -term * (mu - odd * odd) / (8.0 * k * x);
        if next == 0.0 {
            break;
        }
        // Past the turning point the series diverges; give up if we got there
        // before reaching roundoff.
        if next.abs() > term.abs() && odd * odd > mu {
            return None;
        }
        term = next;
        sum += term;
        peak = peak.max(term.abs());
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    if peak > 10.0 {
        return None;
    }
    Some(sum / (2.0 * PI * x).sqrt())
}

fn debye(nu: f64, x: f64) -> f64 {
    let r = (nu * nu + x * x).sqrt();
    // ν·η − x with η = √(1+z²) + ln(z / (1 + √(1+z²))), z = x/ν.
    let exponent = nu * nu / (r + x) - nu * (nu / x).asinh();
    let p = nu / r;
    let p2 = p * p;
    let mut series = 1.0;
    let mut inv = 1.0;
    let mut pk = 1.0;
    for (den, coeffs) in DEBYE_U.iter() {
        inv /= nu;
        pk *= p;
        let poly = coeffs.iter().rev().fold(0.0, |acc, c| acc * p2 + c);
        series += pk * poly / den * inv;
    }
    (p / (2.0 * PI * nu)).sqrt() * series * exponent.exp()
}
