//! Probability densities of the algebraic area enclosed by `m` independent
//! closed Brownian paths of duration `t`.

use super::SeriesTolerance;
use crate::error::{domain, Error, Result};
use crate::quad;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Number of paths, duration and algebraic area at which a density is
/// evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaDensityParams {
    pub m: u32,
    pub t: f64,
    pub area: f64,
}

impl AreaDensityParams {
    pub fn new(m: u32, t: f64, area: f64) -> Result<Self> {
        if m == 0 {
            return Err(domain("AreaDensityParams", "m must be >= 1"));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(domain("AreaDensityParams", format!("t = {t} must be > 0")));
        }
        if !area.is_finite() {
            return Err(domain("AreaDensityParams", "area must be finite"));
        }
        Ok(Self { m, t, area })
    }

    /// Build from the rescaled area `A' = A / (t √m)`.
    pub fn from_rescaled(m: u32, t: f64, rescaled: f64) -> Result<Self> {
        Self::new(m, t, rescaled * t * f64::from(m).sqrt())
    }

    /// `A / (t √m)`.
    pub fn rescaled_area(&self) -> f64 {
        self.area / (self.t * f64::from(self.m).sqrt())
    }
}

fn check_t(func: &'static str, t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(func, format!("t = {t} must be > 0")))
    }
}

/// Lévy's law for one path: `(π / 2t) sech²(πA/t)`.
pub fn levy_density(area: f64, t: f64) -> Result<f64> {
    check_t("levy_density", t)?;
    let c = (PI * area / t).cosh();
    Ok(PI / (2.0 * t) / (c * c))
}

/// Cumulative distribution of Lévy's law, `½(1 + tanh(πA/t))`.
pub fn levy_cdf(area: f64, t: f64) -> Result<f64> {
    check_t("levy_cdf", t)?;
    Ok(0.5 * (1.0 + (PI * area / t).tanh()))
}

/// `ln(u / sinh u)` for `u ≥ 0`, without overflow.
fn ln_u_over_sinh(u: f64) -> f64 {
    let u = u.abs();
    if u < 1e-4 {
        // u/sinh u = 1 − u²/6 + 7u⁴/360
        let u2 = u * u;
        -u2 / 6.0 + u2 * u2 / 180.0
    } else if u < 20.0 {
        (u / u.sinh()).ln()
    } else {
        // sinh u = e^u (1 − e^{-2u}) / 2
        (2.0 * u).ln() - u - (-(-2.0 * u).exp()).ln_1p()
    }
}

/// Characteristic function of the total algebraic area,
/// `(Bt/2 / sinh(Bt/2))^m`.
pub fn pm_char_fn(b: f64, m: u32, t: f64) -> Result<f64> {
    check_t("pm_char_fn", t)?;
    if m == 0 {
        return Err(domain("pm_char_fn", "m must be >= 1"));
    }
    if !b.is_finite() {
        return Err(domain("pm_char_fn", "B must be finite"));
    }
    Ok((f64::from(m) * ln_u_over_sinh(0.5 * b * t)).exp())
}

const EM_TERMS: usize = 10;

// B_{2j} / (2j)!, j = 1..=10
const BERNOULLI_OVER_FACT: [f64; EM_TERMS] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// `c^{s-1} ζ(s, c)` by Euler-Maclaurin with no explicit terms. Needs `|c|`
/// large compared with `s`.
fn scaled_hurwitz_tail(s: f64, c: Complex64) -> Complex64 {
    let inv2 = (c * c).inv();
    let mut out = Complex64::new(1.0 / (s - 1.0), 0.0) + 0.5 / c;
    let mut rising = s; // (s)_{2j-1}
    let mut pow = inv2;
    for (j, coef) in BERNOULLI_OVER_FACT.iter().enumerate() {
        if j > 0 {
            let k = 2.0 * j as f64;
            rising *= (s + k - 1.0) * (s + k);
            pow *= inv2;
        }
        out += pow * (coef * rising);
    }
    out
}

/// Bound on the first omitted Euler-Maclaurin term relative to `1/(s-1)`.
fn em_remainder_bound(s: f64, modulus: f64) -> f64 {
    let mut rising = s;
    for i in 1..(2 * EM_TERMS + 1) {
        rising *= s + i as f64;
    }
    // |B_22| / 22! ≈ 2 · 22!/(2π)^22 / 22! = 2 / (2π)^22
    let coef = 2.0 / (2.0 * PI).powi(2 * EM_TERMS as i32 + 2);
    coef * rising * (s - 1.0) / modulus.powi(2 * EM_TERMS as i32 + 2)
}

/// Density of the total algebraic area of `m` paths from the binomial
/// series
///
/// `P_m(A) = (m!/2πt) Σ_k C(k+m−1,k) [(k + m/2 + iA/t)^{−(m+1)} + c.c.]`.
///
/// Terms decay only like `k^{-2}`, so the first `K` are summed directly and
/// the rest is evaluated exactly as a combination of Hurwitz zeta tails
/// (binomial re-expanded around `k + m/2 + iA/t`). `K` is chosen so the
/// re-expansion has no cancellation and the Euler-Maclaurin remainder is
/// below `tol.rel_tol`.
pub fn pm_density_series(params: AreaDensityParams, tol: SeriesTolerance) -> Result<f64> {
    let m = params.m as usize;
    let mf = params.m as f64;
    let c = Complex64::new(0.5 * mf, params.area / params.t);
    let spread: f64 = (1..m).map(|i| (c - i as f64).norm()).sum();
    let mut cutoff = spread.ceil() as usize + 16;
    while em_remainder_bound(mf + 1.0, (c + cutoff as f64).norm()) > tol.rel_tol {
        cutoff += cutoff / 2 + 1;
        if cutoff > tol.max_terms {
            break;
        }
    }
    if cutoff > tol.max_terms {
        return Err(Error::Convergence {
            what: "pm_density_series",
            limit: tol.max_terms,
        });
    }

    // m! C(k+m−1, k) (k+c)^{−(m+1)} = m/(k+c)² ∏_{i<m} (k+i)/(k+c)
    let mut direct = Complex64::new(0.0, 0.0);
    for k in 0..cutoff {
        let w = c + k as f64;
        let mut term = mf / (w * w);
        for i in 1..m {
            term *= (k + i) as f64 / w;
        }
        direct += term;
    }

    let shift = c + cutoff as f64;
    // Monic polynomial ∏_{i<m} (u − (c−i)/shift), lowest degree first.
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for i in 1..m {
        let root = (c - i as f64) / shift;
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (j, &p) in poly.iter().enumerate() {
            next[j + 1] += p;
            next[j] -= p * root;
        }
        poly = next;
    }
    let tail: Complex64 = poly
        .iter()
        .enumerate()
        .map(|(j, &q)| q * scaled_hurwitz_tail((m + 1 - j) as f64, shift))
        .sum::<Complex64>()
        * (mf / shift);

    Ok((direct + tail).re / (PI * params.t))
}

/// Brute-force density from the Fourier integral of the characteristic
/// function, `P_m(A) = (1/π) ∫₀^∞ (Bt/2 / sinh(Bt/2))^m cos(BA) dB`.
pub fn pm_density_quad(params: AreaDensityParams) -> Result<f64> {
    let mf = f64::from(params.m);
    // Upper cutoff: m·ln(u/sinh u) < ln(1e-16), with u = Bt/2.
    let target = (1e-16_f64).ln() / mf;
    let mut u_max = 40.0_f64;
    for _ in 0..60 {
        u_max = (2.0 * u_max).ln() - target;
    }
    let a = params.area / params.t;
    // In u: P = (2 / πt) ∫₀^{u_max} (u/sinh u)^m cos(2ua) du.
    let f = |u: f64| (mf * ln_u_over_sinh(u)).exp() * (2.0 * u * a).cos();
    // Panels no wider than a quarter oscillation keep the rule well resolved.
    let width = if a.abs() > 0.0 { (PI / (4.0 * a.abs())).min(2.0) } else { 2.0 };
    let pieces = (u_max / width).ceil() as usize;
    let mut total = 0.0;
    for i in 0..pieces {
        let lo = u_max * i as f64 / pieces as f64;
        let hi = u_max * (i + 1) as f64 / pieces as f64;
        total += quad::integrate(f, lo, hi, 1e-15, 1e-14, 200)?.value;
    }
    Ok(2.0 * total / (PI * params.t))
}

/// `P_2(A')` in the rescaled area `A' = A/(t√2)`.
const P2_TAYLOR_RADIUS: f64 = 0.25;

/// Taylor coefficients of `(u coth u − 1)/sinh² u` in powers of `u²`.
const P2_TAYLOR: [f64; 11] = [
    1.0 / 3.0,
    -2.0 / 15.0,
    2.0 / 63.0,
    -4.0 / 675.0,
    2.0 / 2079.0,
    -2764.0 / 19_348_875.0,
    4.0 / 200_475.0,
    -28936.0 / 10_854_718_875.0,
    87734.0 / 254_766_637_125.0,
    -698_444.0 / 16_119_257_529_375.0,
    310_732.0 / 58_215_830_911_875.0,
];

pub fn p2_rescaled(aprime: f64) -> f64 {
    let s = PI * 2f64.sqrt();
    let u = s * aprime;
    let ratio = if u.abs() < P2_TAYLOR_RADIUS {
        let u2 = u * u;
        P2_TAYLOR.iter().rev().fold(0.0, |acc, c| acc * u2 + c)
    } else {
        let sh = u.sinh();
        (u / u.tanh() - 1.0) / (sh * sh)
    };
    s * ratio
}

/// `P_3(A')` in the rescaled area `A' = A/(t√3)`.
pub fn p3_rescaled(aprime: f64) -> f64 {
    let s = PI * 3f64.sqrt();
    let v = s * aprime;
    let th = v.tanh();
    let ch = v.cosh();
    let bracket = 3.0 - 6.0 * v * th - (v * v + PI * PI / 4.0) * (1.0 - 3.0 * th * th);
    s / (2.0 * ch * ch) * bracket
}

/// Gaussian limit `√(6/π) e^{−6A'²}`.
pub fn pinf_rescaled(aprime: f64) -> f64 {
    (6.0 / PI).sqrt() * (-6.0 * aprime * aprime).exp()
}

/// Variance of the total algebraic area, `m t² / 12`.
pub fn pm_variance(m: u32, t: f64) -> Result<f64> {
    check_t("pm_variance", t)?;
    if m == 0 {
        return Err(domain("pm_variance", "m must be >= 1"));
    }
    Ok(f64::from(m) * t * t / 12.0)
}
