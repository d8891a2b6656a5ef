use super::AlphaValue;
use crate::error::{domain, Error, Result};
use crate::specfun::{bessel_i_scaled_unchecked, hyper_u_nonneg, SeriesTolerance};
use std::f64::consts::PI;

/// `I_{ν+1}(x) / I_ν(x)` from its continued fraction (modified Lentz).
fn bessel_i_ratio(nu: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let b = |k: f64| 2.0 * (nu + k) / x;
    let mut f = b(1.0);
    let mut c = f;
    let mut d = 0.0;
    let mut k = 2.0;
    loop {
        let bk = b(k);
        d += bk;
        if d == 0.0 {
            d = TINY;
        }
        c = bk + 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 || k > 1e6 {
            break;
        }
        k += 1.0;
    }
    1.0 / f
}

/// `e^{-x} I_{ν₀+j}(x)` for `j < count`, by backward recurrence normalized
/// to a direct evaluation at `ν₀`.
fn order_ladder(nu0: f64, x: f64, count: usize) -> Vec<f64> {
    let mut f = vec![0.0; count];
    let top = count - 1;
    f[top] = 1.0;
    let mut above = bessel_i_ratio(nu0 + top as f64, x);
    for j in (1..=top).rev() {
        let nu = nu0 + j as f64;
        let below = 2.0 * nu / x * f[j] + above;
        above = f[j];
        f[j - 1] = below;
        if below > 1e200 {
            for v in &mut f[j - 1..] {
                *v *= 1e-200;
            }
            above *= 1e-200;
        }
    }
    let norm = bessel_i_scaled_unchecked(nu0, x) / f[0];
    for v in &mut f {
        *v *= norm;
    }
    f
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(func, format!("x = {x} must be finite and >= 0")))
    }
}

/// Propagator `G_α(x) = e^{-x} Σ_k I_{|k−α|}(x)`.
///
/// The sum is split into orders `α + j` and `1 − α + j`, `j ≥ 0`, and stops
/// at the first `j` where both terms fall below `tol.rel_tol` times the
/// partial sum.
pub fn g_alpha(alpha: AlphaValue, x: f64, tol: SeriesTolerance) -> Result<f64> {
    check_x("g_alpha", x)?;
    let a = alpha.folded();
    if a == 0.0 {
        return Ok(1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut count = 16 + (9.0 * x.sqrt()).ceil() as usize;
    loop {
        let lo = order_ladder(a, x, count);
        let hi = if a == 0.5 { lo.clone() } else { order_ladder(1.0 - a, x, count) };
        let mut sum = 0.0;
        for (j, (p, q)) in lo.iter().zip(&hi).enumerate() {
            sum += p + q;
            if *p < tol.rel_tol * sum && *q < tol.rel_tol * sum {
                return Ok(sum.min(1.0));
            }
            if j + 1 >= tol.max_terms {
                return Err(Error::Convergence {
                    what: "g_alpha order sum",
                    limit: tol.max_terms,
                });
            }
        }
        count *= 2;
    }
}

pub(crate) fn series_tol() -> SeriesTolerance {
    SeriesTolerance {
        rel_tol: 1e-17,
        max_terms: 1_000_000,
    }
}

/// `dG_α/dx = (2/√π) sin(πα) e^{−2x} (2x)^{α−1} U(α − ½; 2α; 2x)`.
///
/// The Laplace integral for `U` needs `α ≥ ½`; smaller `α` is evaluated at
/// `1 − α`, where `G` takes the same value.
pub fn g_alpha_deriv(alpha: AlphaValue, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("g_alpha_deriv", format!("x = {x} must be > 0")));
    }
    let a = 1.0 - alpha.folded();
    if a == 1.0 {
        return Ok(0.0);
    }
    let z = 2.0 * x;
    let u = hyper_u_nonneg(a - 0.5, 2.0 * a, z);
    Ok(2.0 / PI.sqrt() * (PI * a).sin() * (-z).exp() * z.powf(a - 1.0) * u)
}

/// Large-`x` asymptotic form `1 − G_α(x) ≈ sin(πα) e^{−2x} / √(2πx)`.
pub fn g_alpha_tail(alpha: AlphaValue, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain("g_alpha_tail", format!("x = {x} must be > 0")));
    }
    let s = if alpha.folded() == 0.0 { 0.0 } else { (PI * alpha.get()).sin() };
    Ok(s * (-2.0 * x).exp() / (2.0 * PI * x).sqrt())
}

/// `1 − G^m`, accurate when `G` is close to 1.
pub(crate) fn one_minus_power(g: f64, m: u32) -> f64 {
    if g <= 0.0 {
        return 1.0;
    }
    -(f64::from(m) * (g - 1.0).ln_1p()).exp_m1()
}

/// `(G_α(y ln m / 2))^m`, which sharpens to a step at `y = 1` as `m` grows.
pub fn heaviside_limit_check(alpha: AlphaValue, y: f64, m: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(domain("heaviside_limit_check", format!("y = {y} must be > 0")));
    }
    if !(m >= 2.0) || !m.is_finite() {
        return Err(domain("heaviside_limit_check", format!("m = {m} must be >= 2")));
    }
    let g = g_alpha(alpha, 0.5 * y * m.ln(), series_tol())?;
    if g <= 0.0 {
        return Ok(0.0);
    }
    Ok((m * (g - 1.0).ln_1p()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_i_scaled;

    fn al(a: f64) -> AlphaValue {
        AlphaValue::new(a).unwrap()
    }

    fn tol() -> SeriesTolerance {
        SeriesTolerance::default()
    }

    #[test]
    fn ladder_matches_direct_evaluation() {
        for &(nu0, x) in &[(0.3, 0.01), (0.7, 2.0), (0.5, 25.0), (0.1, 300.0)] {
            let ladder = order_ladder(nu0, x, 40);
            for (j, v) in ladder.iter().enumerate() {
                let direct = bessel_i_scaled(nu0 + j as f64, x).unwrap();
                if direct > 1e-250 {
                    assert!(((v - direct) / direct).abs() < 1e-11, "{nu0} {x} {j}: {v} vs {direct}");
                }
            }
        }
    }

    #[test]
    fn g_matches_naive_bessel_sum() {
        for &(a, x) in &[(0.3, 0.5), (0.5, 5.0), (0.85, 12.0), (0.02, 0.2)] {
            let mut naive = 0.0;
            for k in -80i32..=80 {
                naive += bessel_i_scaled((f64::from(k) - a).abs(), x).unwrap();
            }
            let g = g_alpha(al(a), x, tol()).unwrap();
            assert!((g - naive).abs() < 1e-13, "{a} {x}: {g} vs {naive}");
        }
    }

    #[test]
    fn g_special_values() {
        for x in [0.0, 0.3, 7.0, 40.0] {
            assert_eq!(g_alpha(al(0.0), x, tol()).unwrap(), 1.0);
            assert_eq!(g_alpha(al(1.0), x, tol()).unwrap(), 1.0);
        }
        assert_eq!(g_alpha(al(0.4), 0.0, tol()).unwrap(), 0.0);
        let g = g_alpha(al(0.3), 5.0, tol()).unwrap();
        let h = g_alpha(al(0.7), 5.0, tol()).unwrap();
        assert_eq!(g, h);
        assert!(g > 0.0 && g < 1.0);
        // α → 0 recovers the free propagator
        let near = g_alpha(al(1e-12), 3.0, tol()).unwrap();
        assert!((near - 1.0).abs() < 1e-10);
    }

    #[test]
    fn g_small_x_power_law() {
        let x = 0.01_f64;
        let g = g_alpha(al(0.25), x, tol()).unwrap();
        let gamma = statrs::function::gamma::gamma;
        let approx: f64 = [0.25, 0.75, 1.25, 1.75, 2.25, 2.75]
            .iter()
            .map(|&nu| (x / 2.0).powf(nu) / gamma(1.0 + nu))
            .sum::<f64>()
            * (-x).exp();
        assert!(((g - approx) / approx).abs() < 1e-4, "{g} vs {approx}");
        let leading = (x / 2.0).powf(0.25) / gamma(1.25);
        assert!(leading < g);
    }

    #[test]
    fn tail_form() {
        let v = g_alpha_tail(al(0.5), 10.0).unwrap();
        assert!((v - (-20f64).exp() / (20.0 * PI).sqrt()).abs() < 1e-24);
        assert_eq!(g_alpha_tail(al(0.0), 3.0).unwrap(), 0.0);
        assert_eq!(g_alpha_tail(al(1.0), 3.0).unwrap(), 0.0);
        // G_{1/2}(x) = erf(√(2x))
        let erfc = statrs::function::erf::erfc;
        let resolved = 1.0 - g_alpha(al(0.5), 8.0, series_tol()).unwrap();
        assert!(((resolved - erfc(4.0)) / erfc(4.0)).abs() < 1e-6, "{resolved}");
        for x in [8.0_f64, 20.0, 80.0] {
            let exact = erfc((2.0 * x).sqrt());
            let rel = g_alpha_tail(al(0.5), x).unwrap() / exact - 1.0;
            assert!(rel > 0.0 && rel < 1.0 / (4.0 * x), "x={x}: {rel}");
        }
    }

    #[test]
    fn derivative_is_symmetric_and_nonnegative() {
        for x in [0.05, 1.0, 6.0] {
            let a = g_alpha_deriv(al(0.2), x).unwrap();
            let b = g_alpha_deriv(al(0.8), x).unwrap();
            assert_eq!(a, b);
            assert!(a > 0.0);
        }
        assert_eq!(g_alpha_deriv(al(0.0), 1.0).unwrap(), 0.0);
        assert!(g_alpha_deriv(al(0.5), 0.0).is_err());
    }

    #[test]
    fn derivative_at_half_is_elementary() {
        // U(0; 1; z) = 1
        for x in [0.1_f64, 2.0] {
            let expect = 2.0 / PI.sqrt() * (-2.0 * x).exp() / (2.0 * x).sqrt();
            assert!((g_alpha_deriv(al(0.5), x).unwrap() - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn powers_of_g() {
        assert_eq!(one_minus_power(0.0, 3), 1.0);
        let eps = 2f64.powi(-43);
        let expect = -(1000.0 * (-eps).ln_1p()).exp_m1();
        assert!(((one_minus_power(1.0 - eps, 1000) - expect) / expect).abs() < 1e-14);
        assert!(((expect - 1000.0 * eps) / expect).abs() < 1e-9);
    }

    #[test]
    fn heaviside_sharpening() {
        let above = heaviside_limit_check(al(0.5), 2.0, 1e4).unwrap();
        assert!(above >= 0.999);
        let near_zero = heaviside_limit_check(al(0.5), 1e-6, 1e4).unwrap();
        assert!(near_zero < 1e-3);
        let mut prev: Option<f64> = None;
        for m in [1e2, 1e3, 1e4, 1e5] {
            let v = heaviside_limit_check(al(0.5), 1.0, m).unwrap();
            assert!(v > 0.0 && v < 1.0);
            if let Some(p) = prev {
                assert!((v - p).abs() < 0.2);
            }
            prev = Some(v);
        }
        assert!(heaviside_limit_check(al(0.5), 1.0, 1.5).is_err());
    }
}
