//! Confluent hypergeometric function of the second kind from its Laplace
//! integral
//!
//! `U(a;b;z) = z^{-a}/Γ(a) ∫₀^∞ e^{-t} t^{a-1} (1 + t/z)^{b-a-1} dt`.
//!
//! Subtracting the `(1 + t/z)^{b-a-1} ≈ 1` part leaves
//! `U = z^{-a} [1 + J/Γ(a)]` with a remainder integrand that vanishes like
//! `t^a` at the origin, so `a → 0⁺` is regular (`U(0;b;z) = 1`). The
//! remainder is integrated with the trapezoidal rule after `t = e^w`, which
//! converges geometrically for integrands analytic in a strip.

use crate::error::{domain, Result};
use statrs::function::gamma::{gamma, ln_gamma};

const STEP: f64 = 0.1;
// Below this the subtracted form is used, so the slowly decaying `t^{a-1}`
// end does not need a long grid.
const DIRECT_MIN_A: f64 = 0.25;

/// `U(a; b; z)` for `a > 0`, `z > 0`.
pub fn hyper_u(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("hyper_u", format!("a = {a} must be > 0")));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(domain("hyper_u", format!("z = {z} must be > 0")));
    }
    if !b.is_finite() {
        return Err(domain("hyper_u", format!("b = {b} must be finite")));
    }
    Ok(hyper_u_nonneg(a, b, z))
}

/// `1/Γ(a)` for `a ∈ [0, ∞)`, exact zero at the pole.
fn recip_gamma(a: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        a / gamma(a + 1.0)
    }
}

/// Same as [`hyper_u`] but also accepts `a = 0`.
pub(crate) fn hyper_u_nonneg(a: f64, b: f64, z: f64) -> f64 {
    let c = b - a - 1.0;
    if c == 0.0 || a == 0.0 {
        return z.powf(-a);
    }
    if a >= DIRECT_MIN_A {
        // Whole integrand, scaled by z^{-a}/Γ(a) in the exponent.
        let shift = -a * z.ln() - ln_gamma(a);
        let integrand = |w: f64| -> f64 {
            let t = w.exp();
            (-t + a * w + c * (t / z).ln_1p() + shift).exp()
        };
        return trapezoid_in_log(integrand, z.ln().min(0.0) - 41.0 / a);
    }
    let integrand = |w: f64| -> f64 {
        let t = w.exp();
        let bump = (c * (t / z).ln_1p()).exp_m1();
        (-t + a * w).exp() * bump
    };
    // Left end: integrand ≈ |c| e^{(a+1)w}/z once e^w ≪ z.
    let w_lo = z.ln().min(0.0) - 50.0 / (a + 1.0);
    z.powf(-a) * (1.0 + recip_gamma(a) * trapezoid_in_log(integrand, w_lo))
}

/// Trapezoidal sum of `f(w)` from `w_lo` rightwards, stopping once `t = e^w`
/// is past 40 and the terms are negligible.
fn trapezoid_in_log(f: impl Fn(f64) -> f64, w_lo: f64) -> f64 {
    let w_min_stop = 40f64.ln();
    let mut sum = 0.5 * f(w_lo);
    let mut i = 1;
    loop {
        let w = w_lo + i as f64 * STEP;
        let v = f(w);
        sum += v;
        if (w > w_min_stop && v.abs() <= 1e-18 * sum.abs()) || w > 12.0 {
            break;
        }
        i += 1;
    }
    sum * STEP
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_equal_a_plus_one_is_a_power() {
        for a in [0.1, 0.5, 0.9] {
            for z in [0.5, 5.0, 500.0] {
                let u = hyper_u(a, a + 1.0, z).unwrap();
                assert!((u * z.powf(a) - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn large_z_behaves_like_power() {
        let z = 1e6_f64;
        let u = hyper_u(0.3, 0.8, z).unwrap();
        assert!((u / z.powf(-0.3) - 1.0).abs() < 1e-4);
    }

    #[test]
    fn zero_a_limit_is_one() {
        assert_eq!(hyper_u_nonneg(0.0, 1.0, 3.0), 1.0);
        let near = hyper_u_nonneg(1e-9, 1.0, 3.0);
        assert!((near - 1.0).abs() < 1e-8);
    }

    #[test]
    fn domain_errors() {
        assert!(hyper_u(0.0, 1.0, 1.0).is_err());
        assert!(hyper_u(-1.0, 1.0, 1.0).is_err());
        assert!(hyper_u(0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn kummer_transformation() {
        // U(a;b;z) = z^{1-b} U(1+a-b; 2-b; z)
        for (a, b, z) in [(0.7, 0.4, 1.3), (1.2, 1.9, 0.6), (0.35, 0.7, 4.0)] {
            let lhs = hyper_u(a, b, z).unwrap();
            let rhs = z.powf(1.0 - b) * hyper_u(1.0 + a - b, 2.0 - b, z).unwrap();
            assert!(((lhs - rhs) / lhs).abs() < 1e-10, "{a} {b} {z}: {lhs} vs {rhs}");
        }
    }
}
