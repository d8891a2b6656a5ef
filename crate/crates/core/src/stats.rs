//! Sample estimators and goodness-of-fit statistics.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `√n`.
    pub stderr: f64,
    pub n_samples: usize,
}

impl McEstimate {
    pub fn from_samples(values: &[f64]) -> Option<Self> {
        let n = values.len();
        if n == 0 {
            return None;
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let stderr = if n > 1 {
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
            (var / n as f64).sqrt()
        } else {
            0.0
        };
        Some(Self {
            mean,
            stderr,
            n_samples: n,
        })
    }

    /// Unbiased sample variance, with the large-sample standard error
    /// `√((μ₄ − σ⁴)/n)`.
    pub fn variance_of(values: &[f64]) -> Option<Self> {
        let n = values.len();
        if n < 2 {
            return None;
        }
        let nf = n as f64;
        let mean = values.iter().sum::<f64>() / nf;
        let m2 = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / nf;
        let m4 = values.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / nf;
        Some(Self {
            mean: m2 * nf / (nf - 1.0),
            stderr: ((m4 - m2 * m2).max(0.0) / nf).sqrt(),
            n_samples: n,
        })
    }

    /// `|mean − target| ≤ max(k·stderr, rel·|target|)`.
    pub fn agrees_with(&self, target: f64, k: f64, rel: f64) -> bool {
        (self.mean - target).abs() <= self.allowance(target, k, rel)
    }

    pub fn allowance(&self, target: f64, k: f64, rel: f64) -> f64 {
        (k * self.stderr).max(rel * target.abs())
    }
}

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and a
/// continuous CDF.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len() as f64;
    s.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = cdf(x);
        d.max(f - i as f64 / n).max((i + 1) as f64 / n - f)
    })
}

/// Pearson χ² test of observed counts against expected probabilities.
/// Returns `(statistic, degrees of freedom, p-value)`.
pub fn chi_square_test(observed: &[u64], expected_prob: &[f64]) -> (f64, usize, f64) {
    assert_eq!(observed.len(), expected_prob.len());
    let total: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(expected_prob)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dof = observed.len().saturating_sub(1).max(1);
    let p = ChiSquared::new(dof as f64).map(|d| 1.0 - d.cdf(stat)).unwrap_or(f64::NAN);
    (stat, dof, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_stderr() {
        let e = McEstimate::from_samples(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(e.mean, 2.5);
        assert!((e.stderr - (5.0f64 / 3.0 / 4.0).sqrt()).abs() < 1e-15);
        assert_eq!(McEstimate::from_samples(&[7.0]).unwrap().stderr, 0.0);
        assert!(McEstimate::from_samples(&[]).is_none());
    }

    #[test]
    fn agreement_rule() {
        let e = McEstimate { mean: 1.04, stderr: 0.001, n_samples: 10 };
        assert!(e.agrees_with(1.0, 3.0, 0.05));
        assert!(!e.agrees_with(1.0, 3.0, 0.01));
    }

    #[test]
    fn ks_of_uniform_grid() {
        let s: Vec<f64> = (0..100).map(|i| (i as f64 + 0.5) / 100.0).collect();
        let d = ks_statistic(&s, |x| x.clamp(0.0, 1.0));
        assert!((d - 0.005).abs() < 1e-12);
    }

    #[test]
    fn chi_square_perfect_fit() {
        let (stat, dof, p) = chi_square_test(&[25, 25, 25, 25], &[0.25; 4]);
        assert_eq!(stat, 0.0);
        assert_eq!(dof, 3);
        assert!((p - 1.0).abs() < 1e-12);
    }
}
