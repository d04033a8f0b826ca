//! Brute-force moments of the artificial-noise gain.
//!
//! Every equally likely sign pattern of a small array is enumerated and `β`
//! is evaluated by direct phasor summation. Nothing here goes through the
//! sampler or the beamformers, so the results can serve as a reference for
//! both the closed-form lemma and the Monte Carlo engine.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods whenever std is linked
use num_traits::Float;

use crate::analysis::half_phase_difference;
use crate::array_model::ArrayConfig;
use crate::error::Error;
use crate::precoding::{check_subset_size, SplitRule};

/// Exact population moments of `β` over all plans.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactMoments {
    pub plans: usize,
    pub mean: Complex64,
    /// `E|β - E β|^2`.
    pub variance: f64,
    /// `E|β - E β|^4`, used for standard errors of the sample variance.
    pub fourth_moment: f64,
}

impl ExactMoments {
    /// Standard error of a `k`-sample complex mean (both components).
    pub fn mean_standard_error(&self, k: usize) -> f64 {
        (self.variance / k as f64).sqrt()
    }

    /// Standard error of a `k`-sample population variance.
    pub fn variance_standard_error(&self, k: usize) -> f64 {
        ((self.fourth_moment - self.variance * self.variance) / k as f64).sqrt()
    }
}

/// Lexicographic `k`-combinations of `0..n`.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Self { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every sign pattern `W` (one `±1` per antenna) the sampler can produce,
/// each listed once per equally likely plan.
pub fn sign_patterns(n_t: usize, m: usize, rule: SplitRule) -> Result<Vec<Vec<i8>>, Error> {
    check_subset_size(n_t, m)?;
    let l = n_t - m;
    let mut patterns = Vec::new();
    for subset in Combinations::new(n_t, m) {
        let mut in_subset = alloc::vec![false; n_t];
        for &n in &subset {
            in_subset[n] = true;
        }
        let remainder: Vec<usize> = (0..n_t).filter(|&n| !in_subset[n]).collect();
        match rule {
            SplitRule::SortedAlternation => {
                let mut w = alloc::vec![1i8; n_t];
                for &n in remainder.iter().skip(1).step_by(2) {
                    w[n] = -1;
                }
                patterns.push(w);
            }
            SplitRule::RandomHalves => {
                for inverted in Combinations::new(l, l / 2) {
                    let mut w = alloc::vec![1i8; n_t];
                    for pos in inverted {
                        w[remainder[pos]] = -1;
                    }
                    patterns.push(w);
                }
            }
        }
    }
    Ok(patterns)
}

/// `β = N_T^{-1/2} Σ_n W_n exp(j 2 ((N_T-1)/2 - n) u)` for one sign pattern.
pub fn beta_for_signs(signs: &[i8], u: f64) -> Complex64 {
    let n = signs.len() as f64;
    let sum: Complex64 = signs
        .iter()
        .enumerate()
        .map(|(k, &w)| Complex64::cis(2.0 * ((n - 1.0) / 2.0 - k as f64) * u) * f64::from(w))
        .sum();
    sum / n.sqrt()
}

/// Exact moments of `β` observed at `theta_e_deg` for a beam steered at
/// `theta_r_deg`. Cost grows as `C(N_T, M) · C(L, L/2)`, so keep `N_T` small.
pub fn enumerate_beta(
    cfg: &ArrayConfig,
    m: usize,
    rule: SplitRule,
    theta_r_deg: f64,
    theta_e_deg: f64,
) -> Result<ExactMoments, Error> {
    let u = half_phase_difference(cfg, theta_r_deg, theta_e_deg);
    let values: Vec<Complex64> = sign_patterns(cfg.n_t(), m, rule)?
        .iter()
        .map(|w| beta_for_signs(w, u))
        .collect();
    let count = values.len() as f64;
    let mean = values.iter().sum::<Complex64>() / count;
    let mut variance = 0.0;
    let mut fourth = 0.0;
    for v in &values {
        let d2 = (v - mean).norm_sqr();
        variance += d2;
        fourth += d2 * d2;
    }
    Ok(ExactMoments {
        plans: values.len(),
        mean,
        variance: variance / count,
        fourth_moment: fourth / count,
    })
}
