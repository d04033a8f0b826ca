//! Closed-form predictions for the random-subset transmitter.
//!
//! At the eavesdropper the effective gain is the random variable
//! `β = N_T^{-1/2} Σ_n W_n exp(j ((N_T-1)/2 - n) 2π(d/λ)(cos θ_R - cos θ_E))`
//! with `W_n = ±1`. Its mean is a scaled Dirichlet kernel and its variance is
//! approximated by `(N_T^2 - M^2) / N_T^2`, treating the signs as
//! independent. The SNRs below are linear; convert with
//! [`crate::units`] only at the reporting boundary.

use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent f64 methods whenever std is linked
use num_traits::Float;

use crate::array_model::{ArrayConfig, LinkParams, Scenario};

/// Below this `|sin u|` the Dirichlet ratio switches to its analytic limit.
pub const DIRICHLET_LIMIT_THRESHOLD: f64 = 1e-9;

/// Mean and variance of the artificial-noise gain `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaStats {
    pub mean: f64,
    pub variance: f64,
}

/// Receiver SNR, eavesdropper SINR and the resulting secrecy throughput.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyReport {
    pub gamma_r: f64,
    pub gamma_e: f64,
    pub r_bits: f64,
}

impl SecrecyReport {
    pub fn new(gamma_r: f64, gamma_e: f64) -> Self {
        Self {
            gamma_r,
            gamma_e,
            r_bits: secrecy_throughput(gamma_r, gamma_e),
        }
    }
}

/// Half the inter-element phase difference between the two directions,
/// `u = π (d/λ) (cos θ_R - cos θ_E)`.
pub fn half_phase_difference(cfg: &ArrayConfig, theta_r_deg: f64, theta_e_deg: f64) -> f64 {
    PI * cfg.d_over_lambda() * (theta_r_deg.to_radians().cos() - theta_e_deg.to_radians().cos())
}

/// `sin(N_T u) / sin(u)`, continuous through `u = kπ` where it equals
/// `N_T (-1)^{k (N_T - 1)}`.
pub fn dirichlet_kernel(cfg: &ArrayConfig, theta_r_deg: f64, theta_e_deg: f64) -> f64 {
    dirichlet_ratio(cfg.n_t(), half_phase_difference(cfg, theta_r_deg, theta_e_deg))
}

pub fn dirichlet_ratio(n: usize, u: f64) -> f64 {
    let s = u.sin();
    if s.abs() < DIRICHLET_LIMIT_THRESHOLD {
        let k = (u / PI).round() as i64;
        let odd = (k * (n as i64 - 1)).rem_euclid(2) == 1;
        let limit = n as f64;
        if odd {
            -limit
        } else {
            limit
        }
    } else {
        (n as f64 * u).sin() / s
    }
}

/// `E[β] = M / (N_T sqrt(N_T)) · D_{N_T}(u)`.
pub fn expected_beta(cfg: &ArrayConfig, m: usize, theta_r_deg: f64, theta_e_deg: f64) -> f64 {
    let n = cfg.n_t() as f64;
    m as f64 / (n * n.sqrt()) * dirichlet_kernel(cfg, theta_r_deg, theta_e_deg)
}

/// `var[β] ≈ (N_T^2 - M^2) / N_T^2`, independent of angle.
pub fn var_beta(cfg: &ArrayConfig, m: usize) -> f64 {
    let n = cfg.n_t() as f64;
    let m = m as f64;
    (n * n - m * m) / (n * n)
}

pub fn beta_stats(cfg: &ArrayConfig, m: usize, theta_r_deg: f64, theta_e_deg: f64) -> BetaStats {
    BetaStats {
        mean: expected_beta(cfg, m, theta_r_deg, theta_e_deg),
        variance: var_beta(cfg, m),
    }
}

/// `γ_R = P α |g_R|^2 N_R M^2 / (N_T σ^2)`.
pub fn gamma_receiver(scenario: &Scenario, m: usize) -> f64 {
    let link = &scenario.receiver;
    let m = m as f64;
    link.signal_scale() * m * m / (scenario.array.n_t() as f64 * link.noise_power_w)
}

/// Eavesdropper SINR with the artificial noise treated as Gaussian:
/// `γ_E = E[β]^2 / (var[β] + σ_E^2 / (P α_E |g_E|^2 N_E))`.
pub fn gamma_eavesdropper(scenario: &Scenario, m: usize) -> f64 {
    let eve = &scenario.eavesdropper;
    let stats = beta_stats(&scenario.array, m, scenario.receiver.angle_deg, eve.angle_deg);
    let noise_term = eve.noise_power_w / eve.signal_scale();
    stats.mean * stats.mean / (stats.variance + noise_term)
}

/// `[log2(1 + γ_R) - log2(1 + γ_E)]^+` in bits per channel use.
///
/// # Panics
///
/// Panics if either SNR is negative or NaN.
pub fn secrecy_throughput(gamma_r: f64, gamma_e: f64) -> f64 {
    assert!(gamma_r >= 0.0 && gamma_e >= 0.0, "SNRs must be non-negative, got {gamma_r} and {gamma_e}");
    let r = gamma_r.ln_1p() / core::f64::consts::LN_2 - gamma_e.ln_1p() / core::f64::consts::LN_2;
    r.max(0.0)
}

pub fn secrecy_throughput_closed_form(scenario: &Scenario, m: usize) -> SecrecyReport {
    SecrecyReport::new(gamma_receiver(scenario, m), gamma_eavesdropper(scenario, m))
}

/// Deterministic amplitude gains of the conventional array at the receiver
/// (`sqrt(N_T)`) and at the eavesdropper (`|D_{N_T}(u)| / sqrt(N_T)`).
pub fn conventional_gains(cfg: &ArrayConfig, theta_r_deg: f64, theta_e_deg: f64) -> (f64, f64) {
    let root_n = (cfg.n_t() as f64).sqrt();
    (root_n, dirichlet_kernel(cfg, theta_r_deg, theta_e_deg).abs() / root_n)
}

/// Noise-limited SNR of a deterministic amplitude gain.
pub fn deterministic_snr(amplitude: f64, link: &LinkParams) -> f64 {
    link.signal_scale() * amplitude * amplitude / link.noise_power_w
}

pub fn conventional_secrecy(scenario: &Scenario) -> SecrecyReport {
    let (g_r, g_e) = conventional_gains(&scenario.array, scenario.receiver.angle_deg, scenario.eavesdropper.angle_deg);
    SecrecyReport::new(
        deterministic_snr(g_r, &scenario.receiver),
        deterministic_snr(g_e, &scenario.eavesdropper),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array_model::{free_space_path_loss, LinkParams};
    use crate::units::{dbm_to_watts, thermal_noise_dbm, wavelength_from_frequency};
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn cfg(n_t: usize) -> ArrayConfig {
        ArrayConfig::new(n_t, 0.5, 0.005).unwrap()
    }

    fn default_scenario(theta_e: f64) -> Scenario {
        let lambda = wavelength_from_frequency(60e9);
        let p = dbm_to_watts(37.0);
        let noise = dbm_to_watts(thermal_noise_dbm(50e6));
        let rx = LinkParams::new(100.0, p, free_space_path_loss(30.0, lambda, 2.0).unwrap(), 8.0, noise).unwrap();
        let eve = LinkParams::new(theta_e, p, free_space_path_loss(10.0, lambda, 2.0).unwrap(), 32.0, noise).unwrap();
        Scenario::new(ArrayConfig::new(32, 0.5, lambda).unwrap(), rx, eve).unwrap()
    }

    fn phasor_sum(n: usize, u: f64) -> f64 {
        let s: Complex64 = (0..n)
            .map(|k| Complex64::cis(2.0 * ((n as f64 - 1.0) / 2.0 - k as f64) * u))
            .sum();
        assert!(s.im.abs() < 1e-9);
        s.re
    }

    #[test]
    fn kernel_limits() {
        assert_eq!(dirichlet_kernel(&cfg(32), 100.0, 100.0), 32.0);
        assert_eq!(dirichlet_ratio(32, PI), -32.0);
        assert_eq!(dirichlet_ratio(33, PI), 33.0);
        assert_eq!(dirichlet_ratio(32, -PI), -32.0);
        for u in [0.1, 0.7, 1.3] {
            assert!((dirichlet_ratio(2, u) - 2.0 * u.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_matches_brute_force_sum() {
        let c = cfg(32);
        let u = half_phase_difference(&c, 100.0, 95.0);
        let brute = phasor_sum(32, u);
        assert!((dirichlet_kernel(&c, 100.0, 95.0) - brute).abs() < 1e-9);
        assert!((brute - (-6.897_245_129_003_507)).abs() < 1e-9);
    }

    #[test]
    fn kernel_continuous_through_singularities() {
        for n in [5, 8, 32] {
            for centre in [0.0, PI, -PI] {
                let at = dirichlet_ratio(n, centre);
                for eps in [1e-7, -1e-7] {
                    assert!((dirichlet_ratio(n, centre + eps) - at).abs() < 1e-4);
                }
            }
        }
    }

    #[test]
    fn beta_mean_values() {
        let c = cfg(32);
        assert!((expected_beta(&c, 24, 100.0, 100.0) - 24.0 / 32f64.sqrt()).abs() < 1e-12);
        assert_eq!(expected_beta(&c, 0, 100.0, 95.0), 0.0);
        assert!((expected_beta(&c, 24, 100.0, 95.0) - (-0.914_454_150_417_049_4)).abs() < 1e-12);
    }

    #[test]
    fn beta_variance_values() {
        assert_eq!(var_beta(&cfg(32), 32), 0.0);
        assert_eq!(var_beta(&cfg(32), 24), 0.4375);
        assert_eq!(var_beta(&cfg(8), 4), 0.75);
    }

    #[test]
    fn receiver_snr_regression() {
        let s = default_scenario(95.0);
        let g = gamma_receiver(&s, 24);
        assert!((g / 636_896.929_823_866_8 - 1.0).abs() < 1e-12, "{g}");
        assert!((gamma_receiver(&s, 12) * 4.0 / g - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eavesdropper_sinr_regression() {
        let s = default_scenario(95.0);
        let g = gamma_eavesdropper(&s, 24);
        assert!((g / 1.911_371_183_270_446 - 1.0).abs() < 1e-10, "{g}");
        let r = secrecy_throughput_closed_form(&s, 24);
        assert!((r.r_bits - 17.739_003_870_464_98).abs() < 1e-9);
    }

    #[test]
    fn interference_limited_eavesdropper() {
        let mut s = default_scenario(100.0);
        s.eavesdropper.noise_power_w = 1e-300;
        let (n, m) = (32.0, 24.0);
        let expected = m * m * n / (n * n - m * m);
        assert!((gamma_eavesdropper(&s, 24) / expected - 1.0).abs() < 1e-12);
        // Power independence in this regime.
        s.eavesdropper.tx_power_w *= 100.0;
        assert!((gamma_eavesdropper(&s, 24) / expected - 1.0).abs() < 1e-12);
    }

    #[test]
    fn full_subset_is_noise_limited() {
        let s = default_scenario(95.0);
        let mean = expected_beta(&s.array, 32, 100.0, 95.0);
        let noise_limited = deterministic_snr(mean, &s.eavesdropper);
        assert!((gamma_eavesdropper(&s, 32) / noise_limited - 1.0).abs() < 1e-12);
    }

    #[test]
    fn throughput_clamp() {
        assert_eq!(secrecy_throughput(5.0, 5.0), 0.0);
        assert!((secrecy_throughput(3.0, 0.0) - 2.0).abs() < 1e-15);
        assert_eq!(secrecy_throughput(1.0, 9.0), 0.0);
    }

    #[test]
    #[should_panic(expected = "non-negative")]
    fn throughput_rejects_negative() {
        secrecy_throughput(-1.0, 0.0);
    }

    #[test]
    fn receiver_angle_is_the_worst_case() {
        let base = default_scenario(95.0);
        let at_receiver = secrecy_throughput_closed_form(&base.with_eavesdropper_angle(100.0).unwrap(), 24).r_bits;
        for i in 1..360 {
            let theta = i as f64 * 0.5;
            let r = secrecy_throughput_closed_form(&base.with_eavesdropper_angle(theta).unwrap(), 24).r_bits;
            assert!(r >= at_receiver, "{theta}: {r} < {at_receiver}");
        }
    }

    #[test]
    fn conventional_baseline() {
        let c = cfg(32);
        let (r, e) = conventional_gains(&c, 100.0, 100.0);
        assert!((r - 32f64.sqrt()).abs() < 1e-12 && (e - r).abs() < 1e-12);
        // First null: cos θ_E = cos θ_R - 2/N_T · (λ/2d).
        let null = (100f64.to_radians().cos() - 1.0 / 16.0).acos().to_degrees();
        assert!(conventional_gains(&c, 100.0, null).1 < 1e-9);
    }

    proptest! {
        #[test]
        fn kernel_even_in_direction(theta_r in 1.0f64..179.0, theta_e in 1.0f64..179.0) {
            let c = cfg(17);
            let u = half_phase_difference(&c, theta_r, theta_e);
            prop_assert!((dirichlet_ratio(17, u) - dirichlet_ratio(17, -u)).abs() < 1e-9);
            prop_assert!((dirichlet_kernel(&c, theta_r, theta_e) - dirichlet_kernel(&c, theta_e, theta_r)).abs() < 1e-9);
        }

        #[test]
        fn throughput_non_negative(gr in 0.0f64..1e9, ge in 0.0f64..1e9) {
            let r = secrecy_throughput(gr, ge);
            prop_assert!(r >= 0.0);
            prop_assert_eq!(r == 0.0, gr <= ge);
        }

        #[test]
        fn more_noise_hurts_eavesdropper(theta_e in 1.0f64..179.0, m_half in 1usize..15) {
            let s = default_scenario(theta_e);
            let m = 2 * m_half;
            let stats = beta_stats(&s.array, m, 100.0, theta_e);
            let noise = s.eavesdropper.noise_power_w / s.eavesdropper.signal_scale();
            let sinr = |var: f64| stats.mean * stats.mean / (var + noise);
            prop_assert!(sinr(stats.variance) >= sinr(stats.variance * 1.5));
            prop_assert!((sinr(stats.variance) - gamma_eavesdropper(&s, m)).abs() <= 1e-9 * sinr(stats.variance).max(1.0));
        }
    }
}
