//! Monte Carlo estimation over per-symbol beam randomness.
//!
//! Symbols are fixed to `s(k) = 1` and additive noise is never sampled: the
//! empirical SNR combines the sample mean and variance of the effective gain
//! with the analytic noise power.
//!
//! # Seeding
//!
//! A run has one 64-bit master seed. Symbols of sweep point `p` are produced
//! in blocks of [`BLOCK_SYMBOLS`]; block `b` draws from ChaCha8 seeded with
//! the master seed on stream `(p << 32) | b` (see [`substream`]). Points and
//! blocks therefore never share random numbers, and results do not depend
//! on the order or parallelism in which points are evaluated. Two sample
//! requests with the same point index see the same beam sequence, which is
//! how one transmission is observed from several angles.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods whenever std is linked
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::analysis::{conventional_secrecy, secrecy_throughput, secrecy_throughput_closed_form};
use crate::array_model::{check_angle, steering_vector, LinkParams, Scenario};
use crate::error::Error;
use crate::precoding::{check_subset_size, draw_subset_with, draw_switched_subset, gain_against, Precoder, SplitRule};

/// Symbols per independently seeded block.
pub const BLOCK_SYMBOLS: usize = 4096;

/// Point index reserved for receiver-side samples shared by a whole sweep.
pub const RECEIVER_POINT: u32 = u32::MAX;

/// Transmission scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Scheme {
    #[default]
    Proposed,
    Switched,
    Conventional,
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::Proposed => "proposed",
            Scheme::Switched => "switched",
            Scheme::Conventional => "conventional",
        }
    }

    /// Checks that `m` is usable with this scheme on `n_t` antennas.
    pub fn check_subset(&self, n_t: usize, m: usize) -> Result<(), Error> {
        match self {
            Scheme::Proposed => check_subset_size(n_t, m),
            Scheme::Switched if m == 0 || m > n_t => Err(Error::SubsetSize { m, n_t }),
            Scheme::Switched | Scheme::Conventional => Ok(()),
        }
    }
}

/// Monte Carlo settings shared by every point of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarlo {
    pub scheme: Scheme,
    pub split: SplitRule,
    pub symbols: usize,
    pub seed: u64,
}

impl MonteCarlo {
    pub fn new(scheme: Scheme, symbols: usize, seed: u64) -> Self {
        Self {
            scheme,
            split: SplitRule::default(),
            symbols,
            seed,
        }
    }

    pub fn with_split(self, split: SplitRule) -> Self {
        Self { split, ..self }
    }
}

/// Random source for block `block` of sweep point `point`.
pub fn substream(seed: u64, point: u32, block: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(point) << 32) | u64::from(block));
    rng
}

/// Effective gains `b_k` observed at one angle, one per symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct GainSamples {
    pub angle_deg: f64,
    pub scheme: Scheme,
    pub samples: Vec<Complex64>,
    pub seed: u64,
    pub point: u32,
}

/// Draws `mc.symbols` fresh beams for sweep point `point` and records the
/// effective gain of each at `angle_deg`.
pub fn sample_gains(
    scenario: &Scenario,
    m: usize,
    angle_deg: f64,
    mc: &MonteCarlo,
    point: u32,
) -> Result<GainSamples, Error> {
    if mc.symbols == 0 {
        return Err(Error::Empty("symbol count"));
    }
    check_angle(angle_deg)?;
    let cfg = &scenario.array;
    mc.scheme.check_subset(cfg.n_t(), m)?;
    let precoder = Precoder::new(cfg, scenario.receiver.angle_deg);
    let steering = steering_vector(cfg, angle_deg);

    let mut samples = Vec::with_capacity(mc.symbols);
    if mc.scheme == Scheme::Conventional {
        let gain = gain_against(&precoder.conventional(), &steering);
        samples.resize(mc.symbols, gain);
    } else {
        let blocks = mc.symbols.div_ceil(BLOCK_SYMBOLS);
        for block in 0..blocks {
            let mut rng = substream(mc.seed, point, block as u32);
            let count = BLOCK_SYMBOLS.min(mc.symbols - block * BLOCK_SYMBOLS);
            for _ in 0..count {
                let beam = match mc.scheme {
                    Scheme::Proposed => precoder.proposed(&draw_subset_with(cfg, m, mc.split, &mut rng)?),
                    _ => precoder.switched(&draw_switched_subset(cfg, m, &mut rng)?)?,
                };
                samples.push(gain_against(&beam, &steering));
            }
        }
    }
    Ok(GainSamples {
        angle_deg,
        scheme: mc.scheme,
        samples,
        seed: mc.seed,
        point,
    })
}

/// Sample mean and population variance (divisor `K`) of complex gains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalStats {
    pub mean: Complex64,
    pub variance: f64,
    pub count: usize,
    /// Set when only one sample was available; `variance` is then 0.
    pub single_sample: bool,
}

impl EmpiricalStats {
    /// Standard error of the complex mean, `sqrt(variance / K)`.
    pub fn mean_standard_error(&self) -> f64 {
        (self.variance / self.count as f64).sqrt()
    }
}

/// Streaming (Welford) mean and variance.
pub fn empirical_stats(samples: &GainSamples) -> EmpiricalStats {
    stats_of(&samples.samples)
}

pub fn stats_of(values: &[Complex64]) -> EmpiricalStats {
    let mut mean = Complex64::new(0.0, 0.0);
    let mut m2 = 0.0;
    for (i, &x) in values.iter().enumerate() {
        let delta = x - mean;
        mean += delta / (i + 1) as f64;
        m2 += (delta * (x - mean).conj()).re;
    }
    let count = values.len();
    EmpiricalStats {
        mean,
        variance: if count > 1 { m2 / count as f64 } else { 0.0 },
        count,
        single_sample: count == 1,
    }
}

/// `γ = C |mean|^2 / (C · variance + σ^2)` with `C = P α |g|^2 N`.
pub fn empirical_snr(mean: Complex64, variance: f64, link: &LinkParams) -> f64 {
    let c = link.signal_scale();
    c * mean.norm_sqr() / (c * variance + link.noise_power_w)
}

/// One row of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Swept value: eavesdropper angle in degrees, or subset size `M`.
    pub x: f64,
    /// Closed-form throughput; `None` for the switched array, which has no
    /// closed form here.
    pub r_theory_bits: Option<f64>,
    pub r_empirical_bits: f64,
    /// Real part of the sample mean of `β`.
    pub beta_mean_emp: f64,
    pub beta_var_emp: f64,
}

/// Evaluates `count` independent points, returning results in input order.
pub trait Executor {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

/// Evaluates points one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Serial;

impl Executor for Serial {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..count).map(f).collect()
    }
}

fn point_index(i: usize) -> u32 {
    assert!(i < RECEIVER_POINT as usize, "too many sweep points");
    i as u32
}

fn theory_bits(scenario: &Scenario, m: usize, scheme: Scheme) -> Option<f64> {
    match scheme {
        Scheme::Proposed => Some(secrecy_throughput_closed_form(scenario, m).r_bits),
        Scheme::Conventional => Some(conventional_secrecy(scenario).r_bits),
        Scheme::Switched => None,
    }
}

fn eavesdropper_row(
    scenario: &Scenario,
    m: usize,
    x: f64,
    gamma_r: f64,
    mc: &MonteCarlo,
    point: u32,
) -> Result<SweepRow, Error> {
    let eve = &scenario.eavesdropper;
    let stats = empirical_stats(&sample_gains(scenario, m, eve.angle_deg, mc, point)?);
    let gamma_e = empirical_snr(stats.mean, stats.variance, eve);
    Ok(SweepRow {
        x,
        r_theory_bits: theory_bits(scenario, m, mc.scheme),
        r_empirical_bits: secrecy_throughput(gamma_r, gamma_e),
        beta_mean_emp: stats.mean.re,
        beta_var_emp: stats.variance,
    })
}

fn receiver_snr(scenario: &Scenario, m: usize, mc: &MonteCarlo, point: u32) -> Result<f64, Error> {
    let rx = &scenario.receiver;
    let stats = empirical_stats(&sample_gains(scenario, m, rx.angle_deg, mc, point)?);
    Ok(empirical_snr(stats.mean, stats.variance, rx))
}

/// Secrecy throughput versus eavesdropper angle. The receiver SNR is
/// estimated once, on [`RECEIVER_POINT`], and shared by every row.
pub fn sweep_eavesdropper_angle<E: Executor>(
    scenario: &Scenario,
    m: usize,
    angles: &[f64],
    mc: &MonteCarlo,
    exec: &E,
) -> Result<Vec<SweepRow>, Error> {
    if angles.is_empty() {
        return Err(Error::Empty("angle grid"));
    }
    let gamma_r = receiver_snr(scenario, m, mc, RECEIVER_POINT)?;
    exec.map_indexed(angles.len(), |i| {
        let at = scenario.with_eavesdropper_angle(angles[i])?;
        eavesdropper_row(&at, m, angles[i], gamma_r, mc, point_index(i))
    })
    .into_iter()
    .collect()
}

/// Rows of a subset-size sweep plus the sizes that were rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetSweep {
    pub rows: Vec<SweepRow>,
    pub skipped: Vec<(usize, Error)>,
}

/// Secrecy throughput versus subset size `M`. Both endpoints of row `i`
/// observe the same beam sequence (point `i`). Sizes that violate the
/// scheme's subset rule are skipped and reported.
pub fn sweep_subset_size<E: Executor>(
    scenario: &Scenario,
    m_values: &[usize],
    mc: &MonteCarlo,
    exec: &E,
) -> Result<SubsetSweep, Error> {
    if m_values.is_empty() {
        return Err(Error::Empty("subset-size grid"));
    }
    let n_t = scenario.array.n_t();
    let results = exec.map_indexed(m_values.len(), |i| {
        let m = m_values[i];
        mc.scheme.check_subset(n_t, m)?;
        let point = point_index(i);
        let gamma_r = receiver_snr(scenario, m, mc, point)?;
        eavesdropper_row(scenario, m, m as f64, gamma_r, mc, point)
    });
    let mut sweep = SubsetSweep {
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    for (m, result) in m_values.iter().zip(results) {
        match result {
            Ok(row) => sweep.rows.push(row),
            Err(e) => sweep.skipped.push((*m, e)),
        }
    }
    Ok(sweep)
}

/// Empirical variance of the effective gain at each angle.
pub fn beam_variance_profile<E: Executor>(
    scenario: &Scenario,
    m: usize,
    angles: &[f64],
    mc: &MonteCarlo,
    exec: &E,
) -> Result<Vec<(f64, f64)>, Error> {
    if angles.is_empty() {
        return Err(Error::Empty("angle grid"));
    }
    exec.map_indexed(angles.len(), |i| {
        let samples = sample_gains(scenario, m, angles[i], mc, point_index(i))?;
        Ok((angles[i], empirical_stats(&samples).variance))
    })
    .into_iter()
    .collect()
}

/// Angle grid `step, 2 step, ...` strictly inside (0, 180) degrees.
pub fn default_angle_grid(step_deg: f64) -> Vec<f64> {
    let count = (180.0 / step_deg).ceil() as usize;
    (1..count)
        .map(|i| i as f64 * step_deg)
        .filter(|&a| a > 0.0 && a < 180.0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::expected_beta;
    use crate::array_model::{free_space_path_loss, ArrayConfig};

    fn scenario(n_t: usize) -> Scenario {
        let rx = LinkParams::new(100.0, 5.0, free_space_path_loss(30.0, 0.005, 2.0).unwrap(), 8.0, 2e-13).unwrap();
        let eve = LinkParams::new(95.0, 5.0, free_space_path_loss(10.0, 0.005, 2.0).unwrap(), 32.0, 2e-13).unwrap();
        Scenario::new(ArrayConfig::new(n_t, 0.5, 0.005).unwrap(), rx, eve).unwrap()
    }

    #[test]
    fn stream_keys_are_distinct() {
        use rand::RngCore;
        let a = substream(1, 0, 0).next_u64();
        assert_ne!(a, substream(1, 0, 1).next_u64());
        assert_ne!(a, substream(1, 1, 0).next_u64());
        assert_ne!(a, substream(2, 0, 0).next_u64());
        assert_eq!(a, substream(1, 0, 0).next_u64());
    }

    #[test]
    fn stats_of_small_sets() {
        let c = Complex64::new(0.3, -1.2);
        let s = stats_of(&[c; 5]);
        assert!((s.mean - c).norm() < 1e-15 && s.variance.abs() < 1e-15);
        let s = stats_of(&[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        assert!(s.mean.norm() < 1e-15 && (s.variance - 1.0).abs() < 1e-15);
        let s = stats_of(&[c]);
        assert!(s.single_sample && s.variance == 0.0);
    }

    #[test]
    fn empirical_snr_limits() {
        let link = scenario(8).receiver;
        let mean = Complex64::new(2.0, 0.0);
        let noise_limited = link.signal_scale() * 4.0 / link.noise_power_w;
        assert!((empirical_snr(mean, 0.0, &link) / noise_limited - 1.0).abs() < 1e-12);
        assert_eq!(empirical_snr(Complex64::new(0.0, 0.0), 0.3, &link), 0.0);
    }

    #[test]
    fn proposed_receiver_samples_are_constant() {
        let s = scenario(32);
        let mc = MonteCarlo::new(Scheme::Proposed, 10_000, 11);
        let samples = sample_gains(&s, 24, 100.0, &mc, 0).unwrap();
        let target = 24.0 / 32f64.sqrt();
        assert!(samples.samples.iter().all(|b| (b.re - target).abs() < 1e-9 && b.im.abs() < 1e-9));
        assert!(empirical_stats(&samples).variance < 1e-18);
    }

    #[test]
    fn conventional_has_zero_variance() {
        let s = scenario(16);
        let mc = MonteCarlo::new(Scheme::Conventional, 100, 3);
        let st = empirical_stats(&sample_gains(&s, 16, 60.0, &mc, 0).unwrap());
        assert_eq!(st.variance, 0.0);
    }

    #[test]
    fn deterministic_given_seed_and_point() {
        let s = scenario(16);
        let mc = MonteCarlo::new(Scheme::Proposed, 5000, 77);
        let a = sample_gains(&s, 12, 70.0, &mc, 3).unwrap();
        assert_eq!(a, sample_gains(&s, 12, 70.0, &mc, 3).unwrap());
        assert_ne!(a.samples, sample_gains(&s, 12, 70.0, &mc, 4).unwrap().samples);
        assert_eq!(a.samples.len(), 5000);
    }

    #[test]
    fn rejects_bad_requests() {
        let s = scenario(32);
        let mc = MonteCarlo::new(Scheme::Proposed, 10, 0);
        assert!(sample_gains(&s, 23, 90.0, &mc, 0).is_err());
        assert!(sample_gains(&s, 24, 180.0, &mc, 0).is_err());
        let empty = MonteCarlo::new(Scheme::Proposed, 0, 0);
        assert!(sample_gains(&s, 24, 90.0, &empty, 0).is_err());
        assert!(sweep_eavesdropper_angle(&s, 24, &[], &mc, &Serial).is_err());
    }

    #[test]
    fn mean_tracks_lemma() {
        let s = scenario(32);
        let mc = MonteCarlo::new(Scheme::Proposed, 50_000, 2);
        let st = empirical_stats(&sample_gains(&s, 24, 95.0, &mc, 0).unwrap());
        let lemma = expected_beta(&s.array, 24, 100.0, 95.0);
        assert!((st.mean - Complex64::new(lemma, 0.0)).norm() < 4.0 * st.mean_standard_error());
    }

    #[test]
    fn subset_sweep_skips_odd_remainders() {
        let s = scenario(8);
        let mc = MonteCarlo::new(Scheme::Proposed, 200, 1);
        let sweep = sweep_subset_size(&s, &[2, 3, 4], &mc, &Serial).unwrap();
        assert_eq!(sweep.rows.len(), 2);
        assert_eq!(sweep.skipped, [(3, Error::OddRemainder { m: 3, n_t: 8 })]);
    }

    #[test]
    fn angle_grid() {
        let g = default_angle_grid(0.5);
        assert_eq!(g.len(), 359);
        assert_eq!(g[0], 0.5);
        assert_eq!(*g.last().unwrap(), 179.5);
        assert_eq!(default_angle_grid(45.0), [45.0, 90.0, 135.0]);
    }
}
