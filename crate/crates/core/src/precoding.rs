//! Per-symbol beamforming weights.
//!
//! Three transmitters are modelled:
//!
//! * **proposed**: every antenna radiates. A random subset `I_M` and half of
//!   the remaining antennas (`E_L`) are co-phased toward the receiver; the
//!   other half (`O_L`) are phase-inverted. At the receiver the `E_L` and
//!   `O_L` contributions cancel exactly, leaving a deterministic gain of
//!   `M / sqrt(N_T)`.
//! * **switched**: only a random subset of `M` antennas radiates, co-phased,
//!   with the others idle.
//! * **conventional**: all antennas co-phased, no randomness.
//!
//! All weight vectors have unit Euclidean norm.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods whenever std is linked
use num_traits::Float;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::array_model::{steering_phase, steering_vector, ArrayConfig};
use crate::error::Error;

/// How the `N_T - M` idle antennas are split into the co-phased half `E_L`
/// and the inverted half `O_L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SplitRule {
    /// A uniformly random half of the remainder goes to `E_L`. Every antenna
    /// then carries a `+1` sign with probability `(N_T + M) / (2 N_T)`.
    #[default]
    RandomHalves,
    /// Sort the remainder ascending and alternate: positions 0, 2, 4, ... go
    /// to `E_L`, positions 1, 3, 5, ... to `O_L`. Deterministic given `I_M`,
    /// but the lowest idle index is always co-phased and the highest always
    /// inverted, which biases the per-antenna sign statistics.
    SortedAlternation,
}

/// Partition of the antennas for one symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPlan {
    n_t: usize,
    i_m: Vec<usize>,
    e_l: Vec<usize>,
    o_l: Vec<usize>,
}

impl SubsetPlan {
    /// Validates an explicit partition. The three lists must be disjoint,
    /// cover `0..n_t`, and `e_l` and `o_l` must have equal length.
    pub fn from_parts(
        n_t: usize,
        mut i_m: Vec<usize>,
        mut e_l: Vec<usize>,
        mut o_l: Vec<usize>,
    ) -> Result<Self, Error> {
        if i_m.is_empty() {
            return Err(Error::SubsetSize { m: 0, n_t });
        }
        if e_l.len() != o_l.len() {
            return Err(Error::InvalidIndices("e_l and o_l must have equal size"));
        }
        let mut seen = alloc::vec![false; n_t];
        for &n in i_m.iter().chain(&e_l).chain(&o_l) {
            match seen.get_mut(n) {
                None => return Err(Error::InvalidIndices("index out of range")),
                Some(true) => return Err(Error::InvalidIndices("index appears twice")),
                Some(slot) => *slot = true,
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidIndices("partition does not cover every antenna"));
        }
        i_m.sort_unstable();
        e_l.sort_unstable();
        o_l.sort_unstable();
        Ok(Self { n_t, i_m, e_l, o_l })
    }

    /// Builds the plan for a given transmit subset, splitting the remainder
    /// by [`SplitRule::SortedAlternation`].
    pub fn alternating(n_t: usize, i_m: Vec<usize>) -> Result<Self, Error> {
        check_subset_size(n_t, i_m.len())?;
        let mut in_subset = alloc::vec![false; n_t];
        for &n in &i_m {
            match in_subset.get_mut(n) {
                None => return Err(Error::InvalidIndices("index out of range")),
                Some(true) => return Err(Error::InvalidIndices("index appears twice")),
                Some(slot) => *slot = true,
            }
        }
        let remainder: Vec<usize> = (0..n_t).filter(|&n| !in_subset[n]).collect();
        let (e_l, o_l) = alternate(&remainder);
        Self::from_parts(n_t, i_m, e_l, o_l)
    }

    pub fn n_t(&self) -> usize {
        self.n_t
    }

    pub fn m(&self) -> usize {
        self.i_m.len()
    }

    pub fn i_m(&self) -> &[usize] {
        &self.i_m
    }

    pub fn e_l(&self) -> &[usize] {
        &self.e_l
    }

    pub fn o_l(&self) -> &[usize] {
        &self.o_l
    }

    /// Sign `W_n` applied to antenna `n`: `-1` on `O_L`, `+1` elsewhere.
    pub fn signs(&self) -> Vec<i8> {
        let mut w = alloc::vec![1i8; self.n_t];
        for &n in &self.o_l {
            w[n] = -1;
        }
        w
    }
}

fn alternate(sorted: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let e_l = sorted.iter().copied().step_by(2).collect();
    let o_l = sorted.iter().copied().skip(1).step_by(2).collect();
    (e_l, o_l)
}

/// Checks `1 <= m <= n_t` and that `n_t - m` is even.
pub fn check_subset_size(n_t: usize, m: usize) -> Result<(), Error> {
    if m == 0 || m > n_t {
        return Err(Error::SubsetSize { m, n_t });
    }
    if !(n_t - m).is_multiple_of(2) {
        return Err(Error::OddRemainder { m, n_t });
    }
    Ok(())
}

/// Draws a plan with the default [`SplitRule::RandomHalves`].
pub fn draw_subset<R: Rng + ?Sized>(cfg: &ArrayConfig, m: usize, rng: &mut R) -> Result<SubsetPlan, Error> {
    draw_subset_with(cfg, m, SplitRule::default(), rng)
}

/// Draws `I_M` as a uniformly random `m`-subset (partial Fisher-Yates over
/// the index range) and splits the remainder according to `rule`.
pub fn draw_subset_with<R: Rng + ?Sized>(
    cfg: &ArrayConfig,
    m: usize,
    rule: SplitRule,
    rng: &mut R,
) -> Result<SubsetPlan, Error> {
    let n_t = cfg.n_t();
    check_subset_size(n_t, m)?;
    let mut indices: Vec<usize> = (0..n_t).collect();
    let (chosen, rest) = indices.partial_shuffle(rng, m);
    let mut i_m = chosen.to_vec();
    i_m.sort_unstable();
    let (mut e_l, mut o_l) = match rule {
        SplitRule::RandomHalves => {
            let half = rest.len() / 2;
            let (e, o) = rest.partial_shuffle(rng, half);
            (e.to_vec(), o.to_vec())
        }
        SplitRule::SortedAlternation => {
            rest.sort_unstable();
            alternate(rest)
        }
    };
    e_l.sort_unstable();
    o_l.sort_unstable();
    Ok(SubsetPlan { n_t, i_m, e_l, o_l })
}

/// Uniformly random `m`-subset for the switched array, sorted ascending.
pub fn draw_switched_subset<R: Rng + ?Sized>(cfg: &ArrayConfig, m: usize, rng: &mut R) -> Result<Vec<usize>, Error> {
    if m == 0 || m > cfg.n_t() {
        return Err(Error::SubsetSize { m, n_t: cfg.n_t() });
    }
    let mut indices: Vec<usize> = (0..cfg.n_t()).collect();
    let (chosen, _) = indices.partial_shuffle(rng, m);
    let mut i_m = chosen.to_vec();
    i_m.sort_unstable();
    Ok(i_m)
}

/// Unit-norm complex transmit weights for one symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamVector {
    weights: Vec<Complex64>,
}

impl BeamVector {
    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.weights.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Beamformer steered at a fixed receiver angle. Caches the co-phasing
/// phasors `exp(j Ψ_n(θ_R))` so per-symbol weights only need sign flips
/// and masking.
#[derive(Debug, Clone)]
pub struct Precoder {
    cfg: ArrayConfig,
    cophase: Vec<Complex64>,
}

impl Precoder {
    pub fn new(cfg: &ArrayConfig, theta_r_deg: f64) -> Self {
        let cophase = (0..cfg.n_t())
            .map(|n| Complex64::cis(steering_phase(cfg, n, theta_r_deg)))
            .collect();
        Self { cfg: *cfg, cophase }
    }

    pub fn config(&self) -> &ArrayConfig {
        &self.cfg
    }

    /// # Panics
    ///
    /// Panics if the plan was built for a different array size.
    pub fn proposed(&self, plan: &SubsetPlan) -> BeamVector {
        assert_eq!(plan.n_t, self.cfg.n_t(), "subset plan does not match the array size");
        let scale = 1.0 / (self.cfg.n_t() as f64).sqrt();
        let mut weights: Vec<Complex64> = self.cophase.iter().map(|p| p * scale).collect();
        for &n in &plan.o_l {
            weights[n] = -weights[n];
        }
        BeamVector { weights }
    }

    pub fn conventional(&self) -> BeamVector {
        let scale = 1.0 / (self.cfg.n_t() as f64).sqrt();
        BeamVector {
            weights: self.cophase.iter().map(|p| p * scale).collect(),
        }
    }

    pub fn switched(&self, i_m: &[usize]) -> Result<BeamVector, Error> {
        let n_t = self.cfg.n_t();
        if i_m.is_empty() {
            return Err(Error::Empty("switched transmit subset"));
        }
        let mut active = alloc::vec![false; n_t];
        for &n in i_m {
            match active.get_mut(n) {
                None => return Err(Error::InvalidIndices("index out of range")),
                Some(true) => return Err(Error::InvalidIndices("index appears twice")),
                Some(slot) => *slot = true,
            }
        }
        let scale = 1.0 / (i_m.len() as f64).sqrt();
        let weights = self
            .cophase
            .iter()
            .zip(&active)
            .map(|(p, &on)| if on { p * scale } else { Complex64::new(0.0, 0.0) })
            .collect();
        Ok(BeamVector { weights })
    }
}

/// Proposed random-subset beam: `f_n = ±exp(j Ψ_n(θ_R)) / sqrt(N_T)` with
/// the minus sign on `O_L`.
pub fn proposed_beamformer(plan: &SubsetPlan, theta_r_deg: f64, cfg: &ArrayConfig) -> BeamVector {
    Precoder::new(cfg, theta_r_deg).proposed(plan)
}

/// All antennas co-phased toward `θ_R`.
pub fn conventional_beamformer(cfg: &ArrayConfig, theta_r_deg: f64) -> BeamVector {
    Precoder::new(cfg, theta_r_deg).conventional()
}

/// Only the antennas in `i_m` radiate, each with amplitude `1/sqrt(M)`.
pub fn switched_beamformer(i_m: &[usize], theta_r_deg: f64, cfg: &ArrayConfig) -> Result<BeamVector, Error> {
    Precoder::new(cfg, theta_r_deg).switched(i_m)
}

/// Complex beam gain `b(θ) = Σ_n exp(-j Ψ_n(θ)) f_n`.
///
/// # Panics
///
/// Panics if the beam length differs from `cfg.n_t()`.
pub fn effective_gain(beam: &BeamVector, theta_deg: f64, cfg: &ArrayConfig) -> Complex64 {
    assert_eq!(beam.len(), cfg.n_t(), "beam length does not match the array size");
    gain_against(beam, &steering_vector(cfg, theta_deg))
}

/// Effective gain against a precomputed steering row.
///
/// # Panics
///
/// Panics on a length mismatch.
pub fn gain_against(beam: &BeamVector, steering: &[Complex64]) -> Complex64 {
    assert_eq!(beam.len(), steering.len(), "beam length does not match the steering vector");
    steering.iter().zip(&beam.weights).map(|(h, f)| h * f).sum()
}
