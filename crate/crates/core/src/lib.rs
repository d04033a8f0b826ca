//! Random antenna-subset beamforming for physical-layer-secure mmWave links.
//!
//! A transmitter with an `N_T`-element uniform linear array co-phases a
//! random subset of `M` antennas toward the legitimate receiver for every
//! symbol. The remaining `N_T - M` antennas are split into two equal halves,
//! one co-phased and one phase-inverted, so that they cancel exactly in the
//! receiver direction. Everywhere else the per-symbol reshuffle turns the
//! beam sidelobes into multiplicative noise.
//!
//! The crate is `no_std` (with `alloc`) and is organised as:
//!
//! * [`array_model`]: ULA steering phases, two-ray channel gain, path loss and
//!   the [`Scenario`](array_model::Scenario) container.
//! * [`precoding`]: subset plans and the proposed, switched and conventional
//!   beamformers, plus effective-gain evaluation.
//! * [`analysis`]: closed-form SNR, artificial-noise statistics and secrecy
//!   throughput.
//! * [`simulator`]: seeded Monte Carlo sampling and parameter sweeps.
//! * [`exhaustive`]: brute-force enumeration of every subset plan, used as an
//!   independent reference for the statistics above.
//!
//! ```
//! use mmsec_core::array_model::ArrayConfig;
//! use mmsec_core::precoding::{draw_subset, effective_gain, proposed_beamformer};
//! use rand::SeedableRng;
//!
//! let cfg = ArrayConfig::new(16, 0.5, 0.005).unwrap();
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let plan = draw_subset(&cfg, 12, &mut rng).unwrap();
//! let beam = proposed_beamformer(&plan, 100.0, &cfg);
//! let gain = effective_gain(&beam, 100.0, &cfg);
//! assert!((gain.re - 3.0).abs() < 1e-9 && gain.im.abs() < 1e-9);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod array_model;
mod error;
pub mod exhaustive;
pub mod precoding;
pub mod simulator;
pub mod units;

pub use error::Error;
pub use num_complex::Complex64;
