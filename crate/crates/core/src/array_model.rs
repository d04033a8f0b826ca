//! Array geometry and channel primitives.
//!
//! Antennas are indexed `0..n_t` with the phase reference at the physical
//! centre of the array, so antenna `n` sits at offset `(n_t - 1) / 2 - n`
//! element spacings from the origin. All angles at this interface are
//! azimuth angles in degrees, measured from the array axis.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent f64 methods whenever std is linked
use num_traits::Float;

use crate::error::{check_positive, Error};

/// Transmit uniform linear array.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayConfig {
    n_t: usize,
    d_over_lambda: f64,
    wavelength_m: f64,
}

impl ArrayConfig {
    /// Builds a ULA with `n_t >= 2` elements spaced `d_over_lambda`
    /// wavelengths apart (`0 < d/λ <= 0.5`).
    pub fn new(n_t: usize, d_over_lambda: f64, wavelength_m: f64) -> Result<Self, Error> {
        if n_t < 2 {
            return Err(Error::TooFewAntennas(n_t));
        }
        if !(d_over_lambda > 0.0 && d_over_lambda <= 0.5) {
            return Err(Error::InvalidParameter {
                name: "d_over_lambda",
                value: d_over_lambda,
                expected: "a spacing in (0, 0.5]",
            });
        }
        check_positive("wavelength_m", wavelength_m)?;
        Ok(Self {
            n_t,
            d_over_lambda,
            wavelength_m,
        })
    }

    pub fn n_t(&self) -> usize {
        self.n_t
    }

    pub fn d_over_lambda(&self) -> f64 {
        self.d_over_lambda
    }

    pub fn wavelength_m(&self) -> f64 {
        self.wavelength_m
    }

    /// Offset of antenna `n` from the array centre, in element spacings.
    pub(crate) fn centre_offset(&self, n: usize) -> f64 {
        (self.n_t as f64 - 1.0) / 2.0 - n as f64
    }
}

/// Geometry of a two-ray (direct plus road reflection) link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoRayLink {
    pub h_t_m: f64,
    pub h_r_m: f64,
    pub distance_m: f64,
    pub path_loss_exponent: f64,
}

impl TwoRayLink {
    pub fn new(
        h_t_m: f64,
        h_r_m: f64,
        distance_m: f64,
        path_loss_exponent: f64,
    ) -> Result<Self, Error> {
        check_positive("h_t_m", h_t_m)?;
        check_positive("h_r_m", h_r_m)?;
        check_positive("distance_m", distance_m)?;
        if !(path_loss_exponent >= 2.0 && path_loss_exponent.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "path_loss_exponent",
                value: path_loss_exponent,
                expected: "a finite exponent >= 2",
            });
        }
        Ok(Self {
            h_t_m,
            h_r_m,
            distance_m,
            path_loss_exponent,
        })
    }

    /// True when the path-length difference `2 h_t h_r / D` exceeds one
    /// wavelength, i.e. the geometry is outside the small-angle regime the
    /// two-ray phase formula assumes.
    pub fn small_angle_warning(&self, wavelength_m: f64) -> bool {
        2.0 * self.h_t_m * self.h_r_m / self.distance_m > wavelength_m
    }
}

/// Per-endpoint link budget: direction, powers and gains, all linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkParams {
    pub angle_deg: f64,
    pub tx_power_w: f64,
    pub path_loss: f64,
    /// `|g|^2 * N`: two-ray power gain times the receive array gain.
    pub combined_rx_gain: f64,
    pub noise_power_w: f64,
}

impl LinkParams {
    pub fn new(
        angle_deg: f64,
        tx_power_w: f64,
        path_loss: f64,
        combined_rx_gain: f64,
        noise_power_w: f64,
    ) -> Result<Self, Error> {
        let link = Self {
            angle_deg,
            tx_power_w,
            path_loss,
            combined_rx_gain,
            noise_power_w,
        };
        link.validate()?;
        Ok(link)
    }

    pub fn validate(&self) -> Result<(), Error> {
        check_angle(self.angle_deg)?;
        check_positive("tx_power_w", self.tx_power_w)?;
        check_positive("path_loss", self.path_loss)?;
        check_positive("combined_rx_gain", self.combined_rx_gain)?;
        check_positive("noise_power_w", self.noise_power_w)?;
        Ok(())
    }

    /// `P * α * |g|^2 N`, the factor multiplying `|b(θ)|^2` in received power.
    pub fn signal_scale(&self) -> f64 {
        self.tx_power_w * self.path_loss * self.combined_rx_gain
    }

    pub fn with_angle(self, angle_deg: f64) -> Result<Self, Error> {
        check_angle(angle_deg)?;
        Ok(Self { angle_deg, ..self })
    }
}

/// Combined receive gain `|g|^2 * N` derived from two-ray geometry.
pub fn combined_gain_from_geometry(link: &TwoRayLink, wavelength_m: f64, array_gain: f64) -> Result<f64, Error> {
    let phi = two_ray_phase(link, wavelength_m)?;
    Ok(two_ray_power_gain(phi) * array_gain)
}

/// Transmit array plus the legitimate receiver and eavesdropper links.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub array: ArrayConfig,
    pub receiver: LinkParams,
    pub eavesdropper: LinkParams,
}

impl Scenario {
    pub fn new(array: ArrayConfig, receiver: LinkParams, eavesdropper: LinkParams) -> Result<Self, Error> {
        receiver.validate()?;
        eavesdropper.validate()?;
        Ok(Self {
            array,
            receiver,
            eavesdropper,
        })
    }

    /// Same scenario with the eavesdropper moved to `angle_deg`.
    pub fn with_eavesdropper_angle(&self, angle_deg: f64) -> Result<Self, Error> {
        Ok(Self {
            eavesdropper: self.eavesdropper.with_angle(angle_deg)?,
            ..*self
        })
    }
}

pub(crate) fn check_angle(angle_deg: f64) -> Result<f64, Error> {
    if angle_deg > 0.0 && angle_deg < 180.0 {
        Ok(angle_deg)
    } else {
        Err(Error::InvalidParameter {
            name: "angle_deg",
            value: angle_deg,
            expected: "an angle strictly inside (0, 180) degrees",
        })
    }
}

/// Progressive phase `Ψ_n = ((n_t-1)/2 - n) · 2π (d/λ) cos θ` in radians.
///
/// # Panics
///
/// Panics if `n >= cfg.n_t()`.
pub fn steering_phase(cfg: &ArrayConfig, n: usize, theta_deg: f64) -> f64 {
    assert!(n < cfg.n_t, "antenna index {n} out of range for {} antennas", cfg.n_t);
    cfg.centre_offset(n) * 2.0 * PI * cfg.d_over_lambda * theta_deg.to_radians().cos()
}

/// Row `h*(θ)` of the channel without the scalar two-ray gain: entry `n`
/// is `exp(-j Ψ_n(θ))`.
pub fn steering_vector(cfg: &ArrayConfig, theta_deg: f64) -> Vec<Complex64> {
    (0..cfg.n_t)
        .map(|n| Complex64::cis(-steering_phase(cfg, n, theta_deg)))
        .collect()
}

/// Phase difference between the direct and road-reflected rays,
/// `Φ = (2π/λ) · 2 h_t h_r / D`.
pub fn two_ray_phase(link: &TwoRayLink, wavelength_m: f64) -> Result<f64, Error> {
    check_positive("distance_m", link.distance_m)?;
    check_positive("wavelength_m", wavelength_m)?;
    Ok(2.0 * PI / wavelength_m * (2.0 * link.h_t_m * link.h_r_m / link.distance_m))
}

/// Two-ray power gain `|g|^2 = 2 sin^2(Φ/2)` for a reflection coefficient of -1.
pub fn two_ray_power_gain(phi_rad: f64) -> f64 {
    let s = (phi_rad / 2.0).sin();
    2.0 * s * s
}

/// Free-space path loss `α = (λ/4π)^2 · D^(-exponent)`.
pub fn free_space_path_loss(distance_m: f64, wavelength_m: f64, exponent: f64) -> Result<f64, Error> {
    check_positive("distance_m", distance_m)?;
    check_positive("wavelength_m", wavelength_m)?;
    let reference = wavelength_m / (4.0 * PI);
    Ok(reference * reference * distance_m.powf(-exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg(n_t: usize) -> ArrayConfig {
        ArrayConfig::new(n_t, 0.5, 0.005).unwrap()
    }

    #[test]
    fn rejects_bad_geometry() {
        assert_eq!(ArrayConfig::new(1, 0.5, 0.005), Err(Error::TooFewAntennas(1)));
        assert!(ArrayConfig::new(8, 0.6, 0.005).is_err());
        assert!(ArrayConfig::new(8, 0.0, 0.005).is_err());
        assert!(ArrayConfig::new(8, 0.5, -1.0).is_err());
    }

    #[test]
    fn broadside_phase_is_zero() {
        let c = cfg(32);
        assert!(steering_phase(&c, 0, 90.0).abs() < 1e-12);
        assert!(steering_vector(&c, 90.0)
            .iter()
            .all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn two_element_endfire() {
        let c = cfg(2);
        assert!((steering_phase(&c, 0, 0.0) - PI / 2.0).abs() < 1e-15);
        assert!((steering_phase(&c, 1, 0.0) + PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn phase_matches_high_precision_value() {
        // 10.5 π cos(100°), evaluated with 30-digit arithmetic.
        let psi = steering_phase(&cfg(32), 5, 100.0);
        assert!((psi - (-5.728_084_312_310_677)).abs() < 1e-12);
    }

    #[test]
    fn four_element_endfire_vector() {
        let v = steering_vector(&cfg(4), 0.0);
        // Exponents -Ψ_n of the entries exp(-j Ψ_n).
        let exponents = [-1.5 * PI, -0.5 * PI, 0.5 * PI, 1.5 * PI];
        for (z, arg) in v.iter().zip(exponents) {
            assert!((z - Complex64::cis(arg)).norm() < 1e-12);
        }
        let self_product: Complex64 = v.iter().map(|z| z.conj() * z).sum();
        assert!((self_product.re - 4.0).abs() < 1e-12 && self_product.im.abs() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn phase_index_out_of_range() {
        steering_phase(&cfg(4), 4, 30.0);
    }

    #[test]
    fn two_ray_phase_values() {
        let link = TwoRayLink::new(1.0, 1.0, 30.0, 2.0).unwrap();
        let phi = two_ray_phase(&link, 0.005).unwrap();
        assert!((phi - 83.775_804_095_727_82).abs() < 1e-9);
        let far = TwoRayLink { distance_m: 60.0, ..link };
        assert!((two_ray_phase(&far, 0.005).unwrap() - phi / 2.0).abs() < 1e-12);
        let low = TwoRayLink { h_t_m: 1e-12, ..link };
        assert!(two_ray_phase(&low, 0.005).unwrap() < 1e-9);
        let bad = TwoRayLink { distance_m: 0.0, ..link };
        assert!(two_ray_phase(&bad, 0.005).is_err());
        assert!(link.small_angle_warning(0.005));
        assert!(!TwoRayLink::new(0.01, 0.01, 30.0, 2.0).unwrap().small_angle_warning(0.005));
    }

    #[test]
    fn two_ray_gain_values() {
        assert_eq!(two_ray_power_gain(0.0), 0.0);
        assert!((two_ray_power_gain(PI) - 2.0).abs() < 1e-15);
        assert!((two_ray_power_gain(PI / 2.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn path_loss_values() {
        let a30 = free_space_path_loss(30.0, 0.005, 2.0).unwrap();
        assert!((a30 - 1.759_048_327_123_919_6e-10).abs() < 1e-22);
        let a10 = free_space_path_loss(10.0, 0.005, 2.0).unwrap();
        assert!((a10 / a30 - 9.0).abs() < 1e-12);
        let flat = free_space_path_loss(123.0, 0.005, 0.0).unwrap();
        assert!((flat - (0.005 / (4.0 * PI)).powi(2)).abs() < 1e-20);
        assert!(free_space_path_loss(0.0, 0.005, 2.0).is_err());
    }

    #[test]
    fn link_validation() {
        assert!(LinkParams::new(0.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LinkParams::new(180.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LinkParams::new(90.0, 1.0, 0.0, 1.0, 1.0).is_err());
        let ok = LinkParams::new(90.0, 2.0, 3.0, 4.0, 1.0).unwrap();
        assert_eq!(ok.signal_scale(), 24.0);
        let s = Scenario::new(cfg(8), ok, ok).unwrap();
        assert!(s.with_eavesdropper_angle(179.9).is_ok());
        assert!(s.with_eavesdropper_angle(-1.0).is_err());
    }

    #[test]
    fn geometry_gain() {
        // Φ = π gives the two-ray maximum of 2.
        let lambda = 0.005;
        let d = 4.0 * 1.0 * 1.0 / lambda;
        let link = TwoRayLink::new(1.0, 1.0, d, 2.0).unwrap();
        let g = combined_gain_from_geometry(&link, lambda, 4.0).unwrap();
        assert!((g - 8.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn steering_entries_have_unit_modulus(n_t in 2usize..64, dl in 0.01f64..=0.5, theta in 0.1f64..179.9) {
            let c = ArrayConfig::new(n_t, dl, 0.005).unwrap();
            for z in steering_vector(&c, theta) {
                prop_assert!((z.norm() - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn phases_antisymmetric_about_centre(n_t in 2usize..64, theta in 0.1f64..179.9) {
            let c = cfg(n_t);
            for n in 0..n_t {
                let sum = steering_phase(&c, n, theta) + steering_phase(&c, n_t - 1 - n, theta);
                prop_assert!(sum.abs() < 1e-12);
            }
        }

        #[test]
        fn two_ray_gain_bounded(phi in -1e4f64..1e4) {
            let g = two_ray_power_gain(phi);
            prop_assert!((0.0..=2.0).contains(&g));
        }

        #[test]
        fn path_loss_scales_with_exponent(d in 1.0f64..1e4, exponent in 0.0f64..6.0) {
            let ratio = free_space_path_loss(2.0 * d, 0.005, exponent).unwrap()
                / free_space_path_loss(d, 0.005, exponent).unwrap();
            prop_assert!((ratio - 2f64.powf(-exponent)).abs() < 1e-12);
        }
    }
}
