//! JSON run configuration.
//!
//! Every field is optional; omitted values fall back to the reference
//! vehicular setup: a 32-element half-wavelength ULA at 60 GHz, 50 MHz of
//! bandwidth, 37 dBm transmit power, receiver at 100° and 30 m with
//! `|g_R|^2 N_R = 8`, eavesdropper at 95° and 10 m with `|g_E|^2 N_E = 32`,
//! free-space path loss with exponent 2 and `M = 24`.
//!
//! Quantities given in decibels use `_db` / `_dbm` suffixed field names and
//! are converted to linear units at load time. Unknown fields are rejected.
//!
//! ```json
//! {
//!   "version": 1,
//!   "array": { "n_t": 32, "d_over_lambda": 0.5, "carrier_hz": 60e9 },
//!   "bandwidth_hz": 50e6,
//!   "tx_power_dbm": 37,
//!   "receiver": { "angle_deg": 100, "distance_m": 30, "combined_gain": 8 },
//!   "eavesdropper": { "angle_deg": 95, "distance_m": 10, "combined_gain": 32 },
//!   "scheme": "proposed",
//!   "split": "random-halves",
//!   "m": 24,
//!   "symbols": 100000,
//!   "seed": 1,
//!   "sweep": { "kind": "angle", "start": 0.5, "stop": 179.5, "step": 0.5 },
//!   "output": "fig3.csv"
//! }
//! ```

use std::fmt;
use std::path::{Path, PathBuf};

use mmsec_core::array_model::{
    combined_gain_from_geometry, free_space_path_loss, ArrayConfig, LinkParams, Scenario, TwoRayLink,
};
use mmsec_core::precoding::SplitRule;
use mmsec_core::simulator::{default_angle_grid, MonteCarlo, Scheme};
use mmsec_core::units::{db_to_linear, dbm_to_watts, thermal_noise_dbm, wavelength_from_frequency};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_N_T: usize = 32;
pub const DEFAULT_M: usize = 24;
pub const DEFAULT_CARRIER_HZ: f64 = 60e9;
pub const DEFAULT_BANDWIDTH_HZ: f64 = 50e6;
pub const DEFAULT_TX_POWER_DBM: f64 = 37.0;
pub const DEFAULT_PATH_LOSS_EXPONENT: f64 = 2.0;
pub const DEFAULT_RECEIVER_ANGLE_DEG: f64 = 100.0;
pub const DEFAULT_RECEIVER_DISTANCE_M: f64 = 30.0;
pub const DEFAULT_RECEIVER_GAIN: f64 = 8.0;
pub const DEFAULT_EAVESDROPPER_ANGLE_DEG: f64 = 95.0;
pub const DEFAULT_EAVESDROPPER_DISTANCE_M: f64 = 10.0;
pub const DEFAULT_EAVESDROPPER_GAIN: f64 = 32.0;
pub const DEFAULT_SYMBOLS: usize = 100_000;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_ANGLE_STEP_DEG: f64 = 0.5;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed configuration: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: &str, message: impl fmt::Display) -> ConfigError {
    ConfigError::Field {
        field: field.to_owned(),
        message: message.to_string(),
    }
}

/// Raw file contents, before defaults and unit conversion.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub version: Option<u32>,
    pub array: Option<ArraySection>,
    pub bandwidth_hz: Option<f64>,
    pub tx_power_w: Option<f64>,
    pub tx_power_dbm: Option<f64>,
    pub receiver: Option<LinkSection>,
    pub eavesdropper: Option<LinkSection>,
    pub scheme: Option<SchemeName>,
    pub split: Option<SplitName>,
    pub m: Option<usize>,
    pub symbols: Option<usize>,
    pub seed: Option<u64>,
    pub sweep: Option<SweepSection>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArraySection {
    pub n_t: Option<usize>,
    pub d_over_lambda: Option<f64>,
    pub carrier_hz: Option<f64>,
    pub wavelength_m: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSection {
    pub angle_deg: Option<f64>,
    pub distance_m: Option<f64>,
    pub path_loss_exponent: Option<f64>,
    /// Linear path loss `α`; overrides the free-space model.
    pub path_loss: Option<f64>,
    /// Path loss as a positive attenuation in dB.
    pub path_loss_db: Option<f64>,
    /// `|g|^2 N`, linear.
    pub combined_gain: Option<f64>,
    pub combined_gain_db: Option<f64>,
    /// Derive `|g|^2` from antenna heights when no combined gain is given.
    pub two_ray: Option<TwoRaySection>,
    pub noise_power_w: Option<f64>,
    pub noise_power_dbm: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoRaySection {
    pub h_t_m: f64,
    pub h_r_m: f64,
    /// Receive array gain `N`.
    pub array_gain: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeName {
    Proposed,
    Switched,
    Conventional,
}

impl From<SchemeName> for Scheme {
    fn from(s: SchemeName) -> Self {
        match s {
            SchemeName::Proposed => Scheme::Proposed,
            SchemeName::Switched => Scheme::Switched,
            SchemeName::Conventional => Scheme::Conventional,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitName {
    RandomHalves,
    SortedAlternation,
}

impl From<SplitName> for SplitRule {
    fn from(s: SplitName) -> Self {
        match s {
            SplitName::RandomHalves => SplitRule::RandomHalves,
            SplitName::SortedAlternation => SplitRule::SortedAlternation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Angle,
    SubsetSize,
    VarianceProfile,
    SinglePoint,
}

impl SweepKind {
    pub fn name(&self) -> &'static str {
        match self {
            SweepKind::Angle => "angle",
            SweepKind::SubsetSize => "subset-size",
            SweepKind::VarianceProfile => "variance-profile",
            SweepKind::SinglePoint => "single-point",
        }
    }
}

/// Sweep grid: either an explicit list or `start..=stop` by `step`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub kind: Option<SweepKind>,
    pub grid: Option<Vec<f64>>,
    pub start: Option<f64>,
    pub stop: Option<f64>,
    pub step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub kind: SweepKind,
    pub grid: Vec<f64>,
}

/// Fully resolved and validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub scheme: Scheme,
    pub split: SplitRule,
    pub m: usize,
    pub symbols: usize,
    pub seed: u64,
    pub sweep: SweepSpec,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn monte_carlo(&self) -> MonteCarlo {
        MonteCarlo::new(self.scheme, self.symbols, self.seed).with_split(self.split)
    }

    /// Switches to another sweep kind, replacing the grid with that kind's
    /// default.
    pub fn with_kind(mut self, kind: SweepKind) -> Self {
        if self.sweep.kind != kind {
            self.sweep = SweepSpec {
                kind,
                grid: default_grid(kind, &self.scenario),
            };
        }
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.symbols == 0 {
            return Err(field_error("symbols", "must be at least 1"));
        }
        if self.sweep.grid.is_empty() {
            return Err(field_error("sweep.grid", "must not be empty"));
        }
        self.scheme
            .check_subset(self.scenario.array.n_t(), self.m)
            .map_err(|e| field_error("m", e))?;
        match self.sweep.kind {
            SweepKind::SubsetSize => {
                if let Some(bad) = self.sweep.grid.iter().find(|m| m.fract() != 0.0 || **m < 1.0) {
                    return Err(field_error("sweep.grid", format!("subset sizes must be positive integers, got {bad}")));
                }
            }
            _ => {
                if let Some(bad) = self.sweep.grid.iter().find(|a| !(**a > 0.0 && **a < 180.0)) {
                    return Err(field_error("sweep.grid", format!("angles must lie strictly inside (0, 180), got {bad}")));
                }
            }
        }
        Ok(())
    }

    /// SHA-256 over a canonical JSON rendering of everything that affects
    /// the output (the output path excluded).
    pub fn digest(&self) -> String {
        let s = &self.scenario;
        let link = |l: &LinkParams| {
            serde_json::json!({
                "angle_deg": l.angle_deg,
                "tx_power_w": l.tx_power_w,
                "path_loss": l.path_loss,
                "combined_rx_gain": l.combined_rx_gain,
                "noise_power_w": l.noise_power_w,
            })
        };
        let canonical = serde_json::json!({
            "version": SCHEMA_VERSION,
            "array": {
                "n_t": s.array.n_t(),
                "d_over_lambda": s.array.d_over_lambda(),
                "wavelength_m": s.array.wavelength_m(),
            },
            "receiver": link(&s.receiver),
            "eavesdropper": link(&s.eavesdropper),
            "scheme": self.scheme.name(),
            "split": split_name(self.split),
            "m": self.m,
            "symbols": self.symbols,
            "seed": self.seed,
            "sweep": self.sweep,
        });
        let digest = Sha256::digest(canonical.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn split_name(split: SplitRule) -> &'static str {
    match split {
        SplitRule::RandomHalves => "random-halves",
        SplitRule::SortedAlternation => "sorted-alternation",
    }
}

pub fn default_grid(kind: SweepKind, scenario: &Scenario) -> Vec<f64> {
    match kind {
        SweepKind::Angle | SweepKind::VarianceProfile => default_angle_grid(DEFAULT_ANGLE_STEP_DEG),
        SweepKind::SubsetSize => {
            let n_t = scenario.array.n_t();
            (1..)
                .map(|i| 4 * i)
                .take_while(|&m| m < n_t)
                .map(|m| m as f64)
                .collect()
        }
        SweepKind::SinglePoint => vec![scenario.eavesdropper.angle_deg],
    }
}

/// Reads and validates a configuration file.
pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_config(&text)
}

/// Parses configuration text; an empty or all-whitespace document yields
/// the defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let file: ConfigFile = if text.trim().is_empty() {
        ConfigFile::default()
    } else {
        serde_json::from_str(text)?
    };
    resolve(file)
}

fn exclusive<T: Copy>(field_a: &str, a: Option<T>, field_b: &str, b: Option<T>) -> Result<Option<Result<T, T>>, ConfigError> {
    match (a, b) {
        (Some(_), Some(_)) => Err(field_error(field_b, format!("conflicts with `{field_a}`; give only one"))),
        (Some(x), None) => Ok(Some(Ok(x))),
        (None, Some(y)) => Ok(Some(Err(y))),
        (None, None) => Ok(None),
    }
}

fn positive(field: &str, value: f64) -> Result<f64, ConfigError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(field_error(field, format!("must be a finite positive number, got {value}")))
    }
}

struct LinkDefaults {
    prefix: &'static str,
    angle_deg: f64,
    distance_m: f64,
    combined_gain: f64,
}

fn resolve_link(
    section: Option<LinkSection>,
    defaults: LinkDefaults,
    tx_power_w: f64,
    wavelength_m: f64,
    fallback_noise_w: f64,
) -> Result<LinkParams, ConfigError> {
    let s = section.unwrap_or_default();
    let p = defaults.prefix;
    let f = |name: &str| format!("{p}.{name}");

    let angle_deg = s.angle_deg.unwrap_or(defaults.angle_deg);
    let exponent = s.path_loss_exponent.unwrap_or(DEFAULT_PATH_LOSS_EXPONENT);
    let distance_m = positive(&f("distance_m"), s.distance_m.unwrap_or(defaults.distance_m))?;
    if !(exponent.is_finite() && exponent >= 0.0) {
        return Err(field_error(&f("path_loss_exponent"), format!("must be a finite value >= 0, got {exponent}")));
    }

    let path_loss = match exclusive(&f("path_loss"), s.path_loss, &f("path_loss_db"), s.path_loss_db)? {
        Some(Ok(linear)) => positive(&f("path_loss"), linear)?,
        Some(Err(db)) => db_to_linear(-db),
        None => free_space_path_loss(distance_m, wavelength_m, exponent).map_err(|e| field_error(&f("distance_m"), e))?,
    };

    let combined_gain = match exclusive(&f("combined_gain"), s.combined_gain, &f("combined_gain_db"), s.combined_gain_db)? {
        Some(Ok(linear)) => positive(&f("combined_gain"), linear)?,
        Some(Err(db)) => db_to_linear(db),
        None => match &s.two_ray {
            Some(tr) => {
                let geometry = TwoRayLink::new(tr.h_t_m, tr.h_r_m, distance_m, exponent.max(2.0))
                    .map_err(|e| field_error(&f("two_ray"), e))?;
                let gain = combined_gain_from_geometry(&geometry, wavelength_m, positive(&f("two_ray.array_gain"), tr.array_gain)?)
                    .map_err(|e| field_error(&f("two_ray"), e))?;
                if geometry.small_angle_warning(wavelength_m) {
                    log_warning(&format!(
                        "{p}: 2 h_t h_r / D exceeds one wavelength; the two-ray phase is outside its small-angle regime"
                    ));
                }
                positive(&f("two_ray"), gain)?
            }
            None => defaults.combined_gain,
        },
    };

    let noise_power_w = match exclusive(&f("noise_power_w"), s.noise_power_w, &f("noise_power_dbm"), s.noise_power_dbm)? {
        Some(Ok(w)) => positive(&f("noise_power_w"), w)?,
        Some(Err(dbm)) => dbm_to_watts(dbm),
        None => fallback_noise_w,
    };

    LinkParams::new(angle_deg, tx_power_w, path_loss, combined_gain, noise_power_w).map_err(|e| field_error(p, e))
}

fn log_warning(message: &str) {
    eprintln!("warning: {message}");
}

fn resolve(file: ConfigFile) -> Result<RunConfig, ConfigError> {
    if let Some(v) = file.version {
        if v != SCHEMA_VERSION {
            return Err(field_error("version", format!("unsupported schema version {v}; expected {SCHEMA_VERSION}")));
        }
    }
    let array = file.array.unwrap_or_default();
    let wavelength_m = match exclusive("array.carrier_hz", array.carrier_hz, "array.wavelength_m", array.wavelength_m)? {
        Some(Ok(hz)) => wavelength_from_frequency(positive("array.carrier_hz", hz)?),
        Some(Err(w)) => positive("array.wavelength_m", w)?,
        None => wavelength_from_frequency(DEFAULT_CARRIER_HZ),
    };
    let n_t = array.n_t.unwrap_or(DEFAULT_N_T);
    let cfg = ArrayConfig::new(n_t, array.d_over_lambda.unwrap_or(0.5), wavelength_m).map_err(|e| field_error("array", e))?;

    let bandwidth_hz = positive("bandwidth_hz", file.bandwidth_hz.unwrap_or(DEFAULT_BANDWIDTH_HZ))?;
    let tx_power_w = match exclusive("tx_power_w", file.tx_power_w, "tx_power_dbm", file.tx_power_dbm)? {
        Some(Ok(w)) => positive("tx_power_w", w)?,
        Some(Err(dbm)) => dbm_to_watts(dbm),
        None => dbm_to_watts(DEFAULT_TX_POWER_DBM),
    };
    let thermal_w = dbm_to_watts(thermal_noise_dbm(bandwidth_hz));

    let receiver = resolve_link(
        file.receiver,
        LinkDefaults {
            prefix: "receiver",
            angle_deg: DEFAULT_RECEIVER_ANGLE_DEG,
            distance_m: DEFAULT_RECEIVER_DISTANCE_M,
            combined_gain: DEFAULT_RECEIVER_GAIN,
        },
        tx_power_w,
        wavelength_m,
        thermal_w,
    )?;
    let eavesdropper = resolve_link(
        file.eavesdropper,
        LinkDefaults {
            prefix: "eavesdropper",
            angle_deg: DEFAULT_EAVESDROPPER_ANGLE_DEG,
            distance_m: DEFAULT_EAVESDROPPER_DISTANCE_M,
            combined_gain: DEFAULT_EAVESDROPPER_GAIN,
        },
        tx_power_w,
        wavelength_m,
        receiver.noise_power_w,
    )?;
    let scenario = Scenario::new(cfg, receiver, eavesdropper).map_err(|e| field_error("scenario", e))?;

    let sweep_section = file.sweep.unwrap_or_default();
    let kind = sweep_section.kind.unwrap_or(SweepKind::Angle);
    let grid = match (&sweep_section.grid, sweep_section.start, sweep_section.stop, sweep_section.step) {
        (Some(_), Some(_), _, _) | (Some(_), _, Some(_), _) | (Some(_), _, _, Some(_)) => {
            return Err(field_error("sweep.grid", "give either `grid` or `start`/`stop`/`step`, not both"))
        }
        (Some(grid), None, None, None) => grid.clone(),
        (None, Some(start), Some(stop), Some(step)) => range_grid(start, stop, step)?,
        (None, None, None, None) => default_grid(kind, &scenario),
        _ => return Err(field_error("sweep", "`start`, `stop` and `step` must be given together")),
    };

    let config = RunConfig {
        scenario,
        scheme: file.scheme.map(Scheme::from).unwrap_or_default(),
        split: file.split.map(SplitRule::from).unwrap_or_default(),
        m: file.m.unwrap_or(DEFAULT_M.min(n_t)),
        symbols: file.symbols.unwrap_or(DEFAULT_SYMBOLS),
        seed: file.seed.unwrap_or(DEFAULT_SEED),
        sweep: SweepSpec { kind, grid },
        output_path: file.output,
    };
    config.validate()?;
    Ok(config)
}

fn range_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, ConfigError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(field_error("sweep.step", format!("must be positive, got {step}")));
    }
    if !(start.is_finite() && stop.is_finite() && stop >= start) {
        return Err(field_error("sweep.stop", "must be finite and not below `start`"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_gives_reference_setup() {
        let c = parse_config("").unwrap();
        let s = &c.scenario;
        assert_eq!(s.array.n_t(), 32);
        assert_eq!(c.m, 24);
        assert_eq!(s.receiver.angle_deg, 100.0);
        assert_eq!(s.eavesdropper.angle_deg, 95.0);
        assert_eq!(s.receiver.combined_rx_gain, 8.0);
        assert_eq!(s.eavesdropper.combined_rx_gain, 32.0);
        assert!((s.receiver.tx_power_w - 5.011_872_336_272_722).abs() < 1e-12);
        assert!((s.receiver.path_loss / 1.756_615_326_278_842_7e-10 - 1.0).abs() < 1e-12);
        assert!((s.eavesdropper.path_loss / s.receiver.path_loss - 9.0).abs() < 1e-12);
        assert!((s.receiver.noise_power_w / 1.990_535_852_767_486e-13 - 1.0).abs() < 1e-12);
        assert_eq!(s.eavesdropper.noise_power_w, s.receiver.noise_power_w);
        assert_eq!(c.sweep.kind, SweepKind::Angle);
        assert_eq!(c.sweep.grid.len(), 359);
        assert_eq!(c, parse_config("{}").unwrap());
    }

    #[test]
    fn odd_remainder_rejected() {
        let err = parse_config(r#"{"m": 23}"#).unwrap_err().to_string();
        assert!(err.contains("`m`") && err.contains("cancel"), "{err}");
        assert!(parse_config(r#"{"m": 23, "scheme": "switched"}"#).is_ok());
    }

    #[test]
    fn unknown_fields_rejected() {
        let err = parse_config(r#"{"antennas": 4}"#).unwrap_err().to_string();
        assert!(err.contains("antennas"), "{err}");
        let err = parse_config(r#"{"receiver": {"gain": 4}}"#).unwrap_err().to_string();
        assert!(err.contains("gain"), "{err}");
    }

    #[test]
    fn decibel_fields() {
        let c = parse_config(
            r#"{"tx_power_dbm": 30, "receiver": {"path_loss_db": 100, "combined_gain_db": 10, "noise_power_dbm": -90}}"#,
        )
        .unwrap();
        let r = &c.scenario.receiver;
        assert!((r.tx_power_w - 1.0).abs() < 1e-12);
        assert!((r.path_loss / 1e-10 - 1.0).abs() < 1e-12);
        assert!((r.combined_rx_gain - 10.0).abs() < 1e-12);
        assert!((r.noise_power_w / 1e-12 - 1.0).abs() < 1e-12);
        let err = parse_config(r#"{"tx_power_w": 1, "tx_power_dbm": 30}"#).unwrap_err().to_string();
        assert!(err.contains("tx_power_dbm"), "{err}");
    }

    #[test]
    fn direct_gain_beats_geometry() {
        let geo = r#"{"receiver": {"two_ray": {"h_t_m": 0.5, "h_r_m": 0.5, "array_gain": 4}}}"#;
        let c = parse_config(geo).unwrap();
        let lambda = c.scenario.array.wavelength_m();
        let phi = 2.0 * std::f64::consts::PI / lambda * (2.0 * 0.25 / 30.0);
        let expected = 2.0 * (phi / 2.0).sin().powi(2) * 4.0;
        assert!((c.scenario.receiver.combined_rx_gain - expected).abs() < 1e-12);
        let both = r#"{"receiver": {"combined_gain": 3, "two_ray": {"h_t_m": 0.5, "h_r_m": 0.5, "array_gain": 4}}}"#;
        assert_eq!(parse_config(both).unwrap().scenario.receiver.combined_rx_gain, 3.0);
    }

    #[test]
    fn field_named_in_errors() {
        let err = parse_config(r#"{"receiver": {"angle_deg": 190}}"#).unwrap_err().to_string();
        assert!(err.contains("receiver"), "{err}");
        let err = parse_config(r#"{"symbols": 0}"#).unwrap_err().to_string();
        assert!(err.contains("symbols"), "{err}");
        let err = parse_config(r#"{"version": 7}"#).unwrap_err().to_string();
        assert!(err.contains("version"), "{err}");
        let err = parse_config(r#"{"sweep": {"grid": []}}"#).unwrap_err().to_string();
        assert!(err.contains("sweep.grid"), "{err}");
    }

    #[test]
    fn sweep_grids() {
        let c = parse_config(r#"{"sweep": {"kind": "subset-size"}}"#).unwrap();
        assert_eq!(c.sweep.grid, [4.0, 8.0, 12.0, 16.0, 20.0, 24.0, 28.0]);
        let c = parse_config(r#"{"sweep": {"kind": "angle", "start": 10, "stop": 20, "step": 2.5}}"#).unwrap();
        assert_eq!(c.sweep.grid, [10.0, 12.5, 15.0, 17.5, 20.0]);
        let c = c.with_kind(SweepKind::SinglePoint);
        assert_eq!(c.sweep.grid, [95.0]);
        assert!(parse_config(r#"{"sweep": {"kind": "subset-size", "grid": [4.5]}}"#).is_err());
    }

    #[test]
    fn digest_tracks_content() {
        let a = parse_config("").unwrap();
        let b = parse_config(r#"{"seed": 2}"#).unwrap();
        assert_eq!(a.digest(), parse_config("{}").unwrap().digest());
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
