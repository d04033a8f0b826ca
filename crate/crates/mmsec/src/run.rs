use mmsec_core::analysis::{beta_stats, conventional_secrecy, secrecy_throughput_closed_form};
use mmsec_core::simulator::{beam_variance_profile, sweep_eavesdropper_angle, sweep_subset_size, Executor, Scheme};
use mmsec_core::Error;

use crate::config::{RunConfig, SweepKind};
use crate::output::ResultTable;

/// Executes the sweep described by `config`.
pub fn run<E: Executor>(config: &RunConfig, exec: &E) -> Result<ResultTable, Error> {
    let mc = config.monte_carlo();
    let scenario = &config.scenario;
    let grid = &config.sweep.grid;
    match config.sweep.kind {
        SweepKind::Angle | SweepKind::SinglePoint => {
            let rows = sweep_eavesdropper_angle(scenario, config.m, grid, &mc, exec)?;
            Ok(ResultTable::from_sweep(config.sweep.kind, &rows))
        }
        SweepKind::SubsetSize => {
            let m_values: Vec<usize> = grid.iter().map(|&m| m as usize).collect();
            let sweep = sweep_subset_size(scenario, &m_values, &mc, exec)?;
            let mut table = ResultTable::from_sweep(SweepKind::SubsetSize, &sweep.rows);
            table.notes = sweep.skipped.iter().map(|(m, e)| format!("skipped m={m}: {e}")).collect();
            Ok(table)
        }
        SweepKind::VarianceProfile => {
            let profile = beam_variance_profile(scenario, config.m, grid, &mc, exec)?;
            Ok(ResultTable::from_profile(&profile))
        }
    }
}

/// Closed-form figures for the configured operating point. The switched
/// scheme has none.
pub fn theory_summary(config: &RunConfig) -> Vec<(String, f64)> {
    let s = &config.scenario;
    match config.scheme {
        Scheme::Proposed => {
            let b = beta_stats(&s.array, config.m, s.receiver.angle_deg, s.eavesdropper.angle_deg);
            let r = secrecy_throughput_closed_form(s, config.m);
            vec![
                ("gamma_r".into(), r.gamma_r),
                ("gamma_e".into(), r.gamma_e),
                ("r_bits".into(), r.r_bits),
                ("beta_mean".into(), b.mean),
                ("beta_var".into(), b.variance),
            ]
        }
        Scheme::Conventional => {
            let r = conventional_secrecy(s);
            vec![
                ("gamma_r".into(), r.gamma_r),
                ("gamma_e".into(), r.gamma_e),
                ("r_bits".into(), r.r_bits),
            ]
        }
        Scheme::Switched => Vec::new(),
    }
}
