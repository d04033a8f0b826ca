//! Acceptance checks on the reference scenario. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;

use mmsec::validation::{ac2, angle_sweep, run_all, Settings};
use mmsec::Parallel;
use mmsec_core::analysis::expected_beta;
use mmsec_core::array_model::ArrayConfig;
use mmsec_core::simulator::Serial;

fn inflated_mean(cfg: &ArrayConfig, m: usize, theta_r: f64, theta_e: f64) -> f64 {
    1.05 * expected_beta(cfg, m, theta_r, theta_e)
}

fn main() -> ExitCode {
    let results = run_all(&Settings::default(), &Parallel::global());
    for c in &results {
        println!("{c}");
    }
    let mut ok = results.len() == 8 && results.iter().all(|c| c.passed);

    let perturbed = ac2(&Settings {
        mean_model: inflated_mean,
        ..Settings::default()
    });
    let rejects = !perturbed.passed;
    println!("mean check with a 5% inflated model: {} ({perturbed})", if rejects { "rejected" } else { "NOT rejected" });
    ok &= rejects;

    let s = Settings {
        sweep_symbols: 500,
        ..Settings::default()
    };
    let stable = angle_sweep(&s, &Parallel::global()).rows == angle_sweep(&s, &Serial).rows;
    println!("angle sweep serial/parallel rows: {}", if stable { "identical" } else { "DIFFER" });
    ok &= stable;

    let failed: Vec<_> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    println!("acceptance: {}", if ok { "all passed".to_owned() } else { format!("FAILED {failed:?}") });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
