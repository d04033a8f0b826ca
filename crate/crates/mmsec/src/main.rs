use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use mmsec::config::{parse_config, SchemeName, SweepKind};
use mmsec::output::{format_float, write_table, write_table_atomic};
use mmsec::run::theory_summary;
use mmsec::validation::{run_all, Settings};
use mmsec::{load_config, run, Parallel, RunConfig};
use mmsec_core::simulator::{Executor, Serial};

/// Secrecy throughput of random-subset artificial-noise beamforming on a
/// mmWave uniform linear array.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the eavesdropper angle.
    SweepAngle(RunArgs),
    /// Sweep the subset size M.
    SweepM(RunArgs),
    /// Empirical beam variance against angle.
    VarianceProfile(RunArgs),
    /// Closed form and simulation at the configured eavesdropper angle.
    Point(RunArgs),
    /// Run the acceptance checks on the reference scenario.
    Validate {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// JSON configuration; defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Symbols per sweep point.
    #[arg(long)]
    symbols: Option<usize>,
    #[arg(long, value_enum)]
    scheme: Option<SchemeName>,
    #[arg(long)]
    m: Option<usize>,
    /// Output CSV; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 lets rayon decide, 1 runs serially).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl RunArgs {
    fn resolve(&self, kind: SweepKind) -> Result<RunConfig> {
        let mut config = match &self.config {
            Some(path) => load_config(path)?,
            None => parse_config("")?,
        }
        .with_kind(kind);
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(symbols) = self.symbols {
            config.symbols = symbols;
        }
        if let Some(scheme) = self.scheme {
            config.scheme = scheme.into();
        }
        if let Some(m) = self.m {
            config.m = m;
        }
        if let Some(out) = &self.out {
            config.output_path = Some(out.clone());
        }
        config.validate()?;
        Ok(config)
    }
}

fn execute<E: Executor>(config: &RunConfig, exec: &E) -> Result<()> {
    let table = run(config, exec)?;
    for note in &table.notes {
        eprintln!("{note}");
    }
    match &config.output_path {
        Some(path) => write_table_atomic(path, config, &table).with_context(|| format!("writing {}", path.display()))?,
        None => write_table(io::stdout().lock(), config, &table)?,
    }
    Ok(())
}

fn with_executor(threads: usize, config: &RunConfig) -> Result<()> {
    match threads {
        1 => execute(config, &Serial),
        0 => execute(config, &Parallel::global()),
        n => execute(config, &Parallel::with_threads(n)?),
    }
}

fn main_inner() -> Result<bool> {
    match Cli::parse().command {
        Command::SweepAngle(a) => with_executor(a.threads, &a.resolve(SweepKind::Angle)?)?,
        Command::SweepM(a) => with_executor(a.threads, &a.resolve(SweepKind::SubsetSize)?)?,
        Command::VarianceProfile(a) => with_executor(a.threads, &a.resolve(SweepKind::VarianceProfile)?)?,
        Command::Point(a) => {
            let config = a.resolve(SweepKind::SinglePoint)?;
            for (name, value) in theory_summary(&config) {
                eprintln!("{name} = {}", format_float(value));
            }
            with_executor(a.threads, &config)?;
        }
        Command::Validate { seed, threads } => {
            let mut settings = Settings::default();
            if let Some(seed) = seed {
                settings.seed = seed;
            }
            let results = match threads {
                Some(1) => run_all(&settings, &Serial),
                Some(n) if n > 1 => run_all(&settings, &Parallel::with_threads(n)?),
                _ => run_all(&settings, &Parallel::global()),
            };
            for c in &results {
                println!("{c}");
            }
            return Ok(results.iter().all(|c| c.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
