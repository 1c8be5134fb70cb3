use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nbl_lab::experiments::{
    self, parse_f64_list, parse_usize_list, parse_usize_range, Experiment, ExperimentConfig,
    OutputFormat, SEED_ENV_VAR,
};
use nbl_lab::NblError;

/// Noise-based logic experiments. Writes CSV records or a JSON report.
#[derive(Parser)]
#[command(name = "nbl-lab", version)]
struct Cli {
    #[command(subcommand)]
    experiment: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-K correlation of independent reference waves.
    Orthogonality(Flags),
    /// Product-form universe vs the expanded sum, with op counts.
    Universe(Flags),
    /// GF(2) readout failure rate over an (N, K) grid.
    Readout(Flags),
    /// Bandwidth and degeneracy of linear vs exponential sinusoids.
    Sinus(Flags),
    /// Closed-form readout bounds.
    Bounds(Flags),
}

#[derive(Args)]
struct Flags {
    /// Noise-bit counts, comma separated.
    #[arg(long, conflicts_with = "bits_range")]
    bits: Option<String>,
    /// Inclusive bit range lo:hi[:step].
    #[arg(long)]
    bits_range: Option<String>,
    /// Clock counts, comma separated.
    #[arg(long, conflicts_with = "clocks_range")]
    clocks: Option<String>,
    /// Inclusive clock range lo:hi[:step].
    #[arg(long)]
    clocks_range: Option<String>,
    /// Readout only: K = clocks-per-bit * N.
    #[arg(long)]
    clocks_per_bit: Option<usize>,
    #[arg(long)]
    trials: Option<u64>,
    /// Master seed [default: 0x6e626c2d6c616221].
    #[arg(long, env = SEED_ENV_VAR)]
    seed: Option<u64>,
    /// Epsilon values for the clock bound, comma separated.
    #[arg(long)]
    epsilon: Option<String>,
    /// Target failure probabilities, comma separated; `2^-10` style allowed.
    #[arg(long)]
    p_target: Option<String>,
    /// Orthogonality only: correlate each wave with itself.
    #[arg(long)]
    identical: bool,
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn config(experiment: Experiment, flags: Flags) -> Result<ExperimentConfig, NblError> {
    let mut cfg = ExperimentConfig::defaults(experiment);
    if let Some(s) = &flags.bits {
        cfg.bits = parse_usize_list(s)?;
    }
    if let Some(s) = &flags.bits_range {
        cfg.bits = parse_usize_range(s)?;
    }
    if let Some(s) = &flags.clocks {
        cfg.clocks = parse_usize_list(s)?;
        cfg.clocks_per_bit = None;
    }
    if let Some(s) = &flags.clocks_range {
        cfg.clocks = parse_usize_range(s)?;
        cfg.clocks_per_bit = None;
    }
    if flags.clocks_per_bit.is_some() {
        cfg.clocks_per_bit = flags.clocks_per_bit;
    }
    if let Some(t) = flags.trials {
        cfg.trials = t;
    }
    if let Some(seed) = flags.seed {
        cfg.master_seed = seed;
    }
    if let Some(s) = &flags.epsilon {
        cfg.epsilon = parse_f64_list(s)?;
    }
    if let Some(s) = &flags.p_target {
        cfg.p_target = parse_f64_list(s)?;
    }
    cfg.identical_pairs = flags.identical;
    cfg.format = flags.format.parse::<OutputFormat>()?;
    cfg.out = flags.out;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (experiment, flags) = match cli.experiment {
        Command::Orthogonality(f) => (Experiment::Orthogonality, f),
        Command::Universe(f) => (Experiment::Universe, f),
        Command::Readout(f) => (Experiment::Readout, f),
        Command::Sinus(f) => (Experiment::Sinus, f),
        Command::Bounds(f) => (Experiment::Bounds, f),
    };

    let result = config(experiment, flags).and_then(|cfg| {
        let report = experiments::run(&cfg)?;
        let text = report.render(cfg.format)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    });

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nbl-lab: {e}");
            ExitCode::from(if e.is_config_error() { 2 } else { 1 })
        }
    }
}
