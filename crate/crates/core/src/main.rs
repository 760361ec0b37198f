use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use haarwalk::experiments::{
    parse_topology, render_experiment, ExperimentConfig, ExperimentKind, OutputFormat,
};
use haarwalk::{Error, Integrator};

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Haar,
    Circuit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Step {
    SecondOrder,
    Exact,
}

/// Random walks on U(N): circuit and Dyson-Brownian convergence to Haar states.
#[derive(Debug, Parser)]
#[command(name = "haarwalk", version)]
struct Cli {
    /// cutoff-circuit | qft-invariance | porter-thomas | dyson
    experiment: String,
    /// Register size n (N = 2^n) for circuit experiments.
    #[arg(long)]
    qubits: Option<usize>,
    #[arg(long, default_value_t = 20)]
    cycles: usize,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Matrix dimension of the Dyson walk.
    #[arg(long, default_value_t = 20)]
    dim: usize,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    #[arg(long, default_value_t = 60_000)]
    steps: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Track W1 between circuit eigenphases and a CUE reference.
    #[arg(long)]
    wasserstein: bool,
    /// Re-unitarize the Dyson propagator every R steps.
    #[arg(long, value_name = "R")]
    renormalize_every: Option<usize>,
    /// `chain` or `grid RxC`.
    #[arg(long, num_args = 1..=2, value_name = "TOPOLOGY")]
    topology: Vec<String>,
    /// Keep every R-th Dyson frame.
    #[arg(long, default_value_t = 100)]
    record_every: usize,
    /// Record after every gate instead of every cycle.
    #[arg(long)]
    per_gate: bool,
    #[arg(long, value_enum, default_value = "haar")]
    source: Source,
    #[arg(long, default_value_t = 40)]
    bins: usize,
    /// Extra state (CSV `re,im` lines or JSON `[[re, im], ...]`) for qft-invariance.
    #[arg(long)]
    state: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "second-order")]
    integrator: Step,
}

fn config(cli: Cli) -> Result<ExperimentConfig, Error> {
    let kind: ExperimentKind = cli.experiment.parse()?;
    let mut cfg = ExperimentConfig::new(kind);
    if !cli.topology.is_empty() {
        cfg.topology = parse_topology(&cli.topology.join(" "))?;
    }
    cfg.qubits = match (cli.qubits, cfg.topology) {
        (Some(n), _) => n,
        (None, haarwalk::Topology::Grid2D { rows, cols }) => rows * cols,
        (None, haarwalk::Topology::Chain1D) => cfg.qubits,
    };
    cfg.cycles = cli.cycles;
    cfg.trials = cli.trials;
    cfg.seed = cli.seed;
    cfg.dim = cli.dim;
    cfg.sigma = cli.sigma;
    cfg.dt = cli.dt;
    cfg.steps = cli.steps;
    cfg.renormalize_every = cli.renormalize_every;
    cfg.record_every = cli.record_every;
    cfg.wasserstein = cli.wasserstein;
    cfg.per_gate = cli.per_gate;
    cfg.bins = cli.bins;
    cfg.state_file = cli.state;
    cfg.source = match cli.source {
        Source::Haar => haarwalk::experiments::StateSource::Haar,
        Source::Circuit => haarwalk::experiments::StateSource::Circuit,
    };
    cfg.integrator = match cli.integrator {
        Step::SecondOrder => Integrator::SecondOrder,
        Step::Exact => Integrator::ExactExponential,
    };
    cfg.format = match cli.format {
        Format::Csv => OutputFormat::Csv,
        Format::Json => OutputFormat::Json,
    };
    cfg.out = cli.out;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cfg = match config(Cli::parse()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("haarwalk: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let result = render_experiment(&cfg).and_then(|text| match &cfg.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("haarwalk: {e}");
            ExitCode::from(if e.is_numerical() {
                EXIT_NUMERICAL
            } else {
                EXIT_CONFIG
            })
        }
    }
}
