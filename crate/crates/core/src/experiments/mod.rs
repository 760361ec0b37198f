//! The four experiment runners behind the `haarwalk` binary.
//!
//! Every runner is a pure function of its [`ExperimentConfig`]: trials fan out
//! over rayon workers on disjoint RNG streams and are reduced in trial order,
//! so reruns are byte-identical.

mod cutoff;
mod dyson;
mod output;
mod porter_thomas;
mod qft_invariance;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::circuit::Topology;
use crate::dyson::Integrator;
use crate::error::{Error, Result};
use crate::rng::RngSeed;

pub use cutoff::{
    cutoff_trial, exp_cutoff_circuit, CutoffReport, CutoffTrace, ExperimentSeries, SeriesRecord,
};
pub use dyson::exp_dyson;
pub use output::{format_float, Cell, Table};
pub use porter_thomas::{exp_porter_thomas, PorterThomasReport};
pub use qft_invariance::{exp_qft_invariance, QftInvarianceReport};

/// Stream tags separating the independent random inputs of one experiment.
pub(crate) mod tags {
    pub const CIRCUIT: u64 = 1;
    pub const HAAR_STATE: u64 = 2;
    pub const CUE_REFERENCE: u64 = 3;
    pub const DYSON: u64 = 4;
}

/// Seed of trial `trial` for the input family `tag`.
pub(crate) fn trial_seed(seed: u64, tag: u64, trial: usize) -> RngSeed {
    RngSeed::new(seed).child(tag).with_stream(trial as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    CutoffCircuit,
    QftInvariance,
    PorterThomas,
    Dyson,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 4] = [
        Self::CutoffCircuit,
        Self::QftInvariance,
        Self::PorterThomas,
        Self::Dyson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::CutoffCircuit => "cutoff-circuit",
            Self::QftInvariance => "qft-invariance",
            Self::PorterThomas => "porter-thomas",
            Self::Dyson => "dyson",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Self::ALL.iter().map(|k| k.name()).collect();
                Error::Config(format!(
                    "unknown experiment `{s}` (expected one of: {})",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::Config(format!(
                "unknown format `{s}` (expected csv or json)"
            ))),
        }
    }
}

/// Where the Porter-Thomas experiment draws its states from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateSource {
    #[default]
    Haar,
    Circuit,
}

impl FromStr for StateSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "haar" => Ok(Self::Haar),
            "circuit" => Ok(Self::Circuit),
            _ => Err(Error::Config(format!(
                "unknown state source `{s}` (expected haar or circuit)"
            ))),
        }
    }
}

/// Parse `chain`, `grid RxC`, `grid:RxC` or `grid=RxC`.
pub fn parse_topology(s: &str) -> Result<Topology> {
    let s = s.trim();
    if s == "chain" {
        return Ok(Topology::Chain1D);
    }
    let bad = || {
        Error::Config(format!(
            "bad topology `{s}` (expected `chain` or `grid RxC`)"
        ))
    };
    let shape = s
        .strip_prefix("grid")
        .map(|r| r.trim_start_matches([' ', ':', '=']))
        .ok_or_else(bad)?;
    let (r, c) = shape.split_once(['x', 'X']).ok_or_else(bad)?;
    let rows: usize = r.trim().parse().map_err(|_| bad())?;
    let cols: usize = c.trim().parse().map_err(|_| bad())?;
    if rows == 0 || cols == 0 {
        return Err(bad());
    }
    Ok(Topology::Grid2D { rows, cols })
}

/// Everything an experiment run depends on.
///
/// Each experiment reads the fields it needs; the rest are echoed but
/// ignored. Output destination and format are not part of the echo.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub qubits: usize,
    pub cycles: usize,
    pub trials: usize,
    pub seed: u64,
    pub dim: usize,
    pub sigma: f64,
    pub dt: f64,
    pub steps: usize,
    pub renormalize_every: Option<usize>,
    pub record_every: usize,
    pub integrator: Integrator,
    pub wasserstein: bool,
    pub per_gate: bool,
    pub topology: Topology,
    pub source: StateSource,
    pub bins: usize,
    pub state_file: Option<PathBuf>,
    #[serde(skip)]
    pub format: OutputFormat,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind) -> Self {
        Self {
            experiment,
            qubits: 5,
            cycles: 20,
            trials: 50,
            seed: 0,
            dim: 20,
            sigma: 1.0,
            dt: 0.01,
            steps: 60_000,
            renormalize_every: None,
            record_every: 100,
            integrator: Integrator::SecondOrder,
            wasserstein: false,
            per_gate: false,
            topology: Topology::Chain1D,
            source: StateSource::Haar,
            bins: 40,
            state_file: None,
            format: OutputFormat::Csv,
            out: None,
        }
    }

    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serializes")
    }

    pub(crate) fn require_trials(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("--trials must be at least 1".into()));
        }
        Ok(())
    }
}

/// Run the configured experiment and return its table.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Table> {
    match cfg.experiment {
        ExperimentKind::CutoffCircuit => Ok(exp_cutoff_circuit(cfg)?.to_table()),
        ExperimentKind::QftInvariance => Ok(exp_qft_invariance(cfg)?.to_table()),
        ExperimentKind::PorterThomas => Ok(exp_porter_thomas(cfg)?.to_table()),
        ExperimentKind::Dyson => exp_dyson(cfg),
    }
}

/// Run and render in the configured format.
pub fn render_experiment(cfg: &ExperimentConfig) -> Result<String> {
    let table = run_experiment(cfg)?;
    match cfg.format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => table.to_json(cfg.experiment.name(), cfg.echo()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn experiment_names() {
        for k in ExperimentKind::ALL {
            assert_eq!(k.name().parse::<ExperimentKind>().unwrap(), k);
        }
        assert!(matches!(
            "cutoff".parse::<ExperimentKind>(),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn topology_strings() {
        assert_eq!(parse_topology("chain").unwrap(), Topology::Chain1D);
        assert_eq!(
            parse_topology("grid 3x4").unwrap(),
            Topology::Grid2D { rows: 3, cols: 4 }
        );
        assert_eq!(
            parse_topology("grid:2X2").unwrap(),
            Topology::Grid2D { rows: 2, cols: 2 }
        );
        assert!(parse_topology("grid 0x4").is_err());
        assert!(parse_topology("ring").is_err());
        assert!(parse_topology("grid 3").is_err());
    }

    #[test]
    fn echo_omits_destination() {
        let mut cfg = ExperimentConfig::new(ExperimentKind::Dyson);
        cfg.out = Some("a.csv".into());
        let v = cfg.echo();
        assert_eq!(v["experiment"], "dyson");
        assert!(v.get("out").is_none());
        assert!(v.get("format").is_none());
    }
}
