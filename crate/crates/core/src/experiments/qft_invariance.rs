//! Entropy in the computational and Fourier bases for uniform, basis, Haar
//! and circuit states.

use rayon::prelude::*;

use super::{tags, trial_seed, Cell, ExperimentConfig, Table};
use crate::amplitudes::load_amplitudes;
use crate::circuit::{build_random_circuit, run_circuit, CircuitSpec};
use crate::ensembles::sample_haar_state;
use crate::entropy::{entropic_uncertainty, haar_mean_entropy, EntropyRecord};
use crate::error::{Error, Result};
use crate::state::StateVector;
use crate::stats;

use super::cutoff::MAX_STATE_QUBITS;

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyRow {
    pub label: &'static str,
    pub trial: usize,
    pub record: EntropyRecord,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QftInvarianceReport {
    pub dim: usize,
    pub rows: Vec<EntropyRow>,
}

impl QftInvarianceReport {
    pub fn group(&self, label: &str) -> Vec<&EntropyRecord> {
        self.rows
            .iter()
            .filter(|r| r.label == label)
            .map(|r| &r.record)
            .collect()
    }

    /// Mean `(H(P), H(Q))` over rows labelled `label`.
    pub fn group_means(&self, label: &str) -> Option<(f64, f64)> {
        let g = self.group(label);
        if g.is_empty() {
            return None;
        }
        let hp: Vec<f64> = g.iter().map(|r| r.h_computational).collect();
        let hq: Vec<f64> = g.iter().map(|r| r.h_qft).collect();
        Some((stats::mean(&hp), stats::mean(&hq)))
    }

    /// Smallest `H(P) + H(Q) - ln N` over all rows.
    pub fn min_bound_margin(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.record.uncertainty_sum - r.record.bound)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(["state", "trial", "h_p", "h_q", "sum", "bound"]);
        t.meta("dim", self.dim);
        t.meta(
            "reference_entropy",
            haar_mean_entropy(self.dim).unwrap_or(f64::NAN),
        );
        for label in ["haar", "circuit"] {
            if let Some((hp, hq)) = self.group_means(label) {
                t.meta(&format!("{label}_mean_h_p"), hp);
                t.meta(&format!("{label}_mean_h_q"), hq);
            }
        }
        t.meta("min_bound_margin", self.min_bound_margin());
        for r in &self.rows {
            t.push(vec![
                Cell::from(r.label),
                r.trial.into(),
                r.record.h_computational.into(),
                r.record.h_qft.into(),
                r.record.uncertainty_sum.into(),
                r.record.bound.into(),
            ]);
        }
        t
    }
}

pub fn exp_qft_invariance(cfg: &ExperimentConfig) -> Result<QftInvarianceReport> {
    let n = cfg.qubits;
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if n > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits {
            max: MAX_STATE_QUBITS,
            got: n,
        });
    }
    cfg.require_trials()?;
    let dim = 1usize << n;

    let external = match &cfg.state_file {
        Some(path) => Some(StateVector::from_amplitudes(load_amplitudes(path)?)?),
        None => None,
    };

    let mut rows = vec![
        EntropyRow {
            label: "uniform",
            trial: 0,
            record: entropic_uncertainty(&StateVector::<f64>::uniform(dim)?)?,
        },
        EntropyRow {
            label: "basis",
            trial: 0,
            record: entropic_uncertainty(&StateVector::<f64>::zero_state(n))?,
        },
    ];

    let haar: Vec<EntropyRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let amps = sample_haar_state::<f64>(dim, trial_seed(cfg.seed, tags::HAAR_STATE, t))?;
            entropic_uncertainty(&StateVector::from_amplitudes(amps)?)
        })
        .collect::<Result<_>>()?;
    rows.extend(
        haar.into_iter()
            .enumerate()
            .map(|(trial, record)| EntropyRow {
                label: "haar",
                trial,
                record,
            }),
    );

    let circuit: Vec<EntropyRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let spec = CircuitSpec::with_topology(
                n,
                cfg.cycles,
                cfg.topology,
                trial_seed(cfg.seed, tags::CIRCUIT, t),
            );
            let mut s = StateVector::<f64>::zero_state(n);
            run_circuit(&mut s, &build_random_circuit(&spec)?)?;
            entropic_uncertainty(&s)
        })
        .collect::<Result<_>>()?;
    rows.extend(
        circuit
            .into_iter()
            .enumerate()
            .map(|(trial, record)| EntropyRow {
                label: "circuit",
                trial,
                record,
            }),
    );

    if let Some(s) = external {
        rows.push(EntropyRow {
            label: "file",
            trial: 0,
            record: entropic_uncertainty(&s)?,
        });
    }

    Ok(QftInvarianceReport { dim, rows })
}
