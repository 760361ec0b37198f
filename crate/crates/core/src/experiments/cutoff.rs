//! Entropy and W1 versus circuit depth.

use rayon::prelude::*;
use serde_json::json;

use super::{tags, trial_seed, ExperimentConfig, Table};
use crate::circuit::{
    apply_events_to_matrix, build_random_circuit, run_circuit, CircuitSpec, MAX_MATRIX_QUBITS,
};
use crate::ensembles::sample_haar_unitary;
use crate::entropy::{entropic_uncertainty, haar_mean_entropy, haar_mean_entropy_exact};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::spectral::{eigenphases, wasserstein_to_cue, EigenPhases};
use crate::state::StateVector;
use crate::stats;

/// Largest register simulated without the unitary.
pub const MAX_STATE_QUBITS: usize = 24;

/// Relative distance below the reference entropy that counts as converged.
pub const CUTOFF_FRACTION: f64 = 0.05;

/// Half-width (nats) of the band around the reference that counts as plateau.
pub const PLATEAU_TOL: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesRecord {
    pub step: usize,
    /// Gate events applied so far; single- and two-qubit gates count once each.
    pub gates: usize,
    pub entropy: f64,
    pub entropy_qft: f64,
    pub wasserstein_w1: Option<f64>,
    pub unitarity_defect: Option<f64>,
}

/// Records with strictly increasing steps and non-decreasing gate counts.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentSeries {
    records: Vec<SeriesRecord>,
}

impl ExperimentSeries {
    pub fn new(records: Vec<SeriesRecord>) -> Result<Self> {
        for w in records.windows(2) {
            if w[1].step <= w[0].step || w[1].gates < w[0].gates {
                return Err(Error::Shape(format!(
                    "series records out of order at step {} -> {}",
                    w[0].step, w[1].step
                )));
            }
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[SeriesRecord] {
        &self.records
    }

    pub fn entropies(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.entropy).collect()
    }
}

/// One trial's measurements at every recording point.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffTrace {
    pub gates: Vec<usize>,
    pub entropy: Vec<f64>,
    pub entropy_qft: Vec<f64>,
    /// Empty unless W1 was requested.
    pub w1: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutoffReport {
    pub num_qubits: usize,
    pub per_gate: bool,
    pub series: ExperimentSeries,
    /// Standard error of the trial mean entropy, per record.
    pub entropy_std_err: Vec<f64>,
    /// `ln N - 1 + gamma`.
    pub reference_entropy: f64,
    /// First step whose trial-averaged entropy reaches `(1 - 0.05) * reference`.
    pub cutoff_step: Option<usize>,
    /// First step from which every later trial-averaged entropy stays within
    /// [`PLATEAU_TOL`] of the reference.
    pub plateau_step: Option<usize>,
    pub cue_reference: Option<EigenPhases<f64>>,
    pub traces: Vec<CutoffTrace>,
}

fn check_size(cfg: &ExperimentConfig) -> Result<()> {
    let n = cfg.qubits;
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    let max = if cfg.wasserstein {
        MAX_MATRIX_QUBITS
    } else {
        MAX_STATE_QUBITS
    };
    if n > max {
        return Err(Error::TooManyQubits { max, got: n });
    }
    Ok(())
}

/// The CUE sample every trial of one experiment is compared against.
pub(crate) fn cue_reference(seed: u64, dim: usize) -> Result<EigenPhases<f64>> {
    let u = sample_haar_unitary::<f64>(dim, trial_seed(seed, tags::CUE_REFERENCE, 0))?;
    eigenphases(&u)
}

/// Run trial `trial` of the cutoff experiment.
pub fn cutoff_trial(
    cfg: &ExperimentConfig,
    trial: usize,
    reference: Option<&EigenPhases<f64>>,
) -> Result<CutoffTrace> {
    check_size(cfg)?;
    let n = cfg.qubits;
    let spec = CircuitSpec::with_topology(
        n,
        cfg.cycles,
        cfg.topology,
        trial_seed(cfg.seed, tags::CIRCUIT, trial),
    );
    let events = build_random_circuit::<f64>(&spec)?;

    let ends: Vec<usize> = if cfg.per_gate {
        (1..=events.len()).collect()
    } else {
        let mut ends = Vec::with_capacity(cfg.cycles);
        for (i, e) in events.iter().enumerate() {
            if events.get(i + 1).is_none_or(|next| next.cycle != e.cycle) {
                ends.push(i + 1);
            }
        }
        ends
    };

    let mut state = StateVector::<f64>::zero_state(n);
    let mut u = reference.map(|_| ComplexMatrix::<f64>::identity(1 << n));
    let mut trace = CutoffTrace {
        gates: Vec::with_capacity(ends.len() + 1),
        entropy: Vec::with_capacity(ends.len() + 1),
        entropy_qft: Vec::with_capacity(ends.len() + 1),
        w1: Vec::new(),
    };
    let mut record =
        |gates: usize, state: &StateVector<f64>, u: Option<&ComplexMatrix<f64>>| -> Result<()> {
            let rec = entropic_uncertainty(state)?;
            trace.gates.push(gates);
            trace.entropy.push(rec.h_computational);
            trace.entropy_qft.push(rec.h_qft);
            if let (Some(u), Some(reference)) = (u, reference) {
                trace
                    .w1
                    .push(wasserstein_to_cue(&eigenphases(u)?, reference)?);
            }
            Ok(())
        };

    record(0, &state, u.as_ref())?;
    let mut prev = 0;
    for end in ends {
        let slice = &events[prev..end];
        run_circuit(&mut state, slice)?;
        if let Some(u) = u.as_mut() {
            apply_events_to_matrix(u, slice)?;
        }
        record(end, &state, u.as_ref())?;
        prev = end;
    }
    Ok(trace)
}

/// Trial-averaged entropy (and optionally W1) after every cycle or gate.
pub fn exp_cutoff_circuit(cfg: &ExperimentConfig) -> Result<CutoffReport> {
    check_size(cfg)?;
    cfg.require_trials()?;
    let dim = 1usize << cfg.qubits;
    let reference = if cfg.wasserstein {
        Some(cue_reference(cfg.seed, dim)?)
    } else {
        None
    };

    let traces: Vec<CutoffTrace> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| cutoff_trial(cfg, t, reference.as_ref()))
        .collect::<Result<_>>()?;

    let points = traces[0].gates.len();
    let trials = traces.len() as f64;
    let mut records = Vec::with_capacity(points);
    let mut entropy_std_err = Vec::with_capacity(points);
    for k in 0..points {
        let column = |f: &dyn Fn(&CutoffTrace) -> f64| traces.iter().map(f).collect::<Vec<f64>>();
        let h = column(&|t| t.entropy[k]);
        let hq = column(&|t| t.entropy_qft[k]);
        let w1 = reference
            .as_ref()
            .map(|_| traces.iter().map(|t| t.w1[k]).sum::<f64>() / trials);
        records.push(SeriesRecord {
            step: k,
            gates: traces[0].gates[k],
            entropy: stats::mean(&h),
            entropy_qft: stats::mean(&hq),
            wasserstein_w1: w1,
            unitarity_defect: None,
        });
        entropy_std_err.push(if h.len() > 1 { stats::std_err(&h) } else { 0.0 });
    }

    let reference_entropy = haar_mean_entropy(dim)?;
    let floor = reference_entropy * (1.0 - CUTOFF_FRACTION);
    let cutoff_step = records.iter().find(|r| r.entropy >= floor).map(|r| r.step);
    let plateau_step = records
        .iter()
        .rposition(|r| (r.entropy - reference_entropy).abs() > PLATEAU_TOL)
        .map_or(Some(0), |last_out| {
            records.get(last_out + 1).map(|r| r.step)
        });

    Ok(CutoffReport {
        num_qubits: cfg.qubits,
        per_gate: cfg.per_gate,
        series: ExperimentSeries::new(records)?,
        entropy_std_err,
        reference_entropy,
        cutoff_step,
        plateau_step,
        cue_reference: reference,
        traces,
    })
}

impl CutoffReport {
    pub fn to_table(&self) -> Table {
        let mut t = Table::new([
            "step",
            "gates",
            "entropy",
            "entropy_std_err",
            "entropy_qft",
            "wasserstein_w1",
            "unitarity_defect",
        ]);
        let dim = 1usize << self.num_qubits;
        t.meta("qubits", self.num_qubits);
        t.meta("dim", dim);
        t.meta("trials", self.traces.len());
        t.meta("step_unit", if self.per_gate { "gate" } else { "cycle" });
        t.meta("reference_entropy", self.reference_entropy);
        t.meta(
            "reference_entropy_exact",
            haar_mean_entropy_exact(dim).unwrap_or(f64::NAN),
        );
        let records = self.series.records();
        t.meta(
            "cutoff_step",
            self.cutoff_step.map_or(json!(null), |s| json!(s)),
        );
        t.meta(
            "cutoff_gates",
            self.cutoff_step
                .map_or(json!(null), |s| json!(records[s].gates)),
        );
        t.meta(
            "plateau_step",
            self.plateau_step.map_or(json!(null), |s| json!(s)),
        );
        if let Some(reference) = &self.cue_reference {
            t.meta("cue_reference", json!(reference.as_slice()));
        }
        for (r, se) in records.iter().zip(&self.entropy_std_err) {
            t.push(vec![
                r.step.into(),
                r.gates.into(),
                r.entropy.into(),
                (*se).into(),
                r.entropy_qft.into(),
                r.wasserstein_w1.into(),
                r.unitarity_defect.into(),
            ]);
        }
        t
    }
}
