//! Distribution of `N p_i` against Porter-Thomas.

use rayon::prelude::*;

use super::{tags, trial_seed, Cell, ExperimentConfig, StateSource, Table};
use crate::circuit::{build_random_circuit, run_circuit, CircuitSpec};
use crate::ensembles::sample_haar_state;
use crate::entropy::porter_thomas_ks;
use crate::error::{Error, Result};
use crate::state::StateVector;
use crate::stats::{self, ks_critical_value};

use super::cutoff::MAX_STATE_QUBITS;

pub const MIN_DIM: usize = 16;
pub const KS_ALPHA: f64 = 0.05;
/// Histogram range of `N p`.
pub const HISTOGRAM_MAX: f64 = 10.0;

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub density: f64,
    pub porter_thomas: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PorterThomasReport {
    pub dim: usize,
    /// KS statistic of each trial's `N` probabilities.
    pub per_trial_ks: Vec<f64>,
    /// 5% critical value for a sample of size `N`.
    pub critical_value: f64,
    pub pooled_ks: f64,
    pub histogram: Vec<HistogramBin>,
    /// Pooled values of `N p` at or beyond [`HISTOGRAM_MAX`].
    pub overflow: usize,
}

impl PorterThomasReport {
    pub fn pass_rate(&self) -> f64 {
        let pass = self
            .per_trial_ks
            .iter()
            .filter(|&&d| d <= self.critical_value)
            .count();
        pass as f64 / self.per_trial_ks.len() as f64
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new([
            "bin_lo",
            "bin_hi",
            "count",
            "density",
            "porter_thomas_density",
        ]);
        t.meta("dim", self.dim);
        t.meta("trials", self.per_trial_ks.len());
        t.meta("ks_critical_value", self.critical_value);
        t.meta("ks_mean", stats::mean(&self.per_trial_ks));
        t.meta("ks_pass_rate", self.pass_rate());
        t.meta("pooled_ks", self.pooled_ks);
        t.meta("overflow", self.overflow);
        for b in &self.histogram {
            t.push(vec![
                b.lo.into(),
                b.hi.into(),
                b.count.into(),
                b.density.into(),
                Cell::Float(b.porter_thomas),
            ]);
        }
        t
    }
}

fn trial_probabilities(cfg: &ExperimentConfig, trial: usize) -> Result<Vec<f64>> {
    let n = cfg.qubits;
    let state = match cfg.source {
        StateSource::Haar => {
            let amps =
                sample_haar_state::<f64>(1 << n, trial_seed(cfg.seed, tags::HAAR_STATE, trial))?;
            StateVector::from_amplitudes(amps)?
        }
        StateSource::Circuit => {
            let spec = CircuitSpec::with_topology(
                n,
                cfg.cycles,
                cfg.topology,
                trial_seed(cfg.seed, tags::CIRCUIT, trial),
            );
            let mut s = StateVector::zero_state(n);
            run_circuit(&mut s, &build_random_circuit(&spec)?)?;
            s
        }
    };
    Ok(state.amplitudes().iter().map(|a| a.norm_sqr()).collect())
}

pub fn exp_porter_thomas(cfg: &ExperimentConfig) -> Result<PorterThomasReport> {
    let n = cfg.qubits;
    if n > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits {
            max: MAX_STATE_QUBITS,
            got: n,
        });
    }
    let dim = 1usize << n;
    if dim < MIN_DIM {
        return Err(Error::Dimension {
            min: MIN_DIM,
            got: dim,
        });
    }
    cfg.require_trials()?;
    if cfg.bins == 0 {
        return Err(Error::Config("--bins must be at least 1".into()));
    }

    let probs: Vec<Vec<f64>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| trial_probabilities(cfg, t))
        .collect::<Result<_>>()?;
    let per_trial_ks: Vec<f64> = probs.iter().map(|p| porter_thomas_ks(p, dim)).collect();
    let pooled: Vec<f64> = probs.concat();
    let pooled_ks = porter_thomas_ks(&pooled, dim);

    let width = HISTOGRAM_MAX / cfg.bins as f64;
    let mut counts = vec![0usize; cfg.bins];
    let mut overflow = 0;
    for &p in &pooled {
        let x = p * dim as f64;
        let k = (x / width) as usize;
        match counts.get_mut(k) {
            Some(c) => *c += 1,
            None => overflow += 1,
        }
    }
    // Exact law of x = N p: P(x <= t) = 1 - (1 - t/N)^(N-1).
    let cdf = |t: f64| 1.0 - (1.0 - (t / dim as f64).min(1.0)).powi(dim as i32 - 1);
    let total = pooled.len() as f64;
    let histogram = counts
        .into_iter()
        .enumerate()
        .map(|(k, count)| {
            let lo = k as f64 * width;
            let hi = lo + width;
            HistogramBin {
                lo,
                hi,
                count,
                density: count as f64 / (total * width),
                porter_thomas: (cdf(hi) - cdf(lo)) / width,
            }
        })
        .collect();

    Ok(PorterThomasReport {
        dim,
        per_trial_ks,
        critical_value: ks_critical_value(dim, KS_ALPHA),
        pooled_ks,
        histogram,
        overflow,
    })
}
