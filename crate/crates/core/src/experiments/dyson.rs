//! Dyson-Brownian walk: eigenphase trajectories and entropy per frame.

use super::{tags, trial_seed, Cell, ExperimentConfig, Table};
use crate::dyson::{crossing_index, run_dyson, DysonConfig, DysonFrame};
use crate::entropy::{haar_mean_entropy, haar_mean_entropy_exact};
use crate::error::Result;
use crate::state::StateVector;
use crate::stats;

/// Frames averaged for the steady-state summary.
pub const TAIL_FRAMES: usize = 500;
/// Band half-width and run length used to locate the steady state.
pub const BAND: f64 = 0.1;
pub const SUSTAIN: usize = 10;

pub fn dyson_config(cfg: &ExperimentConfig) -> DysonConfig {
    let mut d = DysonConfig::new(cfg.dim, trial_seed(cfg.seed, tags::DYSON, 0));
    d.sigma = cfg.sigma;
    d.dt = cfg.dt;
    d.steps = cfg.steps;
    d.renormalize_every = cfg.renormalize_every;
    d.record_every = cfg.record_every;
    d.integrator = cfg.integrator;
    d
}

pub fn exp_dyson(cfg: &ExperimentConfig) -> Result<Table> {
    let d = dyson_config(cfg);
    let frames: Vec<DysonFrame<f64>> = run_dyson(&d, &StateVector::basis(d.dim, 0)?)?;

    let mut columns = vec![
        "step".to_string(),
        "time".into(),
        "entropy".into(),
        "unitarity_defect".into(),
    ];
    columns.extend((0..d.dim).map(|i| format!("phase_{i}")));
    let mut t = Table::new(columns);

    let entropy: Vec<f64> = frames.iter().map(|f| f.entropy).collect();
    let reference = haar_mean_entropy(d.dim)?;
    let tail = &entropy[entropy.len().saturating_sub(TAIL_FRAMES)..];
    t.meta("dim", d.dim);
    t.meta("component_variance", d.component_variance());
    t.meta("frames", frames.len());
    t.meta("reference_entropy", reference);
    t.meta("reference_entropy_exact", haar_mean_entropy_exact(d.dim)?);
    t.meta(
        "crossing_step",
        crossing_index(&entropy, reference, BAND, SUSTAIN).map(|i| frames[i].step),
    );
    t.meta("tail_frames", tail.len());
    t.meta("tail_mean_entropy", stats::mean(tail));
    t.meta(
        "tail_std_entropy",
        if tail.len() > 1 {
            stats::std_dev(tail)
        } else {
            0.0
        },
    );
    t.meta(
        "max_unitarity_defect",
        frames
            .iter()
            .map(|f| f.unitarity_defect)
            .fold(0.0, f64::max),
    );

    for f in &frames {
        let mut row: Vec<Cell> = vec![
            f.step.into(),
            f.time.into(),
            f.entropy.into(),
            f.unitarity_defect.into(),
        ];
        row.extend(f.phases.phases.iter().map(|&p| Cell::Float(p)));
        t.push(row);
    }
    Ok(t)
}
