//! Continuous random walk on U(N): `U(t + dt) = exp(i dt/hbar H(t)) U(t)`
//! with a fresh Gaussian Hermitian `H(t)` each step.
//!
//! The default integrator is the second-order truncation
//! `[I + i(dt/hbar)H - (dt/hbar)^2 H^2 / 2] U`, which is not exactly unitary:
//! `M^† M = I + (dt H)^4 / 4`, so the defect grows linearly in the step count.
//! Periodic QR re-unitarization and an exact exponential are available.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::ensembles::{sample_hermitian_with, EntryField};
use crate::entropy::entropy_of_slice;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigh, reunitarize, ComplexMatrix, HermitianMatrix};
use crate::rng::RngSeed;
use crate::scalar::Real;
use crate::spectral::{eigenphases_with_tolerance, match_trajectories, Matching, TrajectoryFrame};
use crate::state::StateVector;

/// Unitarity defect tolerated when extracting eigenphases mid-run.
pub const TRAJECTORY_UNITARITY_TOL: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrator {
    #[default]
    SecondOrder,
    /// `V diag(exp(i dt lambda / hbar)) V^†` from a Hermitian eigendecomposition.
    ExactExponential,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DysonConfig {
    pub dim: usize,
    pub sigma: f64,
    pub dt: f64,
    pub steps: usize,
    pub hbar: f64,
    /// Re-unitarize after every `k` steps; `None` follows the truncated scheme literally.
    pub renormalize_every: Option<usize>,
    /// Emit a frame after every `k` steps.
    pub record_every: usize,
    pub integrator: Integrator,
    pub matching: Matching,
    pub seed: RngSeed,
    #[serde(skip)]
    pub entries: EntryField,
}

impl DysonConfig {
    pub fn new(dim: usize, seed: RngSeed) -> Self {
        Self {
            dim,
            sigma: 1.0,
            dt: 0.01,
            steps: 60_000,
            hbar: 1.0,
            renormalize_every: None,
            record_every: 1,
            integrator: Integrator::SecondOrder,
            matching: Matching::Greedy,
            seed,
            entries: EntryField::Complex,
        }
    }

    /// Real and imaginary variance of the driving Ginibre entries, `sigma^2 / 2N`.
    pub fn component_variance(&self) -> f64 {
        self.sigma * self.sigma / (2.0 * self.dim as f64)
    }

    fn validate_step(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::Dimension {
                min: 2,
                got: self.dim,
            });
        }
        if !(self.sigma > 0.0) || !self.sigma.is_finite() {
            return Err(Error::Config(format!(
                "sigma must be positive, got {}",
                self.sigma
            )));
        }
        if !(self.hbar > 0.0) || !self.hbar.is_finite() {
            return Err(Error::Config(format!(
                "hbar must be positive, got {}",
                self.hbar
            )));
        }
        if !(self.dt >= 0.0) || !self.dt.is_finite() {
            return Err(Error::Config(format!(
                "dt must be non-negative, got {}",
                self.dt
            )));
        }
        if self.renormalize_every == Some(0) {
            return Err(Error::Config("renormalize_every must be at least 1".into()));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_step()?;
        if !(self.dt > 0.0) {
            return Err(Error::Config(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        if self.record_every == 0 {
            return Err(Error::Config("record_every must be at least 1".into()));
        }
        Ok(())
    }

    /// Hamiltonian driving step `step_index`.
    pub fn hamiltonian<T: Real>(&self, step_index: usize) -> Result<HermitianMatrix<T>> {
        sample_hermitian_with(
            self.dim,
            self.component_variance(),
            self.seed.child(step_index as u64),
            self.entries,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DysonFrame<T> {
    pub step: usize,
    pub time: T,
    pub unitarity_defect: T,
    pub phases: TrajectoryFrame<T>,
    /// Shannon entropy (nats) of `U(t)|psi_0>`, renormalized to unit probability.
    pub entropy: T,
}

/// `[I + i X - X^2/2]` or `exp(i X)` with `X = (dt/hbar) H`.
pub fn step_propagator<T: Real>(
    h: &HermitianMatrix<T>,
    dt: f64,
    hbar: f64,
    integrator: Integrator,
) -> Result<ComplexMatrix<T>> {
    let n = h.dim();
    let tau = T::of(dt / hbar);
    match integrator {
        Integrator::SecondOrder => {
            let x = h.as_matrix().scale(Complex::new(tau, T::zero()));
            let x2 = x.matmul(&x)?;
            let mut m = ComplexMatrix::identity(n);
            let half = T::of(0.5);
            for (mij, (xij, x2ij)) in m
                .entries_mut()
                .iter_mut()
                .zip(x.entries().iter().zip(x2.entries()))
            {
                *mij = *mij + Complex::new(-xij.im, xij.re) - *x2ij * half;
            }
            Ok(m)
        }
        Integrator::ExactExponential => {
            let (vals, vecs) = hermitian_eigh(h)?;
            let mut scaled = vecs.clone();
            for (k, &lambda) in vals.iter().enumerate() {
                let phase = Complex::from_polar(T::one(), tau * lambda);
                for i in 0..n {
                    scaled[(i, k)] = scaled[(i, k)] * phase;
                }
            }
            scaled.matmul(&vecs.adjoint())
        }
    }
}

/// Advance `u` by one step of the walk.
pub fn dyson_step<T: Real>(
    u: &ComplexMatrix<T>,
    cfg: &DysonConfig,
    step_index: usize,
) -> Result<ComplexMatrix<T>> {
    cfg.validate_step()?;
    if u.rows() != cfg.dim || u.cols() != cfg.dim {
        return Err(Error::Shape(format!(
            "{}x{} matrix for dimension {}",
            u.rows(),
            u.cols(),
            cfg.dim
        )));
    }
    let h = cfg.hamiltonian::<T>(step_index)?;
    let m = step_propagator(&h, cfg.dt, cfg.hbar, cfg.integrator)?;
    let next = m.matmul(u)?;
    match cfg.renormalize_every {
        Some(k) if (step_index + 1).is_multiple_of(k) => reunitarize(&next),
        _ => Ok(next),
    }
}

fn column_entropy<T: Real>(u: &ComplexMatrix<T>, psi0: &StateVector<T>) -> Result<T> {
    let psi = u.mul_vec(psi0.amplitudes())?;
    let p: Vec<T> = psi.iter().map(|a| a.norm_sqr()).collect();
    let total: T = p.iter().copied().sum();
    let p: Vec<T> = p.into_iter().map(|x| x / total).collect();
    Ok(entropy_of_slice(&p))
}

/// Run the walk from `U(0) = I`, handing each recorded frame to `sink`.
pub fn run_dyson_with<T: Real>(
    cfg: &DysonConfig,
    initial_state: &StateVector<T>,
    mut sink: impl FnMut(&DysonFrame<T>),
) -> Result<ComplexMatrix<T>> {
    cfg.validate()?;
    if initial_state.dim() != cfg.dim {
        return Err(Error::Shape(format!(
            "initial state of dimension {} for N = {}",
            initial_state.dim(),
            cfg.dim
        )));
    }
    let dt = T::of(cfg.dt);
    let mut u = ComplexMatrix::<T>::identity(cfg.dim);
    let mut trajectory = TrajectoryFrame::initial(
        T::zero(),
        &eigenphases_with_tolerance(&u, TRAJECTORY_UNITARITY_TOL)?,
    );
    sink(&DysonFrame {
        step: 0,
        time: T::zero(),
        unitarity_defect: u.unitarity_defect(),
        phases: trajectory.clone(),
        entropy: column_entropy(&u, initial_state)?,
    });
    for k in 0..cfg.steps {
        u = dyson_step(&u, cfg, k)?;
        let step = k + 1;
        if step % cfg.record_every != 0 {
            continue;
        }
        let time = dt * T::of_usize(step);
        let phases =
            eigenphases_with_tolerance(&u, TRAJECTORY_UNITARITY_TOL).map_err(|e| match e {
                Error::NotUnitary(defect) => Error::UnitarityDrift { step, defect },
                other => other,
            })?;
        trajectory = match_trajectories(&trajectory, &phases, time, cfg.matching)?;
        sink(&DysonFrame {
            step,
            time,
            unitarity_defect: u.unitarity_defect(),
            phases: trajectory.clone(),
            entropy: column_entropy(&u, initial_state)?,
        });
    }
    Ok(u)
}

pub fn run_dyson<T: Real>(
    cfg: &DysonConfig,
    initial_state: &StateVector<T>,
) -> Result<Vec<DysonFrame<T>>> {
    let mut frames = Vec::with_capacity(cfg.steps / cfg.record_every.max(1) + 1);
    run_dyson_with(cfg, initial_state, |f| frames.push(f.clone()))?;
    Ok(frames)
}

/// First index from which `series` stays at or above `reference - tolerance`
/// for `sustain` consecutive entries.
pub fn crossing_index(
    series: &[f64],
    reference: f64,
    tolerance: f64,
    sustain: usize,
) -> Option<usize> {
    let floor = reference - tolerance;
    let sustain = sustain.max(1);
    let mut run = 0;
    for (i, &x) in series.iter().enumerate() {
        if x >= floor {
            run += 1;
            if run == sustain {
                return Some(i + 1 - sustain);
            }
        } else {
            run = 0;
        }
    }
    None
}
