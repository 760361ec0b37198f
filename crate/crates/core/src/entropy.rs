//! Shannon entropy of measurement distributions, the Porter-Thomas law for
//! Haar-random states, and the computational/Fourier entropic uncertainty.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qft::qft;
use crate::scalar::Real;
use crate::state::StateVector;
use crate::stats::ks_statistic;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Tolerance on `sum p_i = 1` for caller-supplied probability vectors.
pub const PROBABILITY_SUM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T> {
    p: Vec<T>,
}

impl<T: Real> ProbabilityVector<T> {
    pub fn new(p: Vec<T>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        if let Some(bad) = p.iter().find(|x| !(**x >= T::zero())) {
            return Err(Error::OutOfRange {
                value: bad.as_f64(),
                range: "[0, 1]",
            });
        }
        let total: T = p.iter().copied().sum();
        if !((total - T::one()).abs().as_f64() <= PROBABILITY_SUM_TOL.max(T::NORM_TOL * 1e-2)) {
            return Err(Error::NotNormalized((total - T::one()).abs().as_f64()));
        }
        Ok(Self { p })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

/// `p_i = |a_i|^2`.
pub fn probabilities_of<T: Real>(state: &StateVector<T>) -> Result<ProbabilityVector<T>> {
    let defect = state.norm_defect().as_f64();
    if !(defect <= T::NORM_TOL) {
        return Err(Error::NotNormalized(defect));
    }
    Ok(ProbabilityVector {
        p: state.amplitudes().iter().map(|a| a.norm_sqr()).collect(),
    })
}

/// `-sum p_i ln p_i` in nats, with `0 ln 0 = 0`.
pub fn shannon_entropy<T: Real>(p: &ProbabilityVector<T>) -> T {
    entropy_of_slice(&p.p)
}

pub(crate) fn entropy_of_slice<T: Real>(p: &[T]) -> T {
    p.iter()
        .filter(|&&x| x > T::zero())
        .fold(T::zero(), |h, &x| h - x * x.ln())
}

/// Entropy of `|a_i|^2` without the normalization check.
pub fn state_entropy<T: Real>(state: &StateVector<T>) -> T {
    state
        .amplitudes()
        .iter()
        .map(|a| a.norm_sqr())
        .filter(|&x| x > T::zero())
        .fold(T::zero(), |h, x| h - x * x.ln())
}

/// Large-`N` mean entropy of Haar-random states, `ln N - 1 + gamma`.
pub fn haar_mean_entropy(dim: usize) -> Result<f64> {
    if dim < 2 {
        return Err(Error::Dimension { min: 2, got: dim });
    }
    Ok((dim as f64).ln() - 1.0 + EULER_GAMMA)
}

/// Exact mean entropy of Haar-random states at finite `N`:
/// `sum_{k=2}^{N} 1/k`. Exceeds [`haar_mean_entropy`] by about `1/(2N)`.
pub fn haar_mean_entropy_exact(dim: usize) -> Result<f64> {
    if dim < 2 {
        return Err(Error::Dimension { min: 2, got: dim });
    }
    Ok((2..=dim).rev().map(|k| 1.0 / k as f64).sum())
}

fn check_pt_args(p: f64, dim: usize) -> Result<()> {
    if dim < 2 {
        return Err(Error::Dimension { min: 2, got: dim });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            value: p,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// Porter-Thomas density `(N-1)(1-p)^(N-2)`.
pub fn porter_thomas_pdf(p: f64, dim: usize) -> Result<f64> {
    check_pt_args(p, dim)?;
    Ok((dim - 1) as f64 * (1.0 - p).powi(dim as i32 - 2))
}

/// `1 - (1-p)^(N-1)`.
pub fn porter_thomas_cdf(p: f64, dim: usize) -> Result<f64> {
    check_pt_args(p, dim)?;
    Ok(1.0 - (1.0 - p).powi(dim as i32 - 1))
}

/// KS statistic of the entries of `p` against the Porter-Thomas CDF for `N = p.len()`.
pub fn porter_thomas_fit<T: Real>(p: &ProbabilityVector<T>) -> f64 {
    let xs: Vec<f64> = p.p.iter().map(|x| x.as_f64()).collect();
    porter_thomas_ks(&xs, p.len())
}

/// KS statistic of pooled probabilities drawn from states of dimension `dim`.
pub fn porter_thomas_ks(probabilities: &[f64], dim: usize) -> f64 {
    let m = (dim.max(2) - 1) as i32;
    ks_statistic(probabilities, |x| 1.0 - (1.0 - x.clamp(0.0, 1.0)).powi(m))
}

/// Entropies of a state in the computational and Fourier bases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyRecord {
    pub h_computational: f64,
    pub h_qft: f64,
    pub uncertainty_sum: f64,
    /// `-2 ln c` with `c = 1/sqrt(N)`, i.e. `ln N`.
    pub bound: f64,
}

pub fn entropic_uncertainty<T: Real>(state: &StateVector<T>) -> Result<EntropyRecord> {
    let h_p = shannon_entropy(&probabilities_of(state)?).as_f64();
    let h_q = shannon_entropy(&probabilities_of(&qft(state))?).as_f64();
    let c = 1.0 / (state.dim() as f64).sqrt();
    Ok(EntropyRecord {
        h_computational: h_p,
        h_qft: h_q,
        uncertainty_sum: h_p + h_q,
        bound: -2.0 * c.ln(),
    })
}
