//! Eigenphases of unitaries, order-statistic Wasserstein distances, and
//! continuation of eigenphase trajectories across time steps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, ComplexMatrix};
use crate::scalar::Real;

/// Largest unitarity defect accepted by [`eigenphases`].
pub const EIGENPHASE_UNITARITY_TOL: f64 = 1e-6;

/// Map an angle into `(-pi, pi]`.
pub fn wrap_phase<T: Real>(x: T) -> T {
    let pi = T::PI();
    let two_pi = pi + pi;
    let mut y = x - two_pi * ((x + pi) / two_pi).floor();
    // y in [-pi, pi); move the closed end to +pi
    if y <= -pi {
        y += two_pi;
    }
    if y > pi {
        y -= two_pi;
    }
    y
}

/// Sorted eigenvalue arguments, each in `(-pi, pi]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPhases<T> {
    phases: Vec<T>,
}

impl<T: Real> EigenPhases<T> {
    pub fn new(mut phases: Vec<T>) -> Result<Self> {
        let pi = T::PI();
        if let Some(bad) = phases.iter().find(|x| !(**x > -pi && **x <= pi)) {
            return Err(Error::OutOfRange {
                value: bad.as_f64(),
                range: "(-pi, pi]",
            });
        }
        phases.sort_by(|a, b| a.partial_cmp(b).expect("finite phases"));
        Ok(Self { phases })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }
}

/// Eigenphases of a (near-)unitary matrix; rejects a unitarity defect above
/// [`EIGENPHASE_UNITARITY_TOL`].
pub fn eigenphases<T: Real>(u: &ComplexMatrix<T>) -> Result<EigenPhases<T>> {
    eigenphases_with_tolerance(u, EIGENPHASE_UNITARITY_TOL.max(T::NORM_TOL))
}

/// As [`eigenphases`] with a caller-chosen unitarity tolerance, for long
/// unrenormalized integrations whose drift exceeds the default.
pub fn eigenphases_with_tolerance<T: Real>(
    u: &ComplexMatrix<T>,
    max_defect: f64,
) -> Result<EigenPhases<T>> {
    if !u.is_square() {
        return Err(Error::Shape(format!(
            "{}x{} is not square",
            u.rows(),
            u.cols()
        )));
    }
    let defect = u.unitarity_defect().as_f64();
    if !(defect <= max_defect) {
        return Err(Error::NotUnitary(defect));
    }
    let vals = eigenvalues(u)?;
    EigenPhases::new(vals.iter().map(|z| wrap_phase(z.im.atan2(z.re))).collect())
}

/// How the order-statistic sum is scaled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WassersteinScale {
    /// `(sum_i |x_(i) - y_(i)|^p)^(1/p)`.
    #[default]
    Sum,
    /// `((1/n) sum_i |x_(i) - y_(i)|^p)^(1/p)`.
    Mean,
}

/// `p`-Wasserstein distance between two equal-size empirical samples on the line.
pub fn wasserstein_order_stat<T: Real>(
    xs: &[T],
    ys: &[T],
    p: f64,
    scale: WassersteinScale,
) -> Result<T> {
    if xs.len() != ys.len() {
        return Err(Error::Shape(format!(
            "sample sizes {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.is_empty() {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::InvalidOrder(p));
    }
    let sorted = |v: &[T]| {
        let mut s = v.to_vec();
        s.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
        s
    };
    let (a, b) = (sorted(xs), sorted(ys));
    let pp = T::of(p);
    let mut total: T = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (*x - *y).abs().powf(pp))
        .sum();
    if scale == WassersteinScale::Mean {
        total /= T::of_usize(a.len());
    }
    Ok(if p == 1.0 {
        total
    } else {
        total.powf(T::one() / pp)
    })
}

/// Order-1 Wasserstein distance between two eigenphase sets, literal sum form.
pub fn wasserstein_to_cue<T: Real>(
    phases: &EigenPhases<T>,
    reference: &EigenPhases<T>,
) -> Result<T> {
    wasserstein_order_stat(
        phases.as_slice(),
        reference.as_slice(),
        1.0,
        WassersteinScale::Sum,
    )
}

/// Eigenphases at one time, ordered by trajectory label.
///
/// Values are unwrapped: a trajectory crossing the `+-pi` seam keeps
/// increasing (or decreasing) instead of jumping by `2 pi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryFrame<T> {
    pub time: T,
    pub phases: Vec<T>,
}

impl<T: Real> TrajectoryFrame<T> {
    /// First frame: trajectories labelled by ascending phase.
    pub fn initial(time: T, phases: &EigenPhases<T>) -> Self {
        Self {
            time,
            phases: phases.as_slice().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Matching {
    /// Repeatedly take the closest unassigned (trajectory, phase) pair.
    #[default]
    Greedy,
    /// Minimum total circular distance (Hungarian algorithm).
    Optimal,
}

fn circular_gap<T: Real>(from: T, to: T) -> T {
    wrap_phase(to - from)
}

/// Continue each trajectory of `prev` with one of `next_phases`.
pub fn match_trajectories<T: Real>(
    prev: &TrajectoryFrame<T>,
    next_phases: &EigenPhases<T>,
    time: T,
    matching: Matching,
) -> Result<TrajectoryFrame<T>> {
    let n = prev.phases.len();
    if next_phases.len() != n {
        return Err(Error::Shape(format!(
            "{} trajectories, {} phases",
            n,
            next_phases.len()
        )));
    }
    let next = next_phases.as_slice();
    let cost = |i: usize, j: usize| circular_gap(prev.phases[i], next[j]).abs().as_f64();
    let assignment = match matching {
        Matching::Greedy => greedy_assignment(n, cost),
        Matching::Optimal => hungarian(n, cost),
    };
    let phases = (0..n)
        .map(|i| prev.phases[i] + circular_gap(prev.phases[i], next[assignment[i]]))
        .collect();
    Ok(TrajectoryFrame { time, phases })
}

fn greedy_assignment(n: usize, cost: impl Fn(usize, usize) -> f64) -> Vec<usize> {
    let mut pairs: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (cost(i, j), i, j))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut row = vec![usize::MAX; n];
    let mut col_used = vec![false; n];
    let mut left = n;
    for (_, i, j) in pairs {
        if left == 0 {
            break;
        }
        if row[i] == usize::MAX && !col_used[j] {
            row[i] = j;
            col_used[j] = true;
            left -= 1;
        }
    }
    row
}

/// Kuhn-Munkres with potentials, O(n^3). Returns `assignment[row] = col`.
fn hungarian(n: usize, cost: impl Fn(usize, usize) -> f64) -> Vec<usize> {
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            assignment[p[j] - 1] = j - 1;
        }
    }
    assignment
}
