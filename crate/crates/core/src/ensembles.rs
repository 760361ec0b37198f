//! Seeded samplers for the Ginibre, Gaussian-Hermitian and Haar (CUE) ensembles.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{householder_qr, ComplexMatrix, HermitianMatrix};
use crate::rng::{normal, RngSeed};
use crate::scalar::Real;

/// Whether the Gaussian entries carry an imaginary part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntryField {
    #[default]
    Complex,
    /// Real entries; `(A + A^T)/2` is then real symmetric.
    Real,
}

/// Smallest `|R_kk|` accepted before a Haar draw is retried on the next sub-stream.
pub const HAAR_PIVOT_FLOOR: f64 = 1e-300;
const HAAR_MAX_RETRIES: u64 = 64;

/// `n x n` matrix with i.i.d. `Normal(0, variance_per_component)` real and
/// imaginary parts.
pub fn sample_ginibre<T: Real>(
    n: usize,
    variance_per_component: f64,
    seed: RngSeed,
) -> Result<ComplexMatrix<T>> {
    sample_gaussian_matrix(n, variance_per_component, seed, EntryField::Complex)
}

pub fn sample_gaussian_matrix<T: Real>(
    n: usize,
    variance_per_component: f64,
    seed: RngSeed,
    field: EntryField,
) -> Result<ComplexMatrix<T>> {
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    if !(variance_per_component > 0.0) || !variance_per_component.is_finite() {
        return Err(Error::NonPositiveVariance(variance_per_component));
    }
    let sd = variance_per_component.sqrt();
    let mut rng = seed.rng();
    let data = (0..n * n)
        .map(|_| {
            let re = normal::<T, _>(&mut rng, sd);
            let im = match field {
                EntryField::Complex => normal::<T, _>(&mut rng, sd),
                EntryField::Real => T::zero(),
            };
            Complex::new(re, im)
        })
        .collect();
    ComplexMatrix::new(n, n, data)
}

/// `(A + A^†)/2` for a fresh Ginibre draw `A`.
pub fn sample_hermitian<T: Real>(
    n: usize,
    variance_per_component: f64,
    seed: RngSeed,
) -> Result<HermitianMatrix<T>> {
    sample_hermitian_with(n, variance_per_component, seed, EntryField::Complex)
}

pub fn sample_hermitian_with<T: Real>(
    n: usize,
    variance_per_component: f64,
    seed: RngSeed,
    field: EntryField,
) -> Result<HermitianMatrix<T>> {
    let a = sample_gaussian_matrix(n, variance_per_component, seed, field)?;
    HermitianMatrix::hermitian_part(&a)
}

/// Haar-distributed unitary: `Q Λ` from the QR factorization of a standard
/// Ginibre draw, `Λ = diag(R_kk/|R_kk|)`.
///
/// A draw with `|R_kk| < 1e-300` is discarded and redrawn from the next
/// sub-stream of `seed`.
pub fn sample_haar_unitary<T: Real>(n: usize, seed: RngSeed) -> Result<ComplexMatrix<T>> {
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    let floor = T::of(HAAR_PIVOT_FLOOR).max(T::min_positive_value());
    for attempt in 0..HAAR_MAX_RETRIES {
        let s = if attempt == 0 {
            seed
        } else {
            seed.child(attempt)
        };
        let a = sample_ginibre::<T>(n, 0.5, s)?;
        let qr = householder_qr(&a)?;
        if let Some(u) = qr.phase_fixed_q(floor) {
            return Ok(u);
        }
    }
    Err(Error::NoConvergence(HAAR_MAX_RETRIES as usize))
}

/// Haar-random pure state `U|0>`.
///
/// The first column of `Q Λ` is the first Ginibre column divided by its norm,
/// so a normalized complex Gaussian vector has the same law and costs `O(n)`
/// instead of a full factorization.
pub fn sample_haar_state<T: Real>(n: usize, seed: RngSeed) -> Result<Vec<Complex<T>>> {
    if n == 0 {
        return Err(Error::Dimension { min: 1, got: 0 });
    }
    let mut rng = seed.rng();
    loop {
        let v: Vec<Complex<T>> = (0..n)
            .map(|_| Complex::new(normal::<T, _>(&mut rng, 1.0), normal::<T, _>(&mut rng, 1.0)))
            .collect();
        let norm = v
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |s, x| s + x)
            .sqrt();
        if norm > T::min_positive_value() {
            return Ok(v.into_iter().map(|a| a / norm).collect());
        }
    }
}
