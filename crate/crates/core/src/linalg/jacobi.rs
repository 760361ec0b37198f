//! Cyclic Jacobi eigensolver for Hermitian matrices.

use num_complex::Complex;

use super::{ComplexMatrix, HermitianMatrix};
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and orthonormal eigenvectors (as columns) of a
/// Hermitian matrix.
pub fn hermitian_eigh<T: Real>(h: &HermitianMatrix<T>) -> Result<(Vec<T>, ComplexMatrix<T>)> {
    let n = h.dim();
    let mut a = h.as_matrix().clone();
    let mut v = ComplexMatrix::<T>::identity(n);

    let total: T = a.entries().iter().map(|x| x.norm_sqr()).sum();
    let tol = T::epsilon() * T::epsilon() * total.max(T::min_positive_value());

    let mut converged = n <= 1;
    for _ in 0..MAX_SWEEPS {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, k| v[(r, order[k])]);
    Ok((values, vectors))
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == T::zero() {
        return;
    }
    let n = a.rows();
    let phase = apq / mag; // e^{i phi}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (T::of(2.0) * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let cth = T::one() / (t * t + T::one()).sqrt();
    let sth = t * cth;

    // G = diag(1, e^{-i phi}) [[c, s], [-s, c]]
    let g_qp = -phase.conj() * sth;
    let g_qq = phase.conj() * cth;

    // A <- A G
    for i in 0..n {
        let x = a[(i, p)];
        let y = a[(i, q)];
        a[(i, p)] = x * cth + y * g_qp;
        a[(i, q)] = x * sth + y * g_qq;
    }
    // A <- G^H A
    for j in 0..n {
        let x = a[(p, j)];
        let y = a[(q, j)];
        a[(p, j)] = x * cth + y * g_qp.conj();
        a[(q, j)] = x * sth + y * g_qq.conj();
    }
    for i in 0..n {
        let x = v[(i, p)];
        let y = v[(i, q)];
        v[(i, p)] = x * cth + y * g_qp;
        v[(i, q)] = x * sth + y * g_qq;
    }
    a[(p, q)] = czero();
    a[(q, p)] = czero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
}
