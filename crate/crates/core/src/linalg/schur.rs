//! Complex Schur decomposition by Householder reduction to upper Hessenberg
//! form followed by single-shift QR iteration with Wilkinson shifts.

use num_complex::Complex;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// `A = Z T Z^†` with `T` upper triangular.
#[derive(Debug, Clone)]
pub struct Schur<T> {
    pub t: ComplexMatrix<T>,
    pub z: Option<ComplexMatrix<T>>,
}

impl<T: Real> Schur<T> {
    pub fn eigenvalues(&self) -> Vec<Complex<T>> {
        (0..self.t.rows()).map(|i| self.t[(i, i)]).collect()
    }
}

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

fn hessenberg<T: Real>(h: &mut ComplexMatrix<T>, z: &mut Option<ComplexMatrix<T>>) {
    let n = h.rows();
    let two = T::of(2.0);
    let mut v = vec![czero::<T>(); n];
    for k in 0..n.saturating_sub(2) {
        let norm_x = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<T>().sqrt();
        if norm_x == T::zero() {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == T::zero() {
            cone()
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm_x;
        for i in k + 1..n {
            v[i] = h[(i, k)];
        }
        v[k + 1] = v[k + 1] - alpha;
        let vnorm2: T = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm2 == T::zero() {
            continue;
        }
        let beta = two / vnorm2;

        // H <- P H
        for j in k..n {
            let mut s = czero::<T>();
            for i in k + 1..n {
                s = s + v[i].conj() * h[(i, j)];
            }
            let s = s * beta;
            for i in k + 1..n {
                h[(i, j)] = h[(i, j)] - v[i] * s;
            }
        }
        // H <- H P
        for i in 0..n {
            let mut s = czero::<T>();
            for l in k + 1..n {
                s = s + h[(i, l)] * v[l];
            }
            let s = s * beta;
            for l in k + 1..n {
                h[(i, l)] = h[(i, l)] - s * v[l].conj();
            }
        }
        if let Some(z) = z.as_mut() {
            for i in 0..n {
                let mut s = czero::<T>();
                for l in k + 1..n {
                    s = s + z[(i, l)] * v[l];
                }
                let s = s * beta;
                for l in k + 1..n {
                    z[(i, l)] = z[(i, l)] - s * v[l].conj();
                }
            }
        }
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = czero();
        }
    }
}

/// Givens pair `(c, s)` with real `c` such that
/// `[[c, s], [-conj(s), c]] * [a, b]^T = [r, 0]^T`.
fn givens<T: Real>(a: Complex<T>, b: Complex<T>) -> (T, Complex<T>) {
    let na = a.norm();
    let nb = b.norm();
    if nb == T::zero() {
        return (T::one(), czero());
    }
    if na == T::zero() {
        return (T::zero(), cone());
    }
    let r = na.hypot(nb);
    let c = na / r;
    let s = (a / na) * b.conj() / r;
    (c, s)
}

fn wilkinson_shift<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> Complex<T> {
    let half = T::of(0.5);
    let delta = (a - d) * half;
    let bc = b * c;
    let disc = (delta * delta + bc).sqrt();
    let den1 = delta + disc;
    let den2 = delta - disc;
    let den = if den1.norm() >= den2.norm() {
        den1
    } else {
        den2
    };
    if den.norm() == T::zero() {
        d
    } else {
        d - bc / den
    }
}

/// Schur form of a square complex matrix. When `want_vectors` is set the
/// unitary `Z` is accumulated as well.
pub fn complex_schur<T: Real>(a: &ComplexMatrix<T>, want_vectors: bool) -> Result<Schur<T>> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "eigen-decomposition of {}x{} (square only)",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut h = a.clone();
    let mut z = want_vectors.then(|| ComplexMatrix::identity(n));
    hessenberg(&mut h, &mut z);

    let eps = T::epsilon();
    let scale = h.max_abs().max(T::min_positive_value());
    let max_iter = MAX_SWEEPS_PER_EIGENVALUE * n.max(1);
    let mut total_iter = 0usize;
    let mut iter_since_deflation = 0usize;
    let mut rot: Vec<(T, Complex<T>)> = Vec::with_capacity(n);

    let mut hi = n.saturating_sub(1);
    while hi > 0 {
        // Locate the start of the unreduced block ending at `hi`.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if diag == T::zero() {
                diag = scale;
            }
            if sub <= eps * diag {
                h[(lo, lo - 1)] = czero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter_since_deflation = 0;
            continue;
        }

        total_iter += 1;
        iter_since_deflation += 1;
        if total_iter > max_iter {
            return Err(Error::NoConvergence(total_iter));
        }

        let mu = if iter_since_deflation % 11 == 10 {
            // exceptional shift
            let e = h[(hi, hi - 1)].norm()
                + if hi >= 2 {
                    h[(hi - 1, hi - 2)].norm()
                } else {
                    T::zero()
                };
            h[(hi, hi)] + Complex::new(e * T::of(0.75), e * T::of(0.4375))
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        for i in lo..=hi {
            h[(i, i)] = h[(i, i)] - mu;
        }
        rot.clear();
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rot.push((c, s));
            for j in k..n {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
            h[(k + 1, k)] = czero();
        }
        for (idx, &(c, s)) in rot.iter().enumerate() {
            let k = lo + idx;
            let last_row = (k + 1).min(hi);
            for i in 0..=last_row {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = x * c + y * s.conj();
                h[(i, k + 1)] = -x * s + y * c;
            }
            if let Some(z) = z.as_mut() {
                for i in 0..n {
                    let x = z[(i, k)];
                    let y = z[(i, k + 1)];
                    z[(i, k)] = x * c + y * s.conj();
                    z[(i, k + 1)] = -x * s + y * c;
                }
            }
        }
        for i in lo..=hi {
            h[(i, i)] = h[(i, i)] + mu;
        }
    }
    // Clean the strictly lower part left over from deflation.
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = czero();
        }
    }
    Ok(Schur { t: h, z })
}

pub fn eigenvalues<T: Real>(a: &ComplexMatrix<T>) -> Result<Vec<Complex<T>>> {
    Ok(complex_schur(a, false)?.eigenvalues())
}

/// Eigenpairs of a normal matrix (unitary, Hermitian, ...). For normal input
/// the Schur form is diagonal and the Schur vectors are eigenvectors; column
/// `k` of the returned matrix pairs with eigenvalue `k`.
pub fn eig_normal<T: Real>(a: &ComplexMatrix<T>) -> Result<(Vec<Complex<T>>, ComplexMatrix<T>)> {
    let s = complex_schur(a, true)?;
    let vals = s.eigenvalues();
    Ok((vals, s.z.expect("vectors requested")))
}
