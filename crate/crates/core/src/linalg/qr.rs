use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// `A = Q R` with `Q` unitary and `R` upper triangular.
#[derive(Debug, Clone)]
pub struct QrFactors<T> {
    pub q: ComplexMatrix<T>,
    pub r: ComplexMatrix<T>,
}

impl<T: Real> QrFactors<T> {
    /// `Q Λ` with `Λ = diag(R_kk / |R_kk|)`, which makes the factorization
    /// unique (positive real diagonal of `Λ^† R`). Returns `None` if some
    /// `|R_kk|` is below `floor`.
    pub fn phase_fixed_q(&self, floor: T) -> Option<ComplexMatrix<T>> {
        let n = self.r.rows().min(self.r.cols());
        let mut q = self.q.clone();
        for k in 0..n {
            let rkk = self.r[(k, k)];
            let m = rkk.norm();
            if !(m >= floor) {
                return None;
            }
            let phase = rkk / m;
            for i in 0..q.rows() {
                q[(i, k)] = q[(i, k)] * phase;
            }
        }
        Some(q)
    }
}

/// Householder QR of a square matrix.
///
/// Reflector `k` maps the active column `x` to `alpha e_1` with
/// `alpha = -e^{i arg x_0} |x|`, so `R_kk` carries a data-dependent phase;
/// use [`QrFactors::phase_fixed_q`] when a canonical `Q` is required.
pub fn householder_qr<T: Real>(a: &ComplexMatrix<T>) -> Result<QrFactors<T>> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "QR of {}x{} (square only)",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut r = a.clone();
    let mut q = ComplexMatrix::<T>::identity(n);
    let two = T::of(2.0);
    let mut v = vec![czero::<T>(); n];

    for k in 0..n.saturating_sub(1) {
        let norm_x = (k..n).map(|i| r[(i, k)].norm_sqr()).sum::<T>().sqrt();
        if norm_x == T::zero() {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == T::zero() {
            cone()
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm_x;

        for i in k..n {
            v[i] = r[(i, k)];
        }
        v[k] = v[k] - alpha;
        let vnorm2: T = (k..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm2 == T::zero() {
            continue;
        }
        let beta = two / vnorm2;

        // R <- (I - beta v v^H) R
        for j in k..n {
            let mut s = czero::<T>();
            for i in k..n {
                s = s + v[i].conj() * r[(i, j)];
            }
            let s = s * beta;
            for i in k..n {
                r[(i, j)] = r[(i, j)] - v[i] * s;
            }
        }
        // Q <- Q (I - beta v v^H)
        for i in 0..n {
            let mut s = czero::<T>();
            for l in k..n {
                s = s + q[(i, l)] * v[l];
            }
            let s = s * beta;
            for l in k..n {
                q[(i, l)] = q[(i, l)] - s * v[l].conj();
            }
        }
        r[(k, k)] = alpha;
        for i in k + 1..n {
            r[(i, k)] = czero();
        }
    }
    Ok(QrFactors { q, r })
}

/// Nearest-unitary projection used to undo integrator drift: the
/// phase-fixed `Q` factor of `m`.
pub fn reunitarize<T: Real>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let f = householder_qr(m)?;
    f.phase_fixed_q(T::min_positive_value())
        .ok_or_else(|| Error::Shape("rank-deficient matrix cannot be re-unitarized".into()))
}

#[allow(dead_code)]
pub(crate) fn upper_triangular_residual<T: Real>(r: &ComplexMatrix<T>) -> T {
    let mut worst = T::zero();
    for i in 0..r.rows() {
        for j in 0..i.min(r.cols()) {
            worst = worst.max(r[(i, j)].norm());
        }
    }
    worst
}
