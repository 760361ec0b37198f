//! Pure states as dense amplitude vectors.
//!
//! Basis index `i` encodes qubit `q` in bit `q` (qubit 0 is the least
//! significant bit). Registers whose dimension is not a power of two are
//! allowed for ensemble work; gate application requires a qubit register.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gates::{fsim, unitarity_defect2, unitarity_defect4, Matrix2, Matrix4};
use crate::scalar::{cone, czero, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// `|0...0>` on `num_qubits` qubits.
    pub fn zero_state(num_qubits: usize) -> Self {
        Self::basis(1 << num_qubits, 0).expect("index 0 is always in range")
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        if index >= dim {
            return Err(Error::Shape(format!(
                "basis index {index} for dimension {dim}"
            )));
        }
        let mut amplitudes = vec![czero(); dim];
        amplitudes[index] = cone();
        Ok(Self { amplitudes })
    }

    /// `(|0> + ... + |N-1>)/sqrt(N)`.
    pub fn uniform(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        let a = T::one() / T::of_usize(dim).sqrt();
        Ok(Self {
            amplitudes: vec![Complex::new(a, T::zero()); dim],
        })
    }

    /// Wrap amplitudes that must already be normalized (defect at most `T::NORM_TOL`).
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        let s = Self { amplitudes };
        let defect = s.norm_defect().as_f64();
        if !(defect <= T::NORM_TOL) {
            return Err(Error::NotNormalized(defect));
        }
        Ok(s)
    }

    /// Rescale arbitrary non-zero amplitudes to unit norm.
    pub fn from_amplitudes_normalized(mut amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::NotNormalized(1.0));
        }
        for a in &mut amplitudes {
            *a = *a / norm;
        }
        Ok(Self { amplitudes })
    }

    pub(crate) fn from_raw(amplitudes: Vec<Complex<T>>) -> Self {
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `Some(n)` when the dimension is `2^n`.
    pub fn num_qubits(&self) -> Option<usize> {
        let d = self.dim();
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex<T>> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `|sum |a_i|^2 - 1|`.
    pub fn norm_defect(&self) -> T {
        (self.norm_sqr() - T::one()).abs()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim());
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    fn require_qubits(&self) -> Result<usize> {
        self.num_qubits().ok_or(Error::NotQubitRegister(self.dim()))
    }

    fn check_qubit(&self, qubit: usize) -> Result<usize> {
        let n = self.require_qubits()?;
        if qubit >= n {
            return Err(Error::QubitOutOfRange {
                qubit,
                num_qubits: n,
            });
        }
        Ok(n)
    }

    /// Apply a 2x2 unitary to `qubit`.
    pub fn apply_single_qubit(&mut self, gate: &Matrix2<T>, qubit: usize) -> Result<()> {
        self.check_qubit(qubit)?;
        let defect = unitarity_defect2(gate).as_f64();
        if !(defect <= T::GATE_TOL) {
            return Err(Error::NotUnitary(defect));
        }
        self.apply_single_qubit_unchecked(gate, qubit);
        Ok(())
    }

    pub(crate) fn apply_single_qubit_unchecked(&mut self, gate: &Matrix2<T>, qubit: usize) {
        let stride = 1usize << qubit;
        let [[g00, g01], [g10, g11]] = *gate;
        for block in self.amplitudes.chunks_exact_mut(stride << 1) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
                let x = *a0;
                let y = *a1;
                *a0 = g00 * x + g01 * y;
                *a1 = g10 * x + g11 * y;
            }
        }
    }

    /// Apply a 4x4 unitary in the local basis `|q_a q_b>` (q_a is the high bit).
    pub fn apply_two_qubit(
        &mut self,
        gate: &Matrix4<T>,
        qubit_a: usize,
        qubit_b: usize,
    ) -> Result<()> {
        self.check_qubit(qubit_a)?;
        self.check_qubit(qubit_b)?;
        if qubit_a == qubit_b {
            return Err(Error::CoincidentQubits(qubit_a));
        }
        let defect = unitarity_defect4(gate).as_f64();
        if !(defect <= T::GATE_TOL) {
            return Err(Error::NotUnitary(defect));
        }
        self.apply_two_qubit_unchecked(gate, qubit_a, qubit_b);
        Ok(())
    }

    pub(crate) fn apply_two_qubit_unchecked(
        &mut self,
        gate: &Matrix4<T>,
        qubit_a: usize,
        qubit_b: usize,
    ) {
        let ma = 1usize << qubit_a;
        let mb = 1usize << qubit_b;
        for i in 0..self.amplitudes.len() {
            if i & (ma | mb) != 0 {
                continue;
            }
            let idx = [i, i | mb, i | ma, i | ma | mb];
            let v = idx.map(|k| self.amplitudes[k]);
            for (r, &k) in idx.iter().enumerate() {
                let row = &gate[r];
                self.amplitudes[k] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
            }
        }
    }

    /// Apply `fSim(theta, phi)` to the pair `(qubit_a, qubit_b)`.
    pub fn apply_fsim(&mut self, theta: T, phi: T, qubit_a: usize, qubit_b: usize) -> Result<()> {
        self.check_qubit(qubit_a)?;
        self.check_qubit(qubit_b)?;
        if qubit_a == qubit_b {
            return Err(Error::CoincidentQubits(qubit_a));
        }
        self.apply_two_qubit_unchecked(&fsim(theta, phi), qubit_a, qubit_b);
        Ok(())
    }
}
