//! Gate set for Sycamore-style random circuits.
//!
//! The square-root gates are principal square roots: for a Pauli-like
//! involution `P`, `sqrt(P) = (1+i)/2 I + (1-i)/2 P`.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::{c, Real};

pub type Matrix2<T> = [[Complex<T>; 2]; 2];
pub type Matrix4<T> = [[Complex<T>; 4]; 4];

/// The random single-qubit choices of one cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SingleQubitChoice {
    SqrtX,
    SqrtY,
    SqrtW,
}

impl SingleQubitChoice {
    pub const ALL: [SingleQubitChoice; 3] = [Self::SqrtX, Self::SqrtY, Self::SqrtW];

    pub fn index(self) -> usize {
        match self {
            Self::SqrtX => 0,
            Self::SqrtY => 1,
            Self::SqrtW => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind<T> {
    SqrtX,
    SqrtY,
    SqrtW,
    FSim { theta: T, phi: T },
    PhasedSingleQubit(Matrix2<T>),
}

impl<T: Real> GateKind<T> {
    pub fn arity(&self) -> usize {
        match self {
            Self::FSim { .. } => 2,
            _ => 1,
        }
    }

    /// 2x2 matrix of a single-qubit gate; `None` for two-qubit gates.
    pub fn matrix2(&self) -> Option<Matrix2<T>> {
        match *self {
            Self::SqrtX => Some(sqrt_x()),
            Self::SqrtY => Some(sqrt_y()),
            Self::SqrtW => Some(sqrt_w()),
            Self::PhasedSingleQubit(m) => Some(m),
            Self::FSim { .. } => None,
        }
    }

    pub fn matrix4(&self) -> Option<Matrix4<T>> {
        match *self {
            Self::FSim { theta, phi } => Some(fsim(theta, phi)),
            _ => None,
        }
    }
}

impl<T> From<SingleQubitChoice> for GateKind<T> {
    fn from(c: SingleQubitChoice) -> Self {
        match c {
            SingleQubitChoice::SqrtX => GateKind::SqrtX,
            SingleQubitChoice::SqrtY => GateKind::SqrtY,
            SingleQubitChoice::SqrtW => GateKind::SqrtW,
        }
    }
}

impl<T: fmt::Display> fmt::Display for GateKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SqrtX => write!(f, "sqrt_x"),
            Self::SqrtY => write!(f, "sqrt_y"),
            Self::SqrtW => write!(f, "sqrt_w"),
            Self::FSim { theta, phi } => write!(f, "fsim({theta}, {phi})"),
            Self::PhasedSingleQubit(_) => write!(f, "u2"),
        }
    }
}

pub fn identity2<T: Real>() -> Matrix2<T> {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

pub fn pauli_x<T: Real>() -> Matrix2<T> {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn pauli_y<T: Real>() -> Matrix2<T> {
    [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]
}

/// `W = (X + Y)/sqrt(2)`.
pub fn pauli_w<T: Real>() -> Matrix2<T> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [[c(0.0, 0.0), c(r, -r)], [c(r, r), c(0.0, 0.0)]]
}

pub fn sqrt_x<T: Real>() -> Matrix2<T> {
    [[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]]
}

pub fn sqrt_y<T: Real>() -> Matrix2<T> {
    [[c(0.5, 0.5), c(-0.5, -0.5)], [c(0.5, 0.5), c(0.5, 0.5)]]
}

pub fn sqrt_w<T: Real>() -> Matrix2<T> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [[c(0.5, 0.5), c(0.0, -r)], [c(r, 0.0), c(0.5, 0.5)]]
}

/// fSim in the basis `|00>, |01>, |10>, |11>`.
pub fn fsim<T: Real>(theta: T, phi: T) -> Matrix4<T> {
    let z = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let cs = Complex::new(theta.cos(), T::zero());
    let sn = Complex::new(T::zero(), -theta.sin());
    let ph = Complex::from_polar(T::one(), -phi);
    [
        [one, z, z, z],
        [z, cs, sn, z],
        [z, sn, cs, z],
        [z, z, z, ph],
    ]
}

pub fn adjoint2<T: Real>(m: &Matrix2<T>) -> Matrix2<T> {
    [
        [m[0][0].conj(), m[1][0].conj()],
        [m[0][1].conj(), m[1][1].conj()],
    ]
}

pub fn mul2<T: Real>(a: &Matrix2<T>, b: &Matrix2<T>) -> Matrix2<T> {
    let mut out = [[Complex::new(T::zero(), T::zero()); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// `max |(M^† M - I)_ij|` for a 2x2 matrix.
pub fn unitarity_defect2<T: Real>(m: &Matrix2<T>) -> T {
    let p = mul2(&adjoint2(m), m);
    let id = identity2::<T>();
    let mut worst = T::zero();
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((p[i][j] - id[i][j]).norm());
        }
    }
    worst
}

pub fn unitarity_defect4<T: Real>(m: &Matrix4<T>) -> T {
    let mut worst = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut s: Complex<T> = m.iter().map(|row| row[i].conj() * row[j]).sum();
            if i == j {
                s = s - Complex::new(T::one(), T::zero());
            }
            worst = worst.max(s.norm());
        }
    }
    worst
}
