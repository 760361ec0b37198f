//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All linear algebra, state-vector kernels and statistics are written against
//! [`Real`] so the same code runs in `f32` or `f64`. Experiments and the CLI
//! use `f64`; see the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar used for amplitudes, matrix entries and statistics.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Unitarity defect above which a user-supplied gate is rejected.
    const GATE_TOL: f64;
    /// Norm defect above which a state is considered unnormalized.
    const NORM_TOL: f64;

    /// Lossy conversion from an `f64` literal.
    fn of(x: f64) -> Self;

    fn of_usize(n: usize) -> Self;

    fn as_f64(self) -> f64;
}

impl Real for f64 {
    const GATE_TOL: f64 = 1e-10;
    const NORM_TOL: f64 = 1e-8;

    #[inline]
    fn of(x: f64) -> Self {
        x
    }

    #[inline]
    fn of_usize(n: usize) -> Self {
        n as f64
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const GATE_TOL: f64 = 1e-5;
    const NORM_TOL: f64 = 1e-4;

    #[inline]
    fn of(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn of_usize(n: usize) -> Self {
        n as f32
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }
}

#[inline]
pub(crate) fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}

#[inline]
pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

#[inline]
pub(crate) fn cone<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}
