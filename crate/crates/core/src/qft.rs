//! Quantum Fourier transform on amplitude vectors:
//! `y_k = N^{-1/2} sum_j exp(+2 pi i j k / N) x_j`.
//!
//! Power-of-two lengths use an iterative radix-2 transform; other lengths
//! fall back to the direct sum.

use num_complex::Complex;

use crate::scalar::{czero, Real};
use crate::state::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Inverse => -1.0,
        }
    }
}

pub fn qft<T: Real>(state: &StateVector<T>) -> StateVector<T> {
    StateVector::from_raw(transform(state.amplitudes(), Direction::Forward))
}

pub fn inverse_qft<T: Real>(state: &StateVector<T>) -> StateVector<T> {
    StateVector::from_raw(transform(state.amplitudes(), Direction::Inverse))
}

/// The forward transform on a bare amplitude slice.
pub fn qft_amplitudes<T: Real>(x: &[Complex<T>]) -> Vec<Complex<T>> {
    transform(x, Direction::Forward)
}

fn transform<T: Real>(x: &[Complex<T>], dir: Direction) -> Vec<Complex<T>> {
    let n = x.len();
    if n <= 1 {
        return x.to_vec();
    }
    let mut out = if n.is_power_of_two() {
        radix2(x, dir)
    } else {
        direct(x, dir)
    };
    let scale = T::one() / T::of_usize(n).sqrt();
    for v in &mut out {
        *v = *v * scale;
    }
    out
}

fn twiddle<T: Real>(k: usize, n: usize, dir: Direction) -> Complex<T> {
    // exact reduction of the angle keeps the error at one rounding
    let angle = dir.sign() * 2.0 * std::f64::consts::PI * ((k % n) as f64) / n as f64;
    Complex::new(T::of(angle.cos()), T::of(angle.sin()))
}

fn direct<T: Real>(x: &[Complex<T>], dir: Direction) -> Vec<Complex<T>> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter().enumerate().fold(czero(), |acc, (j, xj)| {
                acc + *xj * twiddle::<T>(j * k % n, n, dir)
            })
        })
        .collect()
}

fn radix2<T: Real>(x: &[Complex<T>], dir: Direction) -> Vec<Complex<T>> {
    let n = x.len();
    let bits = n.trailing_zeros();
    let mut a: Vec<Complex<T>> = vec![czero(); n];
    for (i, v) in x.iter().enumerate() {
        let r = i.reverse_bits() >> (usize::BITS - bits);
        a[r] = *v;
    }
    let roots: Vec<Complex<T>> = (0..n / 2).map(|k| twiddle(k, n, dir)).collect();
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        for chunk in a.chunks_exact_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (k, (u, v)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let t = *v * roots[k * step];
                let s = *u;
                *u = s + t;
                *v = s - t;
            }
        }
        len <<= 1;
    }
    a
}
