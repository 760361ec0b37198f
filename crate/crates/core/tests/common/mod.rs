//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's numerics.

#![allow(dead_code)]

use haarwalk::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense row-major square matrix.
#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub a: Vec<Complex64>,
}

impl Dense {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            a[i * n + i] = c(1.0, 0.0);
        }
        Self { n, a }
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let n = rows.len();
        Self {
            n,
            a: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    pub fn mul(&self, o: &Dense) -> Dense {
        let n = self.n;
        let mut a = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                for j in 0..n {
                    a[i * n + j] += x * o.a[k * n + j];
                }
            }
        }
        Dense { n, a }
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.a[i * self.n + j] * v[j]).sum())
            .collect()
    }

    pub fn scale(&self, s: Complex64) -> Dense {
        Dense {
            n: self.n,
            a: self.a.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, o: &Dense) -> Dense {
        Dense {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn max_abs_diff(&self, o: &Dense) -> f64 {
        self.a
            .iter()
            .zip(&o.a)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.a[i * self.n + i]).sum()
    }
}

/// Principal square root `(1+i)/2 I + (1-i)/2 P` of an involution `P`.
pub fn principal_sqrt(p: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let a = c(0.5, 0.5);
    let b = c(0.5, -0.5);
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a * id[i][j] + b * p[i][j];
        }
    }
    out
}

pub fn pauli_x() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn pauli_y() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]
}

/// `(X + Y)/sqrt(2)`.
pub fn pauli_w() -> [[Complex64; 2]; 2] {
    let r = 0.5f64.sqrt();
    [[c(0.0, 0.0), c(r, -r)], [c(r, r), c(0.0, 0.0)]]
}

pub fn fsim(theta: f64, phi: f64) -> [[Complex64; 4]; 4] {
    let z = c(0.0, 0.0);
    let (s, co) = theta.sin_cos();
    [
        [c(1.0, 0.0), z, z, z],
        [z, c(co, 0.0), c(0.0, -s), z],
        [z, c(0.0, -s), c(co, 0.0), z],
        [z, z, z, Complex64::from_polar(1.0, -phi)],
    ]
}

/// Full-register matrix of a one-qubit gate on qubit `q` (qubit 0 = least significant bit).
pub fn embed1(g: [[Complex64; 2]; 2], q: usize, num_qubits: usize) -> Dense {
    let n = 1 << num_qubits;
    let mut a = vec![c(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            if (i ^ j) & !(1 << q) == 0 {
                a[i * n + j] = g[(i >> q) & 1][(j >> q) & 1];
            }
        }
    }
    Dense { n, a }
}

/// Full-register matrix of a two-qubit gate with local index `2 bit_a + bit_b`.
pub fn embed2(g: [[Complex64; 4]; 4], qa: usize, qb: usize, num_qubits: usize) -> Dense {
    let n = 1 << num_qubits;
    let mask = (1 << qa) | (1 << qb);
    let local = |x: usize| 2 * ((x >> qa) & 1) + ((x >> qb) & 1);
    let mut a = vec![c(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            if (i ^ j) & !mask == 0 {
                a[i * n + j] = g[local(i)][local(j)];
            }
        }
    }
    Dense { n, a }
}

/// `y_k = N^{-1/2} sum_j e^{+2 pi i j k / N} x_j`, evaluated term by term.
pub fn direct_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let norm = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|k| {
            let s: Complex64 = x
                .iter()
                .enumerate()
                .map(|(j, xj)| {
                    let angle = 2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
                    xj * Complex64::from_polar(1.0, angle)
                })
                .sum();
            s * norm
        })
        .collect()
}

/// `exp(i t H)` by Taylor series with scaling and squaring.
pub fn taylor_expm_i(h: &Dense, t: f64) -> Dense {
    let norm: f64 = h.a.iter().map(|x| x.norm()).sum::<f64>().max(1e-300);
    let squarings = (norm * t.abs()).log2().ceil().max(0.0) as u32 + 1;
    let x = h.scale(c(0.0, t / f64::from(1u32 << squarings)));
    let mut term = Dense::identity(h.n);
    let mut sum = Dense::identity(h.n);
    for k in 1..40 {
        term = term.mul(&x).scale(c(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// Two-sided KS distance of `xs` against a continuous CDF.
pub fn ks(xs: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut s = xs.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = s.len() as f64;
    s.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

/// 5% two-sided critical value, asymptotic form.
pub fn ks_crit_5pct(n: usize) -> f64 {
    1.3581 / (n as f64).sqrt()
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn sample_var(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64
}

/// `-sum p ln p` over strictly positive entries.
pub fn entropy(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum()
}

/// Harmonic number `H_n`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).rev().map(|k| 1.0 / k as f64).sum()
}
