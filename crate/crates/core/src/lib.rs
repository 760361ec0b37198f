//! Random walks on the unitary group and their convergence to Haar-random
//! states.
//!
//! Two walks are simulated: random quantum circuits built from
//! {sqrt(X), sqrt(Y), sqrt(W)} layers and fSim couplers, and a continuous
//! Dyson-Brownian walk driven by Gaussian Hermitian generators. Convergence is
//! measured with the Shannon entropy of the evolving state (in the
//! computational and Fourier bases) and with order-statistic Wasserstein
//! distances between eigenphase samples and the circular unitary ensemble.
//!
//! The numerical core is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the precision used by the experiments and the CLI.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod amplitudes;
pub mod circuit;
pub mod dyson;
pub mod ensembles;
pub mod entropy;
pub mod error;
pub mod experiments;
pub mod gates;
pub mod linalg;
pub mod qft;
pub mod rng;
pub mod scalar;
pub mod spectral;
pub mod state;
pub mod stats;

pub use circuit::{
    build_random_circuit, circuit_to_matrix, run_circuit, CircuitSpec, GateEvent, PairingPattern,
    Targets, Topology,
};
pub use dyson::{dyson_step, run_dyson, DysonConfig, DysonFrame, Integrator};
pub use ensembles::{sample_ginibre, sample_haar_unitary, sample_hermitian};
pub use entropy::{
    entropic_uncertainty, haar_mean_entropy, haar_mean_entropy_exact, porter_thomas_cdf,
    porter_thomas_fit, porter_thomas_pdf, probabilities_of, shannon_entropy, EntropyRecord,
    ProbabilityVector, EULER_GAMMA,
};
pub use error::{Error, Result};
pub use gates::GateKind;
pub use linalg::{ComplexMatrix, HermitianMatrix};
pub use qft::{inverse_qft, qft};
pub use rng::RngSeed;
pub use scalar::Real;
pub use spectral::{
    eigenphases, match_trajectories, wasserstein_order_stat, wasserstein_to_cue, EigenPhases,
    Matching, TrajectoryFrame, WassersteinScale,
};
pub use state::StateVector;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type HermitianMatrix64 = HermitianMatrix<f64>;
pub type HermitianMatrix32 = HermitianMatrix<f32>;
pub type StateVector64 = StateVector<f64>;
pub type StateVector32 = StateVector<f32>;
pub type EigenPhases64 = EigenPhases<f64>;
pub type EigenPhases32 = EigenPhases<f32>;
pub type ProbabilityVector64 = ProbabilityVector<f64>;
pub type GateEvent64 = GateEvent<f64>;
pub type DysonFrame64 = DysonFrame<f64>;
