use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    Dimension { min: usize, got: usize },

    #[error("variance must be positive, got {0}")]
    NonPositiveVariance(f64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("qubit index {qubit} out of range for {num_qubits} qubits")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    CoincidentQubits(usize),

    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),

    #[error("state is not normalized (norm defect {0:e})")]
    NotNormalized(f64),

    #[error("state dimension {0} is not a power of two")]
    NotQubitRegister(usize),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("matrix assembly limited to {max} qubits, got {got}")]
    TooManyQubits { max: usize, got: usize },

    #[error("value {value} outside allowed range {range}")]
    OutOfRange { value: f64, range: &'static str },

    #[error("wasserstein order must be >= 1, got {0}")]
    InvalidOrder(f64),

    #[error("eigensolver failed to converge after {0} iterations")]
    NoConvergence(usize),

    #[error("propagator drifted from unitarity (defect {defect:e}) by step {step}")]
    UnitarityDrift { step: usize, defect: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that come from the numerics rather than from the caller's input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence(_) | Error::UnitarityDrift { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
