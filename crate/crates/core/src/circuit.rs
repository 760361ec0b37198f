//! Sycamore-style random circuits: `U = S U_m ... U_2 U_1`.
//!
//! Each cycle applies one random gate from {sqrt(X), sqrt(Y), sqrt(W)} to every
//! qubit, then fSim on every coupler of that cycle's activation pattern.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{GateKind, SingleQubitChoice};
use crate::linalg::ComplexMatrix;
use crate::rng::RngSeed;
use crate::scalar::Real;
use crate::state::StateVector;

/// Largest register [`circuit_to_matrix`] will materialize.
pub const MAX_MATRIX_QUBITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    #[serde(rename = "chain")]
    Chain1D,
    #[serde(rename = "grid")]
    Grid2D { rows: usize, cols: usize },
}

/// Coupler activation patterns.
///
/// Chain patterns pair `(2k, 2k+1)` or `(2k+1, 2k+2)`. On a grid with
/// qubit `r * cols + c`, A/B activate horizontal couplers starting at even/odd
/// columns and C/D vertical couplers starting at even/odd rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingPattern {
    ChainEven,
    ChainOdd,
    GridA,
    GridB,
    GridC,
    GridD,
}

impl Topology {
    pub fn default_patterns(&self) -> Vec<PairingPattern> {
        use PairingPattern::*;
        match self {
            Topology::Chain1D => vec![ChainEven, ChainOdd],
            Topology::Grid2D { .. } => vec![GridA, GridB, GridC, GridD, GridC, GridD, GridA, GridB],
        }
    }

    /// Qubit pairs activated by `pattern` on an `n`-qubit register.
    pub fn pairs(&self, pattern: PairingPattern, num_qubits: usize) -> Result<Vec<(usize, usize)>> {
        use PairingPattern::*;
        match (*self, pattern) {
            (Topology::Chain1D, ChainEven | ChainOdd) => {
                let start = if pattern == ChainEven { 0 } else { 1 };
                Ok((start..num_qubits.saturating_sub(1))
                    .step_by(2)
                    .map(|q| (q, q + 1))
                    .collect())
            }
            (Topology::Grid2D { rows, cols }, GridA | GridB | GridC | GridD) => {
                if rows * cols != num_qubits {
                    return Err(Error::InvalidCircuit(format!(
                        "{rows}x{cols} grid does not hold {num_qubits} qubits"
                    )));
                }
                let mut out = Vec::new();
                match pattern {
                    GridA | GridB => {
                        let start = if pattern == GridA { 0 } else { 1 };
                        for r in 0..rows {
                            for c in (start..cols.saturating_sub(1)).step_by(2) {
                                out.push((r * cols + c, r * cols + c + 1));
                            }
                        }
                    }
                    _ => {
                        let start = if pattern == GridC { 0 } else { 1 };
                        for r in (start..rows.saturating_sub(1)).step_by(2) {
                            for c in 0..cols {
                                out.push((r * cols + c, (r + 1) * cols + c));
                            }
                        }
                    }
                }
                Ok(out)
            }
            (t, p) => Err(Error::InvalidCircuit(format!(
                "pattern {p:?} does not apply to {t:?}"
            ))),
        }
    }

    /// Whether `a` and `b` share a coupler.
    pub fn are_neighbors(&self, a: usize, b: usize) -> bool {
        match *self {
            Topology::Chain1D => a.abs_diff(b) == 1,
            Topology::Grid2D { cols, .. } => {
                let (ra, ca) = (a / cols, a % cols);
                let (rb, cb) = (b / cols, b % cols);
                (ra == rb && ca.abs_diff(cb) == 1) || (ca == cb && ra.abs_diff(rb) == 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitSpec {
    pub num_qubits: usize,
    pub num_cycles: usize,
    pub topology: Topology,
    pub pattern_sequence: Vec<PairingPattern>,
    pub seed: RngSeed,
    /// Append the trailing single-qubit layer `S`.
    pub final_single_qubit_layer: bool,
    /// Never give a qubit the same single-qubit gate in consecutive layers.
    pub forbid_repeats: bool,
    pub fsim_theta: f64,
    pub fsim_phi: f64,
}

impl CircuitSpec {
    /// 1D chain with alternating even/odd couplers and fSim(pi/2, pi/6).
    pub fn chain(num_qubits: usize, num_cycles: usize, seed: RngSeed) -> Self {
        Self::with_topology(num_qubits, num_cycles, Topology::Chain1D, seed)
    }

    pub fn with_topology(
        num_qubits: usize,
        num_cycles: usize,
        topology: Topology,
        seed: RngSeed,
    ) -> Self {
        Self {
            num_qubits,
            num_cycles,
            pattern_sequence: topology.default_patterns(),
            topology,
            seed,
            final_single_qubit_layer: false,
            forbid_repeats: true,
            fsim_theta: std::f64::consts::FRAC_PI_2,
            fsim_phi: std::f64::consts::FRAC_PI_6,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_qubits == 0 {
            return Err(Error::Dimension { min: 1, got: 0 });
        }
        if self.pattern_sequence.is_empty() {
            return Err(Error::InvalidCircuit("empty pattern sequence".into()));
        }
        if !self.fsim_theta.is_finite() || !self.fsim_phi.is_finite() {
            return Err(Error::InvalidCircuit("non-finite fSim angle".into()));
        }
        for p in &self.pattern_sequence {
            self.topology.pairs(*p, self.num_qubits)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Targets {
    One(usize),
    Two(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateEvent<T> {
    /// Cycle the gate belongs to; the trailing layer uses `num_cycles`.
    pub cycle: usize,
    pub gate: GateKind<T>,
    pub targets: Targets,
}

impl<T: Real> GateEvent<T> {
    pub fn single(cycle: usize, gate: GateKind<T>, qubit: usize) -> Self {
        Self {
            cycle,
            gate,
            targets: Targets::One(qubit),
        }
    }

    pub fn two(cycle: usize, gate: GateKind<T>, a: usize, b: usize) -> Self {
        Self {
            cycle,
            gate,
            targets: Targets::Two(a, b),
        }
    }

    /// Apply this event to `state`.
    pub fn apply(&self, state: &mut StateVector<T>) -> Result<()> {
        match (self.targets, self.gate) {
            (Targets::One(q), GateKind::PhasedSingleQubit(m)) => state.apply_single_qubit(&m, q),
            (Targets::One(q), g @ (GateKind::SqrtX | GateKind::SqrtY | GateKind::SqrtW)) => {
                let n = state
                    .num_qubits()
                    .ok_or(Error::NotQubitRegister(state.dim()))?;
                if q >= n {
                    return Err(Error::QubitOutOfRange {
                        qubit: q,
                        num_qubits: n,
                    });
                }
                state.apply_single_qubit_unchecked(&g.matrix2().expect("single-qubit gate"), q);
                Ok(())
            }
            (Targets::Two(a, b), GateKind::FSim { theta, phi }) => {
                state.apply_fsim(theta, phi, a, b)
            }
            (t, g) => Err(Error::InvalidCircuit(format!(
                "gate {g} cannot act on {t:?}"
            ))),
        }
    }
}

struct LayerSampler {
    previous: Vec<Option<usize>>,
    forbid_repeats: bool,
}

impl LayerSampler {
    fn draw<R: Rng>(&mut self, rng: &mut R, qubit: usize) -> SingleQubitChoice {
        let idx = match (self.forbid_repeats, self.previous[qubit]) {
            (true, Some(prev)) => {
                let r = rng.random_range(0..2);
                if r >= prev {
                    r + 1
                } else {
                    r
                }
            }
            _ => rng.random_range(0..3),
        };
        self.previous[qubit] = Some(idx);
        SingleQubitChoice::ALL[idx]
    }
}

/// Materialize the gate list of `spec`.
pub fn build_random_circuit<T: Real>(spec: &CircuitSpec) -> Result<Vec<GateEvent<T>>> {
    spec.validate()?;
    let n = spec.num_qubits;
    let mut rng = spec.seed.rng();
    let mut sampler = LayerSampler {
        previous: vec![None; n],
        forbid_repeats: spec.forbid_repeats,
    };
    let two = GateKind::FSim {
        theta: T::of(spec.fsim_theta),
        phi: T::of(spec.fsim_phi),
    };
    let mut events = Vec::new();
    for cycle in 0..spec.num_cycles {
        for q in 0..n {
            let g = sampler.draw(&mut rng, q);
            events.push(GateEvent::single(cycle, g.into(), q));
        }
        let pattern = spec.pattern_sequence[cycle % spec.pattern_sequence.len()];
        for (a, b) in spec.topology.pairs(pattern, n)? {
            events.push(GateEvent::two(cycle, two, a, b));
        }
    }
    if spec.final_single_qubit_layer {
        for q in 0..n {
            let g = sampler.draw(&mut rng, q);
            events.push(GateEvent::single(spec.num_cycles, g.into(), q));
        }
    }
    Ok(events)
}

/// Apply `events` in order.
pub fn run_circuit<T: Real>(state: &mut StateVector<T>, events: &[GateEvent<T>]) -> Result<()> {
    for e in events {
        e.apply(state)?;
    }
    Ok(())
}

/// Left-multiply `u` by the circuit: each column is run through `events`.
pub fn apply_events_to_matrix<T: Real>(
    u: &mut ComplexMatrix<T>,
    events: &[GateEvent<T>],
) -> Result<()> {
    let dim = u.rows();
    let columns: Result<Vec<_>> = (0..u.cols())
        .into_par_iter()
        .map(|j| {
            let mut s = StateVector::from_raw(u.column(j));
            run_circuit(&mut s, events)?;
            Ok(s.into_amplitudes())
        })
        .collect();
    for (j, col) in columns?.into_iter().enumerate() {
        debug_assert_eq!(col.len(), dim);
        u.set_column(j, &col);
    }
    Ok(())
}

/// Dense `2^n x 2^n` unitary of the circuit; column `j` is the circuit applied to `|j>`.
pub fn circuit_to_matrix<T: Real>(
    events: &[GateEvent<T>],
    num_qubits: usize,
) -> Result<ComplexMatrix<T>> {
    if num_qubits > MAX_MATRIX_QUBITS {
        return Err(Error::TooManyQubits {
            max: MAX_MATRIX_QUBITS,
            got: num_qubits,
        });
    }
    let mut u = ComplexMatrix::identity(1 << num_qubits);
    apply_events_to_matrix(&mut u, events)?;
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::sqrt_x;

    #[test]
    fn counts_for_two_qubit_chain() {
        let mut spec = CircuitSpec::chain(2, 1, RngSeed::new(5));
        let ev = build_random_circuit::<f64>(&spec).unwrap();
        assert_eq!(ev.iter().filter(|e| e.gate.arity() == 1).count(), 2);
        assert_eq!(ev.iter().filter(|e| e.gate.arity() == 2).count(), 1);
        spec.final_single_qubit_layer = true;
        let ev = build_random_circuit::<f64>(&spec).unwrap();
        assert_eq!(ev.len(), 5);
        assert!(ev[3..].iter().all(|e| e.cycle == 1 && e.gate.arity() == 1));
    }

    #[test]
    fn deterministic_materialization() {
        let spec = CircuitSpec::chain(6, 9, RngSeed::new(11).with_stream(2));
        let a = build_random_circuit::<f64>(&spec).unwrap();
        let b = build_random_circuit::<f64>(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn grid_patterns() {
        let t = Topology::Grid2D { rows: 2, cols: 3 };
        assert_eq!(
            t.pairs(PairingPattern::GridA, 6).unwrap(),
            vec![(0, 1), (3, 4)]
        );
        assert_eq!(
            t.pairs(PairingPattern::GridB, 6).unwrap(),
            vec![(1, 2), (4, 5)]
        );
        assert_eq!(
            t.pairs(PairingPattern::GridC, 6).unwrap(),
            vec![(0, 3), (1, 4), (2, 5)]
        );
        assert!(t.pairs(PairingPattern::GridD, 6).unwrap().is_empty());
        assert!(t.pairs(PairingPattern::GridA, 5).is_err());
        assert!(t.pairs(PairingPattern::ChainEven, 6).is_err());
        assert!(Topology::Chain1D.pairs(PairingPattern::GridC, 6).is_err());
    }

    #[test]
    fn invalid_specs() {
        let mut spec = CircuitSpec::chain(3, 2, RngSeed::new(1));
        spec.pattern_sequence.clear();
        assert!(build_random_circuit::<f64>(&spec).is_err());
        let mut spec = CircuitSpec::chain(4, 2, RngSeed::new(1));
        spec.pattern_sequence = vec![PairingPattern::GridA];
        assert!(build_random_circuit::<f64>(&spec).is_err());
    }

    #[test]
    fn nearest_neighbor_and_no_repeats() {
        for (n, topo) in [
            (7, Topology::Chain1D),
            (12, Topology::Grid2D { rows: 3, cols: 4 }),
        ] {
            let spec = CircuitSpec::with_topology(n, 20, topo, RngSeed::new(n as u64));
            let ev = build_random_circuit::<f64>(&spec).unwrap();
            let mut last: Vec<Option<GateKind<f64>>> = vec![None; n];
            for e in &ev {
                match e.targets {
                    Targets::Two(a, b) => assert!(topo.are_neighbors(a, b)),
                    Targets::One(q) => {
                        assert_ne!(last[q], Some(e.gate));
                        last[q] = Some(e.gate);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_circuit_is_identity() {
        let u = circuit_to_matrix::<f64>(&[], 3).unwrap();
        assert_eq!(u, ComplexMatrix::identity(8));
        let mut s = StateVector::<f64>::zero_state(2);
        run_circuit(&mut s, &[]).unwrap();
        assert_eq!(s, StateVector::zero_state(2));
    }

    #[test]
    fn single_sqrt_x_matrix() {
        let ev = [GateEvent::<f64>::single(0, GateKind::SqrtX, 0)];
        let u = circuit_to_matrix(&ev, 1).unwrap();
        let g = sqrt_x::<f64>();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(u[(i, j)], g[i][j]);
            }
        }
    }

    #[test]
    fn matrix_guard() {
        assert!(matches!(
            circuit_to_matrix::<f64>(&[], 13),
            Err(Error::TooManyQubits { max: 12, got: 13 })
        ));
    }

    #[test]
    fn event_errors() {
        let mut s = StateVector::<f64>::zero_state(2);
        let bad = [GateEvent::<f64>::single(0, GateKind::SqrtY, 5)];
        assert!(run_circuit(&mut s, &bad).is_err());
        let mismatched = [GateEvent::<f64>::single(
            0,
            GateKind::FSim {
                theta: 0.1,
                phi: 0.2,
            },
            0,
        )];
        assert!(run_circuit(&mut s, &mismatched).is_err());
    }
}
