//! The blind-fanout unitary and checks of its copying semantics.
//!
//! An input `|b>` on qubit I, with C and D in any state, must end up in the
//! span of basis states where at least two of the three qubits read `b`.
//! The simplest such map swaps `|100>` and `|011>` (rows 3 and 4) up to the
//! phases `alpha`, `beta` and leaves the other six basis states alone.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::linalg::{fidelity, partial_trace, ComplexMatrix, StateVector, C64, ZERO};
use crate::register::{
    random_state, subspace_leakage, with_input_bit, BasisLabel, Qubit, Subspace,
};

/// Row of `|100>`.
pub const ROW_100: usize = 3;
/// Row of `|011>`.
pub const ROW_011: usize = 4;

/// Amplitudes below this squared magnitude are treated as round-off zeros.
pub const SUPPORT_THRESHOLD: f64 = 1e-20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FanoutPhases {
    pub alpha: f64,
    pub beta: f64,
}

impl FanoutPhases {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta }
    }
}

/// `U(alpha, beta)`: identity except `U[3][4] = e^{i beta}`,
/// `U[4][3] = e^{i alpha}` and zeros at `[3][3]`, `[4][4]`.
pub fn build_fanout_unitary(p: FanoutPhases) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(8);
    u[(ROW_100, ROW_100)] = ZERO;
    u[(ROW_011, ROW_011)] = ZERO;
    u[(ROW_100, ROW_011)] = C64::from_polar(1.0, p.beta);
    u[(ROW_011, ROW_100)] = C64::from_polar(1.0, p.alpha);
    u
}

/// `(v1 on T1) (+) (v0 on T0)` composed after `U(0, 0)`.
///
/// `v1` acts on rows `|111>, |110>, |101>, |011>` and `v0` on
/// `|100>, |010>, |001>, |000>`, each in that order.
pub fn build_general_fanout(v1: &ComplexMatrix, v0: &ComplexMatrix) -> Result<ComplexMatrix> {
    for (name, v) in [("v1", v1), ("v0", v0)] {
        if v.dim() != 4 {
            return Err(invalid(format!("{name} must be 4x4, got {0}x{0}", v.dim())));
        }
        if v.unitarity_residual() > 1e-10 {
            return Err(invalid(format!("{name} is not unitary")));
        }
    }
    let mut block = ComplexMatrix::zeros(8);
    for (v, sub) in [(v1, Subspace::t1()), (v0, Subspace::t0())] {
        let rows = sub.rows();
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in rows.iter().enumerate() {
                block[(r, c)] = v[(a, b)];
            }
        }
    }
    block.mat_mul(&build_fanout_unitary(FanoutPhases::new(0.0, 0.0)))
}

#[derive(Debug, Clone, Serialize)]
pub struct SubspaceReport {
    pub trials: usize,
    pub max_leakage: f64,
    pub pass: bool,
}

/// Largest weight that `u (|b> (x) |phi>)` puts outside the majority-`b`
/// subspace, over `trials` seeded random `phi` and both `b`.
pub fn fanout_subspace_check(
    u: &ComplexMatrix,
    trials: usize,
    seed: u64,
) -> Result<SubspaceReport> {
    let mut max_leakage = 0.0f64;
    for t in 0..trials {
        let phi = random_state(4, seed.wrapping_add(t as u64))?;
        for bit in [true, false] {
            let out = u.apply(&with_input_bit(bit, &phi)?)?;
            max_leakage = max_leakage.max(subspace_leakage(&out, &Subspace::majority(bit))?);
        }
    }
    Ok(SubspaceReport {
        trials,
        max_leakage,
        pass: max_leakage < 1e-10,
    })
}

/// True iff every support state of `u (|b> (x) |phi>)` has at least two bits
/// equal to `b`.
pub fn duplicates_input(u: &ComplexMatrix, bit: bool, phi: &StateVector) -> Result<bool> {
    let out = u.apply(&with_input_bit(bit, phi)?)?;
    Ok(out
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm_sqr() > SUPPORT_THRESHOLD)
        .all(|(r, _)| BasisLabel::from_index(r).count_equal(bit) >= 2))
}

#[derive(Debug, Clone, Serialize)]
pub struct DuplicationReport {
    pub input_bit: u8,
    pub trials: usize,
    pub failures: usize,
    pub pass: bool,
}

pub fn duplication_check(
    u: &ComplexMatrix,
    input_bit: bool,
    trials: usize,
    seed: u64,
) -> Result<DuplicationReport> {
    let mut failures = 0;
    for t in 0..trials {
        let phi = random_state(4, seed.wrapping_add(t as u64))?;
        if !duplicates_input(u, input_bit, &phi)? {
            failures += 1;
        }
    }
    Ok(DuplicationReport {
        input_bit: u8::from(input_bit),
        trials,
        failures,
        pass: failures == 0,
    })
}

/// `|<phi1|phi2> - 1|`: how far a map sending both `|1,phi1>` and
/// `|1,phi2>` to `|111>` is from preserving their inner product.
pub fn strict_copy_defect(phi1: &StateVector, phi2: &StateVector) -> Result<f64> {
    for phi in [phi1, phi2] {
        if !phi.is_normalized(1e-12) {
            return Err(invalid("target states must be normalized"));
        }
    }
    Ok((phi1.inner(phi2)? - 1.0).norm())
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CloneFidelity {
    pub f_i: f64,
    pub f_c: f64,
    pub f_d: f64,
}

impl CloneFidelity {
    pub fn max(&self) -> f64 {
        self.f_i.max(self.f_c).max(self.f_d)
    }
}

/// Fidelity of each output qubit with the input superposition `a|1> + b|0>`.
pub fn clone_fidelity(
    u: &ComplexMatrix,
    a: C64,
    b: C64,
    phi: &StateVector,
) -> Result<CloneFidelity> {
    if ((a.norm_sqr() + b.norm_sqr()) - 1.0).abs() > 1e-12 {
        return Err(invalid("|a|^2 + |b|^2 must be 1"));
    }
    if phi.dim() != 4 || !phi.is_normalized(1e-12) {
        return Err(invalid(
            "target state must be a normalized 4-dimensional state",
        ));
    }
    let source = StateVector::new(vec![a, b])?;
    let out = u.apply(&source.tensor(phi)?)?.normalized()?;
    let f = |q: Qubit| -> Result<f64> {
        let rho = partial_trace(&out, &[q.position()])?;
        fidelity(&rho, &source)
    };
    Ok(CloneFidelity {
        f_i: f(Qubit::I)?,
        f_c: f(Qubit::C)?,
        f_d: f(Qubit::D)?,
    })
}
