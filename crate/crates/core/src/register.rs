//! Basis conventions for the three-qubit register `|ICD>`.
//!
//! Rows run `|111>, |110>, |101>, |100>, |011>, |010>, |001>, |000>`, i.e.
//! `row = 4(1-i) + 2(1-c) + (1-d)`.
//!
//! Random states and unitaries come from ChaCha8 seeded with
//! `seed_from_u64(seed)`; each complex entry takes two standard-normal draws
//! (real part first) in row order, then the result is normalized
//! (states) or Gram-Schmidt orthonormalized column by column (unitaries).

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::linalg::{ComplexMatrix, StateVector, C64};

/// One of the three qubits; the discriminant is the tensor-factor position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Qubit {
    I = 0,
    C = 1,
    D = 2,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::I, Qubit::C, Qubit::D];

    pub fn position(self) -> usize {
        self as usize
    }

    /// Bit mask of this qubit inside a row index. A set bit means `|0>`.
    pub fn row_mask(self) -> usize {
        1 << (2 - self.position())
    }

    pub fn name(self) -> &'static str {
        match self {
            Qubit::I => "I",
            Qubit::C => "C",
            Qubit::D => "D",
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Qubit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(Qubit::I),
            "C" => Ok(Qubit::C),
            "D" => Ok(Qubit::D),
            other => Err(invalid(format!("unknown qubit {other:?}"))),
        }
    }
}

/// Computational basis label `|i c d>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub i_bit: bool,
    pub c_bit: bool,
    pub d_bit: bool,
}

impl BasisLabel {
    pub fn new(i_bit: bool, c_bit: bool, d_bit: bool) -> Self {
        Self {
            i_bit,
            c_bit,
            d_bit,
        }
    }

    pub fn from_index(row: usize) -> Self {
        assert!(row < 8, "row index {row} out of range");
        Self {
            i_bit: row & 4 == 0,
            c_bit: row & 2 == 0,
            d_bit: row & 1 == 0,
        }
    }

    pub fn index(self) -> usize {
        4 * usize::from(!self.i_bit) + 2 * usize::from(!self.c_bit) + usize::from(!self.d_bit)
    }

    pub fn bits(self) -> [bool; 3] {
        [self.i_bit, self.c_bit, self.d_bit]
    }

    pub fn bit(self, q: Qubit) -> bool {
        self.bits()[q.position()]
    }

    pub fn count_equal(self, b: bool) -> usize {
        self.bits().iter().filter(|&&x| x == b).count()
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BasisLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<bool> = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(invalid(format!("basis label {s:?} must use 0/1"))),
            })
            .collect::<Result<_>>()?;
        match bits[..] {
            [i, c, d] => Ok(Self::new(i, c, d)),
            _ => Err(invalid(format!("basis label {s:?} must have 3 bits"))),
        }
    }
}

pub fn basis_index(label: BasisLabel) -> usize {
    label.index()
}

pub fn basis_state(label: BasisLabel) -> StateVector {
    StateVector::basis(8, label.index())
}

/// Single-qubit `|1>` or `|0>`.
pub fn qubit_state(bit: bool) -> StateVector {
    StateVector::basis(2, usize::from(!bit))
}

fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im)
}

/// Haar-random pure state, deterministic per seed.
pub fn random_state(dim: usize, seed: u64) -> Result<StateVector> {
    if !matches!(dim, 2 | 4 | 8) {
        return Err(invalid(format!(
            "state dimension must be 2, 4 or 8, got {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps: Vec<C64> = (0..dim).map(|_| gaussian(&mut rng)).collect();
    StateVector::new(amps)?.normalized()
}

/// Haar-random unitary, deterministic per seed.
pub fn random_unitary(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw = ComplexMatrix::from_fn(dim, |_, _| gaussian(&mut rng));
    let mut cols: Vec<Vec<C64>> = (0..dim)
        .map(|c| (0..dim).map(|r| raw[(r, c)]).collect())
        .collect();
    for j in 0..dim {
        for k in 0..j {
            let proj: C64 = (0..dim).map(|r| cols[k][r].conj() * cols[j][r]).sum();
            let (done, rest) = cols.split_at_mut(j);
            for (z, v) in rest[0].iter_mut().zip(&done[k]) {
                *z -= proj * v;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(dim, |r, c| cols[c][r])
}

/// Set of row indices of the 8-dimensional register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    rows: Vec<usize>,
}

impl Subspace {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        rows.dedup();
        if rows.iter().any(|&r| r >= 8) {
            return Err(invalid("subspace row out of range"));
        }
        Ok(Self { rows })
    }

    /// Basis states with at least two 1-bits: `|111>, |110>, |101>, |011>`.
    pub fn t1() -> Self {
        Self::majority(true)
    }

    /// Basis states with at least two 0-bits: `|100>, |010>, |001>, |000>`.
    pub fn t0() -> Self {
        Self::majority(false)
    }

    /// The allowed image of inputs whose I qubit is `bit`.
    pub fn majority(bit: bool) -> Self {
        Self {
            rows: (0..8)
                .filter(|&r| BasisLabel::from_index(r).count_equal(bit) >= 2)
                .collect(),
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn contains(&self, row: usize) -> bool {
        self.rows.binary_search(&row).is_ok()
    }
}

/// Probability weight of `state` outside `s`.
pub fn subspace_leakage(state: &StateVector, s: &Subspace) -> Result<f64> {
    if state.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: state.dim(),
        });
    }
    Ok(state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(r, _)| !s.contains(*r))
        .map(|(_, z)| z.norm_sqr())
        .sum())
}

/// Embeds `|b> (x) |phi>` for a 4-dimensional C/D state.
pub fn with_input_bit(bit: bool, phi: &StateVector) -> Result<StateVector> {
    if phi.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: phi.dim(),
        });
    }
    qubit_state(bit).tensor(phi)
}

/// Convenience: a basis state of the full register from a 3-character label.
pub fn labelled_state(label: &str) -> Result<StateVector> {
    Ok(basis_state(label.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ZERO;
    use std::collections::HashSet;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn basis_index_matches_listing_order() {
        let listed = ["111", "110", "101", "100", "011", "010", "001", "000"];
        for (row, label) in listed.iter().enumerate() {
            let parsed: BasisLabel = label.parse().unwrap();
            assert_eq!(basis_index(parsed), row);
            assert_eq!(BasisLabel::from_index(row), parsed);
            assert_eq!(parsed.to_string(), *label);
        }
        assert_eq!(basis_index(BasisLabel::new(true, false, false)), 3);
    }

    #[test]
    fn basis_index_is_bijection() {
        let mut seen = HashSet::new();
        for bits in 0..8u8 {
            let label = BasisLabel::new(bits & 4 != 0, bits & 2 != 0, bits & 1 != 0);
            assert!(seen.insert(basis_index(label)));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn basis_states() {
        let s = basis_state("011".parse().unwrap());
        assert_eq!(s, StateVector::basis(8, 4));
        let s = basis_state("110".parse().unwrap());
        assert_eq!(s, StateVector::basis(8, 1));
        assert_eq!(s.norm(), 1.0);
    }

    #[test]
    fn bad_labels_rejected() {
        assert!("10".parse::<BasisLabel>().is_err());
        assert!("1a0".parse::<BasisLabel>().is_err());
        assert!("X".parse::<Qubit>().is_err());
    }

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        for dim in [2, 4, 8] {
            let a = random_state(dim, 11).unwrap();
            let b = random_state(dim, 11).unwrap();
            assert_eq!(a, b);
            assert!((a.norm() - 1.0).abs() < 1e-12);
        }
        assert_ne!(random_state(4, 1).unwrap(), random_state(4, 2).unwrap());
        assert!(random_state(3, 0).is_err());
    }

    #[test]
    fn haar_mean_overlap_is_one_over_dim() {
        let pairs = 1000u64;
        let mean: f64 = (0..pairs)
            .map(|k| {
                let a = random_state(4, 2 * k).unwrap();
                let b = random_state(4, 2 * k + 1).unwrap();
                a.inner(&b).unwrap().norm_sqr()
            })
            .sum::<f64>()
            / pairs as f64;
        assert!((mean - 0.25).abs() < 0.05, "mean overlap {mean}");
    }

    #[test]
    fn random_unitary_is_unitary() {
        for seed in 0..20 {
            assert!(random_unitary(4, seed).unitarity_residual() < 1e-13);
        }
    }

    #[test]
    fn subspaces_partition_the_register() {
        assert_eq!(Subspace::t1().rows(), &[0, 1, 2, 4]);
        assert_eq!(Subspace::t0().rows(), &[3, 5, 6, 7]);
    }

    #[test]
    fn leakage_examples() {
        let t1 = Subspace::t1();
        assert_eq!(
            subspace_leakage(&labelled_state("111").unwrap(), &t1).unwrap(),
            0.0
        );
        assert_eq!(
            subspace_leakage(&labelled_state("100").unwrap(), &t1).unwrap(),
            1.0
        );
        let mut amps = vec![ZERO; 8];
        amps[0] = C64::new(FRAC_1_SQRT_2, 0.0);
        amps[3] = C64::new(FRAC_1_SQRT_2, 0.0);
        let s = StateVector::new(amps).unwrap();
        assert!((subspace_leakage(&s, &t1).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn leakages_sum_to_one() {
        for seed in 0..200 {
            let s = random_state(8, seed).unwrap();
            let total = subspace_leakage(&s, &Subspace::t1()).unwrap()
                + subspace_leakage(&s, &Subspace::t0()).unwrap();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn input_bit_embedding() {
        let phi = StateVector::basis(4, 2);
        assert_eq!(
            with_input_bit(true, &phi).unwrap(),
            StateVector::basis(8, 2)
        );
        assert_eq!(
            with_input_bit(false, &phi).unwrap(),
            StateVector::basis(8, 6)
        );
    }
}
