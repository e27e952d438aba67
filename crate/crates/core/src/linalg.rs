//! Dense complex linear algebra at the 2/4/8-dimensional scale.
//!
//! Everything in this crate uses the single-qubit basis order `(|1>, |0>)`:
//! row 0 of a qubit operator is `|1>`. Plain Kronecker products in the order
//! (I, C, D) then list three-qubit states as `|111>, |110>, ..., |000>`, and
//! `sigma_z |1> = +|1>`. Many simulators use the opposite order; matrices
//! imported from them must be conjugated by `X (x) X (x) X` first.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Square dense complex matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<[f64; 2]>>", into = "Vec<Vec<[f64; 2]>>")]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { ONE } else { ZERO })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self { dim, data }
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        Self::from_fn(entries.len(), |r, c| if r == c { entries[r] } else { ZERO })
    }

    /// Builds a matrix from rows. Rejects empty, ragged, non-square or
    /// non-finite input.
    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(invalid("matrix has no rows"));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(invalid(format!(
                    "row {r} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        if data.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite("matrix"));
        }
        Ok(Self { dim, data })
    }

    /// Permutation matrix sending basis row `j` to row `perm[j]`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.data.chunks(self.dim)
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Kronecker product `self (x) other`; `self` owns the high-order index.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |r, c| self[(r / m, c / m)] * other[(r % m, c % m)])
    }

    /// `a (x) b (x) c` with factors in (I, C, D) order.
    pub fn kron3(a: &Self, b: &Self, c: &Self) -> Result<Self> {
        for m in [a, b, c] {
            if m.dim != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: m.dim,
                });
            }
        }
        Ok(a.kron(b).kron(c))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn frobenius_distance(&self, other: &Self) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Largest absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|c| (0..self.dim).map(|r| self[(r, c)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `||M M^dagger - I||_F`.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = self.mat_mul(&self.dagger()).expect("same dim");
        prod.frobenius_distance(&Self::identity(self.dim))
            .expect("same dim")
    }

    /// `||M - M^dagger||_F`.
    pub fn hermiticity_residual(&self) -> f64 {
        self.frobenius_distance(&self.dagger()).expect("same dim")
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.is_finite())
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let amps = self
            .rows()
            .map(|row| row.iter().zip(v.amplitudes()).map(|(a, b)| a * b).sum())
            .collect();
        Ok(StateVector { amps })
    }

    /// Matrix exponential by scaling and squaring with a truncated Taylor
    /// kernel. The argument is the full exponent, e.g. `-i H dt / hbar`.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_finite() {
            return Err(Error::NonFinite("matrix exponential argument"));
        }
        let norm = self.one_norm();
        // Scale until the 1-norm is at most 1/2; order-20 Taylor then has a
        // truncation error below 0.5^21 / 21! relative.
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as i32
        } else {
            0
        };
        let scaled = self.scale(C64::new(0.5f64.powi(squarings), 0.0));

        let mut result = Self::identity(self.dim);
        let mut term = Self::identity(self.dim);
        for k in 1..=20 {
            term = term.mat_mul(&scaled)?.scale(C64::new(1.0 / k as f64, 0.0));
            result = &result + &term;
            if term.frobenius_norm() < 1e-18 {
                break;
            }
        }
        for _ in 0..squarings {
            result = result.mat_mul(&result)?;
        }
        Ok(result)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in add");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sub");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.mat_mul(rhs).expect("dimension mismatch in mul")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<[f64; 2]>>> for ComplexMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<[f64; 2]>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(|[re, im]| C64::new(re, im)).collect())
                .collect(),
        )
    }
}

impl From<ComplexMatrix> for Vec<Vec<[f64; 2]>> {
    fn from(m: ComplexMatrix) -> Self {
        m.rows()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect()
    }
}

/// Pure state of 1 to 3 qubits, amplitudes in `(|1>, |0>)`-ordered rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct StateVector {
    amps: Vec<C64>,
}

impl StateVector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if !matches!(amps.len(), 2 | 4 | 8) {
            return Err(invalid(format!(
                "state must have 2, 4 or 8 amplitudes, got {}",
                amps.len()
            )));
        }
        if amps.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite("state vector"));
        }
        Ok(Self { amps })
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn num_qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(invalid("cannot normalize the zero vector"));
        }
        Ok(Self {
            amps: self.amps.iter().map(|z| z / n).collect(),
        })
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() < tol
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// `self (x) other`; `self` owns the high-order index.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let amps: Vec<C64> = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Self::new(amps)
    }
}

impl TryFrom<Vec<[f64; 2]>> for StateVector {
    type Error = Error;
    fn try_from(v: Vec<[f64; 2]>) -> Result<Self> {
        Self::new(v.into_iter().map(|[re, im]| C64::new(re, im)).collect())
    }
}

impl From<StateVector> for Vec<[f64; 2]> {
    fn from(s: StateVector) -> Self {
        s.amps.iter().map(|z| [z.re, z.im]).collect()
    }
}

/// Reduced state of 1 or 2 qubits.
#[derive(Clone, Debug)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !matches!(m.dim(), 2 | 4) {
            return Err(invalid(format!(
                "density matrix must be 2x2 or 4x4, got {0}x{0}",
                m.dim()
            )));
        }
        if m.hermiticity_residual() > 1e-12 {
            return Err(invalid("density matrix is not Hermitian"));
        }
        if (m.trace() - ONE).norm() > 1e-12 {
            return Err(invalid("density matrix trace is not 1"));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `Tr(rho^2)`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        self.0.mat_mul(&self.0).expect("same dim").trace().re
    }
}

/// Reduced density matrix over the qubits at `keep` (0 = first tensor
/// factor). The kept qubits stay in ascending position order.
pub fn partial_trace(state: &StateVector, keep: &[usize]) -> Result<DensityMatrix> {
    if !state.is_normalized(1e-12) {
        return Err(invalid("partial trace needs a normalized state"));
    }
    let n = state.num_qubits();
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() || keep.len() >= n {
        return Err(invalid("keep-set must be a non-empty proper subset"));
    }
    if let Some(&q) = keep.iter().find(|&&q| q >= n) {
        return Err(invalid(format!("qubit position {q} out of range")));
    }
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();

    let bit = |q: usize| 1usize << (n - 1 - q);
    let compose = |kept: usize, env: usize| -> usize {
        let mut idx = 0;
        for (j, &q) in keep.iter().enumerate() {
            if kept >> (keep.len() - 1 - j) & 1 == 1 {
                idx |= bit(q);
            }
        }
        for (j, &q) in traced.iter().enumerate() {
            if env >> (traced.len() - 1 - j) & 1 == 1 {
                idx |= bit(q);
            }
        }
        idx
    };

    let dk = 1 << keep.len();
    let de = 1 << traced.len();
    let amps = state.amplitudes();
    let rho = ComplexMatrix::from_fn(dk, |a, b| {
        (0..de)
            .map(|e| amps[compose(a, e)] * amps[compose(b, e)].conj())
            .sum()
    });
    DensityMatrix::new(rho)
}

/// `<psi| rho |psi>`.
pub fn fidelity(rho: &DensityMatrix, psi: &StateVector) -> Result<f64> {
    let rho_psi = rho.matrix().apply(psi)?;
    Ok(psi.inner(&rho_psi)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    fn sx() -> ComplexMatrix {
        ComplexMatrix::from_permutation(&[1, 0])
    }

    fn sz() -> ComplexMatrix {
        ComplexMatrix::diagonal(&[ONE, -ONE])
    }

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn identity_is_neutral() {
        let m = ComplexMatrix::from_fn(8, |r, c| C64::new(r as f64, c as f64 - 1.5));
        assert_eq!(ComplexMatrix::identity(8).mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn mat_mul_rejects_mismatched_dims() {
        let err = ComplexMatrix::identity(2).mat_mul(&ComplexMatrix::identity(4));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn dagger_is_involution() {
        let m = ComplexMatrix::from_fn(4, |r, c| C64::new(r as f64 * 0.3, c as f64 - r as f64));
        assert_eq!(m.dagger().dagger(), m);
        assert_eq!(
            ComplexMatrix::identity(4).dagger(),
            ComplexMatrix::identity(4)
        );
    }

    #[test]
    fn kron3_of_sigma_z_on_first_factor() {
        let id = ComplexMatrix::identity(2);
        let m = ComplexMatrix::kron3(&sz(), &id, &id).unwrap();
        let expected: Vec<C64> = [1., 1., 1., 1., -1., -1., -1., -1.].map(c).to_vec();
        assert_eq!(m, ComplexMatrix::diagonal(&expected));
    }

    #[test]
    fn kron3_of_sigma_x_is_antidiagonal() {
        let m = ComplexMatrix::kron3(&sx(), &sx(), &sx()).unwrap();
        assert_eq!(
            m,
            ComplexMatrix::from_permutation(&[7, 6, 5, 4, 3, 2, 1, 0])
        );
        let id = ComplexMatrix::identity(2);
        assert_eq!(
            ComplexMatrix::kron3(&id, &id, &id).unwrap(),
            ComplexMatrix::identity(8)
        );
    }

    #[test]
    fn kron3_requires_qubit_factors() {
        let id = ComplexMatrix::identity(2);
        assert!(ComplexMatrix::kron3(&ComplexMatrix::identity(4), &id, &id).is_err());
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(
            ComplexMatrix::zeros(8).exp().unwrap(),
            ComplexMatrix::identity(8)
        );
    }

    #[test]
    fn exp_of_rotation_block() {
        // -i (pi/2) sigma_x on rows {3, 4}
        let mut x = ComplexMatrix::zeros(8);
        x[(3, 4)] = -I * FRAC_PI_2;
        x[(4, 3)] = -I * FRAC_PI_2;
        let mut expected = ComplexMatrix::identity(8);
        expected[(3, 3)] = ZERO;
        expected[(4, 4)] = ZERO;
        expected[(3, 4)] = -I;
        expected[(4, 3)] = -I;
        assert!(x.exp().unwrap().frobenius_distance(&expected).unwrap() < 1e-14);
    }

    #[test]
    fn exp_rejects_non_finite() {
        let mut x = ComplexMatrix::zeros(2);
        x[(0, 1)] = C64::new(f64::NAN, 0.0);
        assert!(matches!(x.exp(), Err(Error::NonFinite(_))));
    }

    #[test]
    fn frobenius_distance_examples() {
        let m = ComplexMatrix::from_fn(4, |r, c| C64::new(r as f64, c as f64));
        assert_eq!(m.frobenius_distance(&m).unwrap(), 0.0);
        assert_eq!(
            ComplexMatrix::identity(2)
                .frobenius_distance(&sx())
                .unwrap(),
            2.0
        );
        assert!(ComplexMatrix::identity(2)
            .frobenius_distance(&ComplexMatrix::identity(8))
            .is_err());
    }

    #[test]
    fn partial_trace_examples() {
        // |111> keep {I}
        let s = StateVector::basis(8, 0);
        let rho = partial_trace(&s, &[0]).unwrap();
        assert_eq!(rho.matrix(), &ComplexMatrix::diagonal(&[ONE, ZERO]));

        // (|111> + |011>)/sqrt2 keep {C, D} -> |11><11|
        let mut amps = vec![ZERO; 8];
        amps[0] = c(FRAC_1_SQRT_2);
        amps[4] = c(FRAC_1_SQRT_2);
        let s = StateVector::new(amps).unwrap();
        let rho = partial_trace(&s, &[1, 2]).unwrap();
        let mut expected = ComplexMatrix::zeros(4);
        expected[(0, 0)] = ONE;
        assert!(rho.matrix().frobenius_distance(&expected).unwrap() < 1e-15);
        assert!((rho.purity() - 1.0).abs() < 1e-15);

        // (|111> + |000>)/sqrt2 keep {I} -> maximally mixed
        let mut amps = vec![ZERO; 8];
        amps[0] = c(FRAC_1_SQRT_2);
        amps[7] = c(FRAC_1_SQRT_2);
        let s = StateVector::new(amps).unwrap();
        let rho = partial_trace(&s, &[0]).unwrap();
        let half = ComplexMatrix::diagonal(&[c(0.5), c(0.5)]);
        assert!(rho.matrix().frobenius_distance(&half).unwrap() < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_keep_sets() {
        let s = StateVector::basis(8, 3);
        assert!(partial_trace(&s, &[]).is_err());
        assert!(partial_trace(&s, &[0, 1, 2]).is_err());
        assert!(partial_trace(&s, &[5]).is_err());
        let unnormalized = StateVector::new(vec![ONE; 8]).unwrap();
        assert!(partial_trace(&unnormalized, &[0]).is_err());
    }

    #[test]
    fn fidelity_examples() {
        let one = StateVector::basis(2, 0);
        let zero = StateVector::basis(2, 1);
        let proj = DensityMatrix::new(ComplexMatrix::diagonal(&[ONE, ZERO])).unwrap();
        assert_eq!(fidelity(&proj, &one).unwrap(), 1.0);
        assert_eq!(fidelity(&proj, &zero).unwrap(), 0.0);

        let mixed = DensityMatrix::new(ComplexMatrix::diagonal(&[c(0.5), c(0.5)])).unwrap();
        let psi = StateVector::new(vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
        assert!((fidelity(&mixed, &psi).unwrap() - 0.5).abs() < 1e-15);

        assert!(fidelity(&mixed, &StateVector::basis(4, 0)).is_err());
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(ComplexMatrix::identity(2)).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::identity(8).scale(c(0.125))).is_err());
        let mut m = ComplexMatrix::diagonal(&[c(0.5), c(0.5)]);
        m[(0, 1)] = C64::new(0.0, 0.1);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn matrix_format_rejects_ragged_rows() {
        let ragged = "[[[1,0],[0,0]],[[0,0]]]";
        assert!(serde_json::from_str::<ComplexMatrix>(ragged).is_err());
        let nonsquare = "[[[1,0],[0,0]]]";
        assert!(serde_json::from_str::<ComplexMatrix>(nonsquare).is_err());
        let ok: ComplexMatrix = serde_json::from_str("[[[0,0],[1,0]],[[1,0],[0,0]]]").unwrap();
        assert_eq!(ok, sx());
    }

    #[test]
    fn state_format_roundtrip() {
        let s = StateVector::new(vec![C64::new(0.6, 0.0), C64::new(0.0, -0.8)]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, "[[0.6,0.0],[0.0,-0.8]]");
        assert_eq!(serde_json::from_str::<StateVector>(&text).unwrap(), s);
        assert!(serde_json::from_str::<StateVector>("[[1,0],[0,0],[0,0]]").is_err());
    }
}
