//! Expansion of 8x8 operators over the 64 three-qubit Pauli strings.
//!
//! Single-qubit factors are the standard matrices written in the
//! `(|1>, |0>)` basis, so `sigma_z |1> = +|1>` and `|1><0| = (x + i y) / 2`.
//! With this convention the swap Hamiltonian expands into eight
//! three-spin terms with the sign pattern checked by [`verify_swap_expansion`].
//! In the reversed basis the odd-`y` strings change sign.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hamiltonian::{synthesize_hamiltonian, HamiltonianParams};
use crate::linalg::{ComplexMatrix, C64, I, ONE, ZERO};

/// Basis convention reported alongside every expansion check.
pub const BASIS_CONVENTION: &str =
    "single-qubit basis (|1>, |0>); sigma_z|1> = +|1>; factor order I, C, D";

pub const COEFFICIENT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Identity,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::Identity, Axis::X, Axis::Y, Axis::Z];

    pub fn symbol(self) -> char {
        match self {
            Axis::Identity => '1',
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }

    pub fn matrix(self) -> ComplexMatrix {
        let entries = match self {
            Axis::Identity => [ONE, ZERO, ZERO, ONE],
            Axis::X => [ZERO, ONE, ONE, ZERO],
            Axis::Y => [ZERO, -I, I, ZERO],
            Axis::Z => [ONE, ZERO, ZERO, -ONE],
        };
        ComplexMatrix::from_fn(2, |r, c| entries[2 * r + c])
    }
}

/// Axis triple in (I, C, D) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    pub axes: [Axis; 3],
}

impl PauliString {
    pub fn new(i: Axis, c: Axis, d: Axis) -> Self {
        Self { axes: [i, c, d] }
    }

    /// All 64 strings, `111, 11x, ..., zzz`.
    pub fn all() -> impl Iterator<Item = PauliString> {
        (0..64).map(Self::from_ordinal)
    }

    pub fn from_ordinal(k: usize) -> Self {
        let a = |j: usize| Axis::ALL[(k >> (2 * (2 - j))) & 3];
        Self::new(a(0), a(1), a(2))
    }

    pub fn ordinal(self) -> usize {
        self.axes.iter().fold(0, |acc, &a| 4 * acc + a as usize)
    }

    pub fn is_identity(self) -> bool {
        self.axes == [Axis::Identity; 3]
    }

    pub fn matrix(self) -> ComplexMatrix {
        let [a, b, c] = self.axes.map(Axis::matrix);
        a.kron(&b).kron(&c)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.axes {
            write!(f, "{}", a.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let axes: Vec<Axis> = s
            .chars()
            .map(|ch| match ch {
                '1' => Ok(Axis::Identity),
                'x' => Ok(Axis::X),
                'y' => Ok(Axis::Y),
                'z' => Ok(Axis::Z),
                _ => Err(invalid(format!("bad Pauli axis {ch:?} in {s:?}"))),
            })
            .collect::<Result<_>>()?;
        match axes[..] {
            [i, c, d] => Ok(Self::new(i, c, d)),
            _ => Err(invalid(format!("Pauli string {s:?} must have 3 axes"))),
        }
    }
}

pub fn pauli_matrix(s: PauliString) -> ComplexMatrix {
    s.matrix()
}

/// One row of the serialized coefficient table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub axes: String,
    pub re: f64,
    pub im: f64,
}

/// Coefficients `c_P` of `M = sum_P c_P P`, indexed by [`PauliString::ordinal`].
#[derive(Debug, Clone, PartialEq)]
pub struct PauliExpansion {
    coefficients: [C64; 64],
}

impl PauliExpansion {
    pub fn zero() -> Self {
        Self {
            coefficients: [ZERO; 64],
        }
    }

    pub fn get(&self, s: PauliString) -> C64 {
        self.coefficients[s.ordinal()]
    }

    pub fn set(&mut self, s: PauliString, c: C64) {
        self.coefficients[s.ordinal()] = c;
    }

    pub fn iter(&self) -> impl Iterator<Item = (PauliString, C64)> + '_ {
        PauliString::all().map(move |s| (s, self.get(s)))
    }

    pub fn nonzero(&self, tol: f64) -> impl Iterator<Item = (PauliString, C64)> + '_ {
        self.iter().filter(move |(_, c)| c.norm() > tol)
    }

    pub fn max_imaginary(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c.im.abs())
            .fold(0.0, f64::max)
    }

    pub fn table(&self, only_above: Option<f64>) -> Vec<CoefficientEntry> {
        self.iter()
            .filter(|(_, c)| only_above.is_none_or(|tol| c.norm() > tol))
            .map(|(s, c)| CoefficientEntry {
                axes: s.to_string(),
                re: c.re,
                im: c.im,
            })
            .collect()
    }

    pub fn from_table(entries: &[CoefficientEntry]) -> Result<Self> {
        let mut e = Self::zero();
        for entry in entries {
            e.set(entry.axes.parse()?, C64::new(entry.re, entry.im));
        }
        Ok(e)
    }
}

/// `c_P = Tr(P M) / 8` for every string.
pub fn expand(m: &ComplexMatrix) -> Result<PauliExpansion> {
    if m.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: m.dim(),
        });
    }
    let mut e = PauliExpansion::zero();
    for s in PauliString::all() {
        let p = s.matrix();
        // Tr(P M) without forming the product.
        let tr: C64 = (0..8)
            .flat_map(|r| (0..8).map(move |k| (r, k)))
            .map(|(r, k)| p[(r, k)] * m[(k, r)])
            .sum();
        e.set(s, tr / 8.0);
    }
    Ok(e)
}

/// `sum_P c_P P`.
pub fn reconstruct(e: &PauliExpansion) -> ComplexMatrix {
    e.iter()
        .filter(|(_, c)| *c != ZERO)
        .fold(ComplexMatrix::zeros(8), |acc, (s, c)| {
            &acc + &s.matrix().scale(c)
        })
}

/// The analytic expansion of the swap Hamiltonian: with
/// `K = (pi hbar / 4 dt)(N + 1/2)`,
/// `K cos(g) (xxx - xyy + yxy + yyx) - K sin(g) (yyy - yxx + xyx + xxy)`.
pub fn expected_swap_expansion(p: &HamiltonianParams) -> PauliExpansion {
    let k = p.gap_energy() / 4.0;
    let (sin, cos) = p.gamma.sin_cos();
    let mut e = PauliExpansion::zero();
    let terms = [
        ("xxx", k * cos),
        ("xyy", -k * cos),
        ("yxy", k * cos),
        ("yyx", k * cos),
        ("yyy", -k * sin),
        ("yxx", k * sin),
        ("xyx", -k * sin),
        ("xxy", -k * sin),
    ];
    for (axes, c) in terms {
        e.set(axes.parse().expect("static label"), C64::new(c, 0.0));
    }
    e
}

#[derive(Debug, Clone, Serialize)]
pub struct SwapExpansionReport {
    pub pass: bool,
    pub convention: &'static str,
    /// Largest deviation of the eight expected terms from their values.
    pub max_term_error: f64,
    /// Largest magnitude among the other 56 coefficients.
    pub max_extraneous: f64,
    pub coefficient_table: Vec<CoefficientEntry>,
}

/// Expands the synthesized Hamiltonian and compares it with
/// [`expected_swap_expansion`].
pub fn verify_swap_expansion(p: &HamiltonianParams) -> Result<SwapExpansionReport> {
    let actual = expand(&synthesize_hamiltonian(p)?)?;
    let expected = expected_swap_expansion(p);
    let support = ["xxx", "xyy", "yxy", "yyx", "yyy", "yxx", "xyx", "xxy"]
        .map(|s| s.parse::<PauliString>().expect("static label"));

    let mut max_term_error = 0.0f64;
    let mut max_extraneous = 0.0f64;
    for s in PauliString::all() {
        let a = actual.get(s);
        if support.contains(&s) {
            max_term_error = max_term_error.max((a - expected.get(s)).norm());
        } else {
            max_extraneous = max_extraneous.max(a.norm());
        }
    }
    Ok(SwapExpansionReport {
        pass: max_term_error < COEFFICIENT_TOLERANCE && max_extraneous < COEFFICIENT_TOLERANCE,
        convention: BASIS_CONVENTION,
        max_term_error,
        max_extraneous,
        coefficient_table: actual.table(None),
    })
}
