//! Hamiltonian that generates the fanout unitary in one step.
//!
//! `U = T e^{iA} T^dagger` with `T` the block diagonalizer of the swap and
//! `A` a real diagonal phase matrix, so `H = -hbar T A T^dagger / dt`
//! satisfies `exp(-i H dt / hbar) = U`. The integer freedom in `A` is fixed
//! as `N1..N3 = N6..N8 = 0`, `N4 = 0`, `N5 = N`, and the two phases are
//! tied by `alpha + beta + pi + 2 pi N = 0`, which leaves one angle
//! `gamma = (alpha - beta) / 2` and one integer `N`. Under that gauge `H` has
//! only the `|100>`/`|011>` coupling `(pi hbar / dt)(N + 1/2) e^{-i gamma}`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::fanout::{build_fanout_unitary, FanoutPhases, ROW_011, ROW_100};
use crate::linalg::{ComplexMatrix, C64, I};

/// Agreement required between the constructive and closed-form routes.
pub const ROUTE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HamiltonianParams {
    pub gamma: f64,
    pub n_gap: i64,
    pub dt: f64,
    pub hbar: f64,
}

impl HamiltonianParams {
    pub fn new(gamma: f64, n_gap: i64, dt: f64, hbar: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(invalid(format!("dt must be positive and finite, got {dt}")));
        }
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(invalid(format!(
                "hbar must be positive and finite, got {hbar}"
            )));
        }
        if !gamma.is_finite() {
            return Err(invalid("gamma must be finite"));
        }
        Ok(Self {
            gamma,
            n_gap,
            dt,
            hbar,
        })
    }

    /// `hbar = dt = 1`.
    pub fn unit(gamma: f64, n_gap: i64) -> Self {
        Self {
            gamma,
            n_gap,
            dt: 1.0,
            hbar: 1.0,
        }
    }

    fn half_shift(&self) -> f64 {
        self.n_gap as f64 + 0.5
    }

    pub fn alpha(&self) -> f64 {
        self.gamma - PI * self.half_shift()
    }

    pub fn beta(&self) -> f64 {
        -self.gamma - PI * self.half_shift()
    }

    pub fn phases(&self) -> FanoutPhases {
        FanoutPhases::new(self.alpha(), self.beta())
    }

    /// `E4 = pi hbar (N + 1/2) / dt`; `E5 = -E4`.
    pub fn gap_energy(&self) -> f64 {
        PI * self.hbar * self.half_shift() / self.dt
    }

    pub fn phase_spec(&self) -> PhaseMatrixSpec {
        let mut n = [0; 8];
        n[4] = self.n_gap;
        PhaseMatrixSpec {
            n,
            alpha: self.alpha(),
            beta: self.beta(),
        }
    }
}

/// Integer shifts `N1..N8` and phases for the diagonal phase matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseMatrixSpec {
    pub n: [i64; 8],
    pub alpha: f64,
    pub beta: f64,
}

impl PhaseMatrixSpec {
    pub fn entries(&self) -> [f64; 8] {
        let mean = 0.5 * (self.alpha + self.beta);
        std::array::from_fn(|j| {
            let shift = 2.0 * PI * self.n[j] as f64;
            match j {
                ROW_100 => mean + shift,
                ROW_011 => mean + PI + shift,
                _ => shift,
            }
        })
    }
}

/// `T` with the block `(1/sqrt2) [[e^{i b/2}, e^{i b/2}], [e^{i a/2}, -e^{i a/2}]]`
/// on rows `|100>`, `|011>`.
///
/// The half angles are taken from `alpha` and `beta` exactly as given. A
/// `2 pi` shift in either one flips the sign of a row of the block, so the
/// same representative must be used here and in the phase matrix.
pub fn build_diagonalizer(alpha: f64, beta: f64) -> ComplexMatrix {
    let mut t = ComplexMatrix::identity(8);
    let eb = C64::from_polar(FRAC_1_SQRT_2, 0.5 * beta);
    let ea = C64::from_polar(FRAC_1_SQRT_2, 0.5 * alpha);
    t[(ROW_100, ROW_100)] = eb;
    t[(ROW_100, ROW_011)] = eb;
    t[(ROW_011, ROW_100)] = ea;
    t[(ROW_011, ROW_011)] = -ea;
    t
}

pub fn build_phase_matrix(spec: &PhaseMatrixSpec) -> ComplexMatrix {
    let entries: Vec<C64> = spec.entries().iter().map(|&x| C64::new(x, 0.0)).collect();
    ComplexMatrix::diagonal(&entries)
}

/// `H = -hbar T A T^dagger / dt`.
pub fn constructive_hamiltonian(p: &HamiltonianParams) -> ComplexMatrix {
    let t = build_diagonalizer(p.alpha(), p.beta());
    let a = build_phase_matrix(&p.phase_spec());
    (&(&t * &a) * &t.dagger()).scale(C64::new(-p.hbar / p.dt, 0.0))
}

/// The two-entry form: `H[3][4] = E4 e^{-i gamma}`, `H[4][3] = E4 e^{i gamma}`.
pub fn closed_form_hamiltonian(p: &HamiltonianParams) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(8);
    let e = p.gap_energy();
    h[(ROW_100, ROW_011)] = C64::from_polar(e, -p.gamma);
    h[(ROW_011, ROW_100)] = C64::from_polar(e, p.gamma);
    h
}

/// Builds `H` by both routes and returns the closed form once they agree.
pub fn synthesize_hamiltonian(p: &HamiltonianParams) -> Result<ComplexMatrix> {
    let p = HamiltonianParams::new(p.gamma, p.n_gap, p.dt, p.hbar)?;
    let constructive = constructive_hamiltonian(&p);
    let closed = closed_form_hamiltonian(&p);
    let gap = constructive.frobenius_distance(&closed)?;
    if gap > ROUTE_TOLERANCE {
        return Err(Error::Inconsistent(format!(
            "constructive and closed-form Hamiltonians differ by {gap:e}"
        )));
    }
    Ok(closed)
}

#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub values: [f64; 8],
}

/// Sorted eigenvalues of the synthesized `H`.
///
/// `H` only couples `|100>` and `|011>`, so the spectrum is the six
/// uncoupled diagonal entries plus the two eigenvalues of that 2x2 block.
pub fn energies(p: &HamiltonianParams) -> Result<Spectrum> {
    let h = synthesize_hamiltonian(p)?;
    let block = [ROW_100, ROW_011];
    for r in 0..8 {
        for c in 0..8 {
            let inside = block.contains(&r) && block.contains(&c);
            if r != c && !inside && h[(r, c)].norm() > 0.0 {
                return Err(Error::Inconsistent(format!(
                    "unexpected coupling at ({r}, {c})"
                )));
            }
        }
    }
    let a = h[(ROW_100, ROW_100)].re;
    let d = h[(ROW_011, ROW_011)].re;
    let b = h[(ROW_100, ROW_011)].norm();
    let mid = 0.5 * (a + d);
    let radius = (0.25 * (a - d).powi(2) + b * b).sqrt();
    let mut values = [0.0; 8];
    for (j, v) in values.iter_mut().enumerate() {
        *v = if block.contains(&j) {
            0.0
        } else {
            h[(j, j)].re
        };
    }
    values[ROW_100] = mid - radius;
    values[ROW_011] = mid + radius;
    values.sort_by(f64::total_cmp);
    Ok(Spectrum { values })
}

/// `||exp(-i H dt / hbar) - U(alpha, beta)||_F`.
pub fn verify_exponential(p: &HamiltonianParams) -> Result<f64> {
    let h = synthesize_hamiltonian(p)?;
    let exponent = h.scale(-I * (p.dt / p.hbar));
    let evolved = exponent.exp()?;
    evolved.frobenius_distance(&build_fanout_unitary(p.phases()))
}

/// Largest magnitude among entries of `h` outside the coupling pair.
pub fn max_off_support(h: &ComplexMatrix) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..8 {
        for c in 0..8 {
            if (r, c) != (ROW_100, ROW_011) && (r, c) != (ROW_011, ROW_100) {
                worst = worst.max(h[(r, c)].norm());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn off_diagonal_max(m: &ComplexMatrix) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..8 {
            for c in 0..8 {
                if r != c {
                    worst = worst.max(m[(r, c)].norm());
                }
            }
        }
        worst
    }

    #[test]
    fn diagonalizer_at_zero_phases_is_hadamard_block() {
        let t = build_diagonalizer(0.0, 0.0);
        let s = FRAC_1_SQRT_2;
        assert!((t[(3, 3)] - s).norm() < 1e-16);
        assert!((t[(3, 4)] - s).norm() < 1e-16);
        assert!((t[(4, 3)] - s).norm() < 1e-16);
        assert!((t[(4, 4)] + s).norm() < 1e-16);
        assert!(t.unitarity_residual() < 1e-12);
    }

    #[test]
    fn diagonalizer_diagonalizes() {
        for (alpha, beta) in [(0.0, 0.0), (0.4, -1.1), (2.9, 2.2), (-5.0, 1.0)] {
            let t = build_diagonalizer(alpha, beta);
            let u = build_fanout_unitary(FanoutPhases::new(alpha, beta));
            let d = &(&t.dagger() * &u) * &t;
            assert!(off_diagonal_max(&d) < 1e-14);
            let mean = C64::from_polar(1.0, 0.5 * (alpha + beta));
            assert!((d[(3, 3)] - mean).norm() < 1e-14);
            assert!((d[(4, 4)] + mean).norm() < 1e-14);
        }
    }

    #[test]
    fn phase_matrix_entries() {
        let spec = PhaseMatrixSpec {
            n: [0; 8],
            alpha: 0.0,
            beta: 0.0,
        };
        assert_eq!(spec.entries(), [0.0, 0.0, 0.0, 0.0, PI, 0.0, 0.0, 0.0]);

        let mut n = [0; 8];
        n[4] = 1;
        let spec = PhaseMatrixSpec {
            n,
            alpha: 0.3,
            beta: 0.5,
        };
        assert!((spec.entries()[4] - (0.4 + 3.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn exp_of_phase_matrix_matches_diagonalized_unitary() {
        let p = HamiltonianParams::unit(0.8, 2);
        let a = build_phase_matrix(&p.phase_spec());
        let t = build_diagonalizer(p.alpha(), p.beta());
        let u = build_fanout_unitary(p.phases());
        let d = &(&t.dagger() * &u) * &t;
        for j in 0..8 {
            let lhs = C64::from_polar(1.0, a[(j, j)].re);
            assert!((lhs - d[(j, j)]).norm() < 1e-12);
        }
    }

    #[test]
    fn closed_form_examples() {
        let h = synthesize_hamiltonian(&HamiltonianParams::unit(0.0, 0)).unwrap();
        assert!((h[(3, 4)] - FRAC_PI_2).norm() < 1e-15);
        assert!((h[(4, 3)] - FRAC_PI_2).norm() < 1e-15);
        assert_eq!(max_off_support(&h), 0.0);

        let h = synthesize_hamiltonian(&HamiltonianParams::unit(FRAC_PI_2, 0)).unwrap();
        assert!((h[(3, 4)] - C64::new(0.0, -FRAC_PI_2)).norm() < 1e-15);

        let h = synthesize_hamiltonian(&HamiltonianParams::unit(0.3, 1)).unwrap();
        assert!((h[(3, 4)].norm() - 1.5 * PI).abs() < 1e-14);
    }

    #[test]
    fn routes_agree_on_grid() {
        for k in 0..32 {
            let gamma = -PI + 2.0 * PI * k as f64 / 31.0;
            for n in [-2, -1, 0, 1, 3] {
                let p = HamiltonianParams::unit(gamma, n);
                let gap = constructive_hamiltonian(&p)
                    .frobenius_distance(&closed_form_hamiltonian(&p))
                    .unwrap();
                assert!(gap < ROUTE_TOLERANCE, "gamma {gamma} n {n}: {gap:e}");
                let h = synthesize_hamiltonian(&p).unwrap();
                assert!(h.hermiticity_residual() < 1e-15);
                assert!((0..8).all(|j| h[(j, j)].norm() < 1e-15));
                assert!(verify_exponential(&p).unwrap() < 1e-10);
            }
        }
    }

    #[test]
    fn principal_branch_would_flip_the_coupling() {
        // gamma = -2.5, N = 0: beta = 0.93, alpha = -4.07 lies outside (-pi, pi].
        let p = HamiltonianParams::unit(-2.5, 0);
        let wrapped_alpha = p.alpha() + 2.0 * PI;
        let t = build_diagonalizer(wrapped_alpha, p.beta());
        let a = build_phase_matrix(&p.phase_spec());
        let h = (&(&t * &a) * &t.dagger()).scale(C64::new(-1.0, 0.0));
        let closed = closed_form_hamiltonian(&p);
        assert!((h[(3, 4)] + closed[(3, 4)]).norm() < 1e-12);
        assert!(
            constructive_hamiltonian(&p)
                .frobenius_distance(&closed)
                .unwrap()
                < 1e-12
        );
    }

    #[test]
    fn derived_phase_parity() {
        for n in -4..=4 {
            for gamma in [-2.0, 0.0, 0.7, 3.0] {
                let p = HamiltonianParams::unit(gamma, n);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let lhs = C64::from_polar(1.0, p.alpha());
                let rhs = -I * sign * C64::from_polar(1.0, gamma);
                assert!((lhs - rhs).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let s = energies(&HamiltonianParams::unit(0.0, 0)).unwrap();
        let expected = [-FRAC_PI_2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, FRAC_PI_2];
        for (a, b) in s.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14);
        }
        let s = energies(&HamiltonianParams::unit(1.0, 3)).unwrap();
        assert!((s.values[0] + 3.5 * PI).abs() < 1e-13);
        assert!((s.values[7] - 3.5 * PI).abs() < 1e-13);
        let h = synthesize_hamiltonian(&HamiltonianParams::unit(1.0, 3)).unwrap();
        assert!(h.trace().norm() < 1e-15);
    }

    #[test]
    fn exponential_examples() {
        let p = HamiltonianParams::unit(0.0, 0);
        assert!(verify_exponential(&p).unwrap() < 1e-12);
        let h = synthesize_hamiltonian(&p).unwrap();
        let e = h.scale(-I).exp().unwrap();
        assert!((e[(3, 4)] + I).norm() < 1e-12 && (e[(4, 3)] + I).norm() < 1e-12);

        assert!(verify_exponential(&HamiltonianParams::unit(0.7, 2)).unwrap() < 1e-10);
        let p = HamiltonianParams::new(1.1, 0, 0.5, 2.0).unwrap();
        assert!(verify_exponential(&p).unwrap() < 1e-10);
    }

    #[test]
    fn invalid_units_rejected() {
        assert!(HamiltonianParams::new(0.0, 0, 0.0, 1.0).is_err());
        assert!(HamiltonianParams::new(0.0, 0, 1.0, -1.0).is_err());
        let bad = HamiltonianParams {
            gamma: 0.0,
            n_gap: 0,
            dt: 0.0,
            hbar: 1.0,
        };
        assert!(synthesize_hamiltonian(&bad).is_err());
    }
}
