//! Externally timed dynamics `i hbar d psi/dt = f(t) H psi` on `[0, dt]`.
//!
//! `H` commutes with itself at all times, so the propagator depends on `f`
//! only through its integral; any protocol with mean 1 lands on the same
//! `U = exp(-i H dt / hbar)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::fanout::build_fanout_unitary;
use crate::hamiltonian::{synthesize_hamiltonian, HamiltonianParams};
use crate::linalg::{ComplexMatrix, StateVector, C64, I};

pub const MIN_STEPS: usize = 100;

/// Time profile multiplying `H`; every kind has mean 1 over `[0, dt]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProtocolFunction {
    Constant,
    /// `1 + amplitude * sin(2 pi k t / dt)`.
    Sinusoidal {
        amplitude: f64,
        k: u32,
    },
    /// `1 / duty` on `[0, duty * dt]`, zero after.
    SquarePulse {
        duty: f64,
    },
}

impl ProtocolFunction {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ProtocolFunction::Constant => Ok(()),
            ProtocolFunction::Sinusoidal { amplitude, k } => {
                if k == 0 {
                    return Err(invalid("sinusoidal protocol needs k >= 1"));
                }
                if !amplitude.is_finite() {
                    return Err(invalid("sinusoidal amplitude must be finite"));
                }
                Ok(())
            }
            ProtocolFunction::SquarePulse { duty } => {
                if duty > 0.0 && duty <= 1.0 {
                    Ok(())
                } else {
                    Err(invalid(format!(
                        "square-pulse duty must be in (0, 1], got {duty}"
                    )))
                }
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProtocolFunction::Constant => "constant",
            ProtocolFunction::Sinusoidal { .. } => "sinusoidal",
            ProtocolFunction::SquarePulse { .. } => "square-pulse",
        }
    }

    fn raw_value(&self, t: f64, dt: f64) -> f64 {
        match *self {
            ProtocolFunction::Constant => 1.0,
            ProtocolFunction::Sinusoidal { amplitude, k } => {
                1.0 + amplitude * (2.0 * PI * k as f64 * t / dt).sin()
            }
            ProtocolFunction::SquarePulse { duty } => {
                if t <= duty * dt {
                    1.0 / duty
                } else {
                    0.0
                }
            }
        }
    }

    /// Interior jump times.
    fn jumps(&self, dt: f64) -> Option<f64> {
        match *self {
            ProtocolFunction::SquarePulse { duty } if duty < 1.0 => Some(duty * dt),
            _ => None,
        }
    }

    /// Value at `t` inside the smooth piece `[a, b]`, taking one-sided
    /// limits at the ends.
    fn value_on_piece(&self, t: f64, a: f64, b: f64, dt: f64) -> f64 {
        match self {
            ProtocolFunction::SquarePulse { .. } => self.raw_value(0.5 * (a + b), dt),
            _ => self.raw_value(t, dt),
        }
    }
}

pub fn protocol_value(f: &ProtocolFunction, t: f64, dt: f64) -> Result<f64> {
    f.validate()?;
    if !(0.0..=dt).contains(&t) {
        return Err(invalid(format!("t = {t} outside [0, {dt}]")));
    }
    Ok(f.raw_value(t, dt))
}

/// RK4 integration of `d psi/dt = -i f(t) H psi / hbar` over `[0, dt]` with
/// `steps` uniform steps. A step containing a protocol jump is split at the
/// jump. `observe` sees `(t, psi)` after every full step.
pub fn integrate(
    h: &ComplexMatrix,
    hbar: f64,
    dt: f64,
    f: &ProtocolFunction,
    psi0: &StateVector,
    steps: usize,
    mut observe: impl FnMut(f64, &StateVector),
) -> Result<StateVector> {
    f.validate()?;
    if steps == 0 {
        return Err(invalid("steps must be positive"));
    }
    if h.dim() != psi0.dim() {
        return Err(invalid("Hamiltonian and state dimensions differ"));
    }
    let generator = h.scale(-I / hbar);
    let jump = f.jumps(dt);
    let eps = 1e-12 * dt;

    let mut psi: Vec<C64> = psi0.amplitudes().to_vec();
    observe(0.0, psi0);
    for i in 0..steps {
        let a = dt * i as f64 / steps as f64;
        let b = dt * (i + 1) as f64 / steps as f64;
        match jump {
            Some(tj) if a + eps < tj && tj < b - eps => {
                rk4_step(&generator, f, dt, &mut psi, a, tj);
                rk4_step(&generator, f, dt, &mut psi, tj, b);
            }
            _ => rk4_step(&generator, f, dt, &mut psi, a, b),
        }
        observe(b, &StateVector::new(psi.clone())?);
    }
    StateVector::new(psi)
}

fn rk4_step(
    generator: &ComplexMatrix,
    f: &ProtocolFunction,
    dt: f64,
    psi: &mut [C64],
    a: f64,
    b: f64,
) {
    let h = b - a;
    let n = psi.len();
    let deriv = |t: f64, v: &[C64]| -> Vec<C64> {
        let s = f.value_on_piece(t, a, b, dt);
        (0..n)
            .map(|r| s * (0..n).map(|c| generator[(r, c)] * v[c]).sum::<C64>())
            .collect()
    };
    let shifted = |v: &[C64], k: &[C64], w: f64| -> Vec<C64> {
        v.iter().zip(k).map(|(x, y)| x + y * w).collect()
    };
    let k1 = deriv(a, psi);
    let k2 = deriv(a + 0.5 * h, &shifted(psi, &k1, 0.5 * h));
    let k3 = deriv(a + 0.5 * h, &shifted(psi, &k2, 0.5 * h));
    let k4 = deriv(b, &shifted(psi, &k3, h));
    for j in 0..n {
        psi[j] += (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) * (h / 6.0);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvolutionReport {
    pub protocol: ProtocolFunction,
    pub steps: usize,
    pub psi_final: StateVector,
    /// `||psi_final - U psi0||`.
    pub residual_vs_u: f64,
    pub norm_drift: f64,
}

/// Evolves `psi0` under `f(t) H(p)` and compares with `U(alpha, beta) psi0`.
pub fn evolve(
    p: &HamiltonianParams,
    f: &ProtocolFunction,
    psi0: &StateVector,
    steps: usize,
) -> Result<EvolutionReport> {
    if steps < MIN_STEPS {
        return Err(invalid(format!(
            "steps must be at least {MIN_STEPS}, got {steps}"
        )));
    }
    if psi0.dim() != 8 || !psi0.is_normalized(1e-12) {
        return Err(invalid(
            "initial state must be a normalized 8-dimensional state",
        ));
    }
    let h = synthesize_hamiltonian(p)?;
    let psi_final = integrate(&h, p.hbar, p.dt, f, psi0, steps, |_, _| {})?;
    let exact = build_fanout_unitary(p.phases()).apply(psi0)?;
    Ok(EvolutionReport {
        protocol: *f,
        steps,
        residual_vs_u: psi_final.distance(&exact)?,
        norm_drift: (psi_final.norm() - 1.0).abs(),
        psi_final,
    })
}

/// `| ||psi_final|| - 1 |`.
pub fn norm_drift(report: &EvolutionReport) -> f64 {
    (report.psi_final.norm() - 1.0).abs()
}

#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub populations: [f64; 8],
}

/// Basis-state populations sampled roughly `samples` times along the
/// evolution.
pub fn trajectory(
    p: &HamiltonianParams,
    f: &ProtocolFunction,
    psi0: &StateVector,
    steps: usize,
    samples: usize,
) -> Result<Vec<TrajectoryPoint>> {
    let h = synthesize_hamiltonian(p)?;
    let stride = (steps / samples.max(1)).max(1);
    let mut points = Vec::new();
    let mut count = 0usize;
    integrate(&h, p.hbar, p.dt, f, psi0, steps, |t, psi| {
        if count.is_multiple_of(stride) || count == steps {
            let mut populations = [0.0; 8];
            for (slot, z) in populations.iter_mut().zip(psi.amplitudes()) {
                *slot = z.norm_sqr();
            }
            points.push(TrajectoryPoint { t, populations });
        }
        count += 1;
    })?;
    Ok(points)
}
