mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fanout_core::circuits::{synthesize_swap_circuit, Alphabet, Circuit, Permutation};
use fanout_core::evolution::{evolve, ProtocolFunction};
use fanout_core::fanout::{
    build_fanout_unitary, clone_fidelity, duplication_check, fanout_subspace_check,
    strict_copy_defect, CloneFidelity, FanoutPhases,
};
use fanout_core::hamiltonian::{
    constructive_hamiltonian, energies, synthesize_hamiltonian, verify_exponential,
    HamiltonianParams,
};
use fanout_core::pauli::{expand, verify_swap_expansion, COEFFICIENT_TOLERANCE};
use fanout_core::register::{labelled_state, random_state};
use fanout_core::{Error, StateVector};
use num_complex::Complex64;

use report::Report;

const SEED_ENV: &str = "FANOUT_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "fanout",
    version,
    about = "Verify the three-qubit blind fanout construction"
)]
struct Cli {
    /// Emit the structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Read angle flags in degrees instead of radians.
    #[arg(long, global = true)]
    degrees: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print U(alpha, beta) and its unitarity residual.
    Unitary {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
    },
    /// Synthesize H for (gamma, N) and check exp(-i H dt / hbar) = U.
    Hamiltonian {
        #[command(flatten)]
        params: Params,
    },
    /// Pauli coefficient table of the synthesized Hamiltonian.
    Pauli {
        #[command(flatten)]
        params: Params,
        /// List all 64 coefficients, not only the nonzero ones.
        #[arg(long)]
        all: bool,
    },
    /// Shortest reversible circuit realising the zero-phase fanout.
    Circuit {
        #[arg(long, default_value = "not+ccnot")]
        alphabet: Alphabet,
        #[arg(long, default_value_t = 9)]
        max_gates: usize,
    },
    /// Check that a circuit file composes to U(0, 0).
    VerifyCircuit {
        #[arg(long)]
        file: PathBuf,
    },
    /// Integrate the Schroedinger equation under a protocol function.
    Evolve {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "const")]
        protocol: Protocol,
        /// Sinusoidal amplitude.
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        amplitude: f64,
        /// Sinusoidal harmonic.
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Square-pulse duty cycle.
        #[arg(long, default_value_t = 0.5)]
        duty: f64,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        /// Initial basis state as an I C D bit string, e.g. 100.
        #[arg(long, default_value = "100")]
        input: String,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// Leakage and duplication checks over seeded random targets.
    FanoutCheck {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        beta: f64,
    },
    /// Per-qubit fidelities for a superposed input; no qubit becomes a copy.
    Noclone {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        beta: f64,
    },
}

#[derive(Debug, clap::Args)]
struct Params {
    #[arg(long, allow_negative_numbers = true)]
    gamma: f64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    dt: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    hbar: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Protocol {
    Const,
    Sin,
    Square,
}

struct Angles(bool);

impl Angles {
    fn rad(&self, x: f64) -> f64 {
        if self.0 {
            x.to_radians()
        } else {
            x
        }
    }
}

impl Params {
    fn resolve(&self, angles: &Angles) -> Result<HamiltonianParams, Error> {
        HamiltonianParams::new(angles.rad(self.gamma), self.n, self.dt, self.hbar)
    }
}

fn record_params(r: &mut Report, p: &HamiltonianParams) {
    r.param("gamma", p.gamma)
        .param("n", p.n_gap)
        .param("dt", p.dt)
        .param("hbar", p.hbar);
}

fn finite_phases(alpha: f64, beta: f64) -> Result<FanoutPhases, Error> {
    if alpha.is_finite() && beta.is_finite() {
        Ok(FanoutPhases::new(alpha, beta))
    } else {
        Err(Error::NonFinite("alpha/beta"))
    }
}

fn complex(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn run(command: Command, angles: &Angles) -> Result<Report, Error> {
    match command {
        Command::Unitary { alpha, beta } => {
            let phases = finite_phases(angles.rad(alpha), angles.rad(beta))?;
            let u = build_fanout_unitary(phases);
            let mut r = Report::new("unitary", 1e-12);
            r.param("alpha", phases.alpha)
                .param("beta", phases.beta)
                .result("matrix", &u)
                .check("unitarity_residual", u.unitarity_residual());
            Ok(r)
        }
        Command::Hamiltonian { params } => {
            let p = params.resolve(angles)?;
            let h = synthesize_hamiltonian(&p)?;
            let mut r = Report::new("hamiltonian", 1e-10);
            record_params(&mut r, &p);
            r.result("alpha", p.alpha())
                .result("beta", p.beta())
                .result("gap_energy", p.gap_energy())
                .result("coupling_100_011", complex(h[(3, 4)]))
                .result("coupling_magnitude", h[(3, 4)].norm())
                .result("spectrum", energies(&p)?.values)
                .result("hamiltonian", &h)
                .check(
                    "route_difference",
                    constructive_hamiltonian(&p).frobenius_distance(&h)?,
                )
                .check("exponential_residual", verify_exponential(&p)?);
            Ok(r)
        }
        Command::Pauli { params, all } => {
            let p = params.resolve(angles)?;
            let check = verify_swap_expansion(&p)?;
            let expansion = expand(&synthesize_hamiltonian(&p)?)?;
            let table = expansion.table(if all {
                None
            } else {
                Some(COEFFICIENT_TOLERANCE)
            });
            let mut r = Report::new("pauli", COEFFICIENT_TOLERANCE);
            record_params(&mut r, &p);
            r.param("all", all)
                .result("convention", check.convention)
                .result("rows", table.len())
                .result("coefficients", table)
                .check("max_term_error", check.max_term_error)
                .check("max_extraneous", check.max_extraneous)
                .require(check.pass);
            Ok(r)
        }
        Command::Circuit {
            alphabet,
            max_gates,
        } => {
            let mut r = Report::new("circuit", 0.0);
            r.param("alphabet", alphabet.to_string())
                .param("max_gates", max_gates);
            match synthesize_swap_circuit(alphabet, max_gates) {
                Ok(c) => circuit_results(&mut r, &c),
                Err(Error::NotFound(msg)) => {
                    r.result("found", false)
                        .result("message", msg)
                        .require(false);
                }
                Err(e) => return Err(e),
            }
            Ok(r)
        }
        Command::VerifyCircuit { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
            let c = Circuit::from_json(&text)?;
            let mut r = Report::new("verify-circuit", 0.0);
            r.param("file", file.display().to_string());
            circuit_results(&mut r, &c);
            Ok(r)
        }
        Command::Evolve {
            params,
            protocol,
            amplitude,
            k,
            duty,
            steps,
            input,
            tolerance,
        } => {
            let p = params.resolve(angles)?;
            let f = match protocol {
                Protocol::Const => ProtocolFunction::Constant,
                Protocol::Sin => ProtocolFunction::Sinusoidal { amplitude, k },
                Protocol::Square => ProtocolFunction::SquarePulse { duty },
            };
            f.validate()?;
            if tolerance.is_nan() || tolerance <= 0.0 {
                return Err(Error::InvalidInput("tolerance must be positive".into()));
            }
            let psi0 = labelled_state(&input)?;
            let report = evolve(&p, &f, &psi0, steps)?;
            let mut r = Report::new("evolve", tolerance);
            record_params(&mut r, &p);
            r.param("protocol", f)
                .param("steps", steps)
                .param("input", &input);
            r.result("psi_final", &report.psi_final)
                .result("norm_drift", report.norm_drift)
                .check("residual_vs_u", report.residual_vs_u);
            Ok(r)
        }
        Command::FanoutCheck {
            trials,
            seed,
            alpha,
            beta,
        } => {
            let phases = finite_phases(angles.rad(alpha), angles.rad(beta))?;
            require_trials(trials)?;
            let u = build_fanout_unitary(phases);
            let subspace = fanout_subspace_check(&u, trials, seed)?;
            let ones = duplication_check(&u, true, trials, seed)?;
            let zeros = duplication_check(&u, false, trials, seed)?;
            let mut r = Report::new("fanout-check", 1e-10);
            r.param("trials", trials)
                .param("seed", seed)
                .param("alpha", phases.alpha)
                .param("beta", phases.beta);
            r.check("max_leakage", subspace.max_leakage)
                .result("duplication_failures_input_1", ones.failures)
                .result("duplication_failures_input_0", zeros.failures)
                .require(ones.pass && zeros.pass);
            Ok(r)
        }
        Command::Noclone {
            a,
            b,
            seed,
            trials,
            alpha,
            beta,
        } => {
            let phases = finite_phases(angles.rad(alpha), angles.rad(beta))?;
            require_trials(trials)?;
            let norm = a.hypot(b);
            if !(norm.is_finite() && norm > 0.0) {
                return Err(Error::InvalidInput(
                    "a and b must be finite and not both zero".into(),
                ));
            }
            let (a, b) = (Complex64::new(a / norm, 0.0), Complex64::new(b / norm, 0.0));
            let u = build_fanout_unitary(phases);
            let mut best = CloneFidelity {
                f_i: 0.0,
                f_c: 0.0,
                f_d: 0.0,
            };
            for t in 0..trials {
                let phi = random_state(4, seed.wrapping_add(t as u64))?;
                let f = clone_fidelity(&u, a, b, &phi)?;
                best.f_i = best.f_i.max(f.f_i);
                best.f_c = best.f_c.max(f.f_c);
                best.f_d = best.f_d.max(f.f_d);
            }
            let (identical, orthogonal) = copy_defects(seed)?;
            let mut r = Report::new("noclone", 1e-6);
            r.param("a", a.re)
                .param("b", b.re)
                .param("seed", seed)
                .param("trials", trials)
                .param("alpha", phases.alpha)
                .param("beta", phases.beta);
            r.result("max_fidelity_by_qubit", best)
                .result("max_fidelity", best.max())
                .result("copy_defect_identical", identical)
                .result("copy_defect_orthogonal", orthogonal)
                .require(best.max() < 1.0 - 1e-6)
                .require(identical <= 1e-15 && (orthogonal - 1.0).abs() <= 1e-15);
            Ok(r)
        }
    }
}

fn require_trials(trials: usize) -> Result<(), Error> {
    if trials == 0 {
        Err(Error::InvalidInput("trials must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Copy defects for an identical and an orthogonal pair of seeded targets.
fn copy_defects(seed: u64) -> Result<(f64, f64), Error> {
    let phi = random_state(4, seed)?;
    let other = random_state(4, seed.wrapping_add(1))?;
    let overlap = phi.inner(&other)?;
    let orth: Vec<Complex64> = other
        .amplitudes()
        .iter()
        .zip(phi.amplitudes())
        .map(|(o, p)| o - p * overlap)
        .collect();
    let orth = StateVector::new(orth)?.normalized()?;
    Ok((
        strict_copy_defect(&phi, &phi)?,
        strict_copy_defect(&phi, &orth)?,
    ))
}

fn circuit_results(r: &mut Report, c: &Circuit) {
    let exact = c.permutation() == Permutation::fanout_swap()
        && c.unitary() == build_fanout_unitary(FanoutPhases::new(0.0, 0.0));
    r.result("found", true)
        .result("circuit", c.to_string())
        .result("gate_count", c.len())
        .result("ccnot_count", c.ccnot_count())
        .result("permutation", c.permutation().0)
        .result("file", c.to_file())
        .result("exact_match", exact)
        .require(exact);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let angles = Angles(cli.degrees);
    match run(cli.command, &angles) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
