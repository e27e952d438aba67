//! Browser bindings. Each exported function returns a JSON document; the
//! `*_json` functions hold the logic so they can be tested natively.

use fanout_core::circuits::{synthesize_swap_circuit, Alphabet};
use fanout_core::evolution::{trajectory, ProtocolFunction};
use fanout_core::hamiltonian::{
    energies, synthesize_hamiltonian, verify_exponential, HamiltonianParams,
};
use fanout_core::pauli::{expand, verify_swap_expansion, COEFFICIENT_TOLERANCE};
use fanout_core::register::labelled_state;
use fanout_core::Error;
use serde_json::json;
use wasm_bindgen::prelude::*;

pub const MAX_STEPS: usize = 200_000;

fn unit_params(gamma: f64, n: i32) -> Result<HamiltonianParams, Error> {
    HamiltonianParams::new(gamma, i64::from(n), 1.0, 1.0)
}

pub fn hamiltonian_json(gamma: f64, n: i32) -> Result<String, Error> {
    let p = unit_params(gamma, n)?;
    let h = synthesize_hamiltonian(&p)?;
    let check = verify_swap_expansion(&p)?;
    let table = expand(&h)?.table(Some(COEFFICIENT_TOLERANCE));
    Ok(json!({
        "gamma": gamma,
        "n": n,
        "alpha": p.alpha(),
        "beta": p.beta(),
        "gap_energy": p.gap_energy(),
        "hamiltonian": h,
        "spectrum": energies(&p)?.values,
        "exponential_residual": verify_exponential(&p)?,
        "pauli": table,
        "pauli_pass": check.pass,
    })
    .to_string())
}

pub fn parse_protocol(
    name: &str,
    amplitude: f64,
    k: u32,
    duty: f64,
) -> Result<ProtocolFunction, Error> {
    let f = match name {
        "const" | "constant" => ProtocolFunction::Constant,
        "sin" | "sinusoidal" => ProtocolFunction::Sinusoidal { amplitude, k },
        "square" | "square-pulse" => ProtocolFunction::SquarePulse { duty },
        other => return Err(Error::InvalidInput(format!("unknown protocol {other:?}"))),
    };
    f.validate()?;
    Ok(f)
}

#[allow(clippy::too_many_arguments)]
pub fn trajectory_json(
    gamma: f64,
    n: i32,
    protocol: &str,
    amplitude: f64,
    k: u32,
    duty: f64,
    input: &str,
    steps: usize,
    samples: usize,
) -> Result<String, Error> {
    if !(100..=MAX_STEPS).contains(&steps) {
        return Err(Error::InvalidInput(format!(
            "steps must be in 100..={MAX_STEPS}"
        )));
    }
    let p = unit_params(gamma, n)?;
    let f = parse_protocol(protocol, amplitude, k, duty)?;
    let psi0 = labelled_state(input)?;
    let points = trajectory(&p, &f, &psi0, steps, samples)?;
    Ok(json!({ "protocol": f, "input": input, "points": points }).to_string())
}

pub fn circuit_json(alphabet: &str, max_gates: usize) -> Result<String, Error> {
    let alphabet: Alphabet = alphabet.parse()?;
    let c = synthesize_swap_circuit(alphabet, max_gates)?;
    let gates: Vec<String> = c.gates.iter().map(ToString::to_string).collect();
    Ok(json!({
        "alphabet": alphabet.to_string(),
        "gates": gates,
        "ccnot_count": c.ccnot_count(),
        "permutation": c.permutation().0,
        "file": c.to_file(),
    })
    .to_string())
}

fn js(r: Result<String, Error>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn hamiltonian(gamma: f64, n: i32) -> Result<String, JsValue> {
    js(hamiltonian_json(gamma, n))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn evolve_populations(
    gamma: f64,
    n: i32,
    protocol: &str,
    amplitude: f64,
    k: u32,
    duty: f64,
    input: &str,
    steps: usize,
    samples: usize,
) -> Result<String, JsValue> {
    js(trajectory_json(
        gamma, n, protocol, amplitude, k, duty, input, steps, samples,
    ))
}

#[wasm_bindgen]
pub fn synthesize_circuit(alphabet: &str, max_gates: usize) -> Result<String, JsValue> {
    js(circuit_json(alphabet, max_gates))
}
