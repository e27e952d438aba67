//! Numerical laboratory for three-qubit blind fanout.
//!
//! The input qubit I is copied onto at least two of I, C, D without any
//! assumption on the initial state of C and D. The crate builds the copying
//! unitary, the Hamiltonian that generates it in one step, its Pauli
//! expansion, a NOT/CCNOT circuit for it, and simulates the timed dynamics.
//!
//! Basis order is `(|1>, |0>)` per qubit throughout; see [`linalg`].

pub mod circuits;
pub mod error;
pub mod evolution;
pub mod fanout;
pub mod hamiltonian;
pub mod linalg;
pub mod pauli;
pub mod register;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, StateVector, C64};
