//! NOT / CNOT / CCNOT circuits on the I, C, D register.
//!
//! Circuits are applied first-listed-first: `[g1, g2]` has unitary `G2 G1`.
//! Classical reversible gates are handled as permutations of the 8 basis
//! rows, so composition and comparison are exact.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::fanout::{ROW_011, ROW_100};
use crate::linalg::{ComplexMatrix, C64, ONE, ZERO};
use crate::register::{BasisLabel, Qubit};

/// The only accepted value of the circuit file's `order` field.
pub const FIRST_ACTS_FIRST: &str = "first-acts-first";

/// Permutation of basis rows; entry `j` is the image of row `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation(pub [u8; 8]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3, 4, 5, 6, 7]);

    /// Swaps `|100>` and `|011>`.
    pub fn fanout_swap() -> Self {
        let mut p = Self::IDENTITY;
        p.0.swap(ROW_100, ROW_011);
        p
    }

    /// `next` applied after `self`.
    pub fn then(self, next: Permutation) -> Permutation {
        Permutation(self.0.map(|j| next.0[j as usize]))
    }

    pub fn image(self, row: usize) -> usize {
        self.0[row] as usize
    }

    pub fn matrix(self) -> ComplexMatrix {
        let perm: Vec<usize> = self.0.iter().map(|&r| r as usize).collect();
        ComplexMatrix::from_permutation(&perm)
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(self) -> i32 {
        let mut seen = [false; 8];
        let mut sign = 1;
        for start in 0..8 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gate {
    Not { target: Qubit },
    Cnot { control: Qubit, target: Qubit },
    Ccnot { controls: [Qubit; 2], target: Qubit },
}

impl Gate {
    pub fn not(target: Qubit) -> Self {
        Gate::Not { target }
    }

    pub fn cnot(control: Qubit, target: Qubit) -> Result<Self> {
        if control == target {
            return Err(invalid(format!("CNOT control and target both {control}")));
        }
        Ok(Gate::Cnot { control, target })
    }

    /// Controls are stored in I < C < D order.
    pub fn ccnot(a: Qubit, b: Qubit, target: Qubit) -> Result<Self> {
        if a == b || a == target || b == target {
            return Err(invalid(format!(
                "CCNOT qubits must be distinct: {a}, {b}, {target}"
            )));
        }
        let controls = if a < b { [a, b] } else { [b, a] };
        Ok(Gate::Ccnot { controls, target })
    }

    pub fn controls(&self) -> &[Qubit] {
        match self {
            Gate::Not { .. } => &[],
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Ccnot { controls, .. } => controls,
        }
    }

    pub fn target(&self) -> Qubit {
        match *self {
            Gate::Not { target } | Gate::Cnot { target, .. } | Gate::Ccnot { target, .. } => target,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Gate::Not { .. } => "NOT",
            Gate::Cnot { .. } => "CNOT",
            Gate::Ccnot { .. } => "CCNOT",
        }
    }

    /// Flips the target of every basis state whose controls all read 1.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::IDENTITY;
        for (row, slot) in p.0.iter_mut().enumerate() {
            let label = BasisLabel::from_index(row);
            if self.controls().iter().all(|&q| label.bit(q)) {
                *slot = (row ^ self.target().row_mask()) as u8;
            }
        }
        p
    }

    pub fn matrix(&self) -> ComplexMatrix {
        self.permutation().matrix()
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Not { target } => write!(f, "NOT({target})"),
            Gate::Cnot { control, target } => write!(f, "CNOT({control}->{target})"),
            Gate::Ccnot {
                controls: [a, b],
                target,
            } => write!(f, "CCNOT({a},{b}->{target})"),
        }
    }
}

pub fn gate_matrix(g: &Gate) -> ComplexMatrix {
    g.matrix()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Circuit {
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>) -> Self {
        Self { gates }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn permutation(&self) -> Permutation {
        self.gates
            .iter()
            .fold(Permutation::IDENTITY, |acc, g| acc.then(g.permutation()))
    }

    pub fn unitary(&self) -> ComplexMatrix {
        self.permutation().matrix()
    }

    pub fn ccnot_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, Gate::Ccnot { .. }))
            .count()
    }

    /// Nine-gate NOT/CCNOT circuit for the zero-phase fanout swap.
    pub fn swap_certificate() -> Self {
        use Qubit::{C, D, I};
        let ccnot = |a, b, t| Gate::ccnot(a, b, t).expect("distinct");
        Self::new(vec![
            Gate::not(C),
            ccnot(I, C, D),
            Gate::not(C),
            ccnot(I, D, C),
            ccnot(C, D, I),
            ccnot(I, D, C),
            Gate::not(C),
            ccnot(I, C, D),
            Gate::not(C),
        ])
    }

    pub fn to_file(&self) -> CircuitFile {
        CircuitFile {
            order: FIRST_ACTS_FIRST.to_string(),
            gates: self
                .gates
                .iter()
                .map(|g| GateRecord {
                    kind: g.kind().to_string(),
                    controls: g.controls().iter().map(|q| q.name().to_string()).collect(),
                    target: g.target().name().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &CircuitFile) -> Result<Self> {
        if file.order != FIRST_ACTS_FIRST {
            return Err(invalid(format!(
                "unsupported gate order {:?}, expected {FIRST_ACTS_FIRST:?}",
                file.order
            )));
        }
        let gates = file
            .gates
            .iter()
            .map(GateRecord::to_gate)
            .collect::<Result<_>>()?;
        Ok(Self { gates })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain data")
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.gates.iter().map(Gate::to_string).collect();
        f.write_str(&names.join(" "))
    }
}

pub fn circuit_unitary(c: &Circuit) -> ComplexMatrix {
    c.unitary()
}

/// Serialized circuit: `{order, gates: [{kind, controls, target}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitFile {
    pub order: String,
    pub gates: Vec<GateRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRecord {
    pub kind: String,
    #[serde(default)]
    pub controls: Vec<String>,
    pub target: String,
}

impl GateRecord {
    fn to_gate(&self) -> Result<Gate> {
        let controls: Vec<Qubit> = self
            .controls
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let target: Qubit = self.target.parse()?;
        match (self.kind.as_str(), &controls[..]) {
            ("NOT", []) => Ok(Gate::not(target)),
            ("CNOT", &[c]) => Gate::cnot(c, target),
            ("CCNOT", &[a, b]) => Gate::ccnot(a, b, target),
            ("NOT" | "CNOT" | "CCNOT", _) => Err(invalid(format!(
                "{} gate with {} controls",
                self.kind,
                controls.len()
            ))),
            (other, _) => Err(invalid(format!("unknown gate kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    NotCcnot,
    NotCnotCcnot,
}

impl Alphabet {
    /// Generators in tie-break order.
    pub fn gates(self) -> Vec<Gate> {
        use Qubit::{C, D, I};
        let mut gates = vec![Gate::not(I), Gate::not(C), Gate::not(D)];
        if self == Alphabet::NotCnotCcnot {
            for c in Qubit::ALL {
                for t in Qubit::ALL {
                    if c != t {
                        gates.push(Gate::Cnot {
                            control: c,
                            target: t,
                        });
                    }
                }
            }
        }
        for (a, b, t) in [(I, C, D), (I, D, C), (C, D, I)] {
            gates.push(Gate::Ccnot {
                controls: [a, b],
                target: t,
            });
        }
        debug_assert!(gates.windows(2).all(|w| w[0] < w[1]));
        gates
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "not+ccnot" => Ok(Alphabet::NotCcnot),
            "not+cnot+ccnot" => Ok(Alphabet::NotCnotCcnot),
            _ => Err(invalid(format!(
                "unknown alphabet {s:?}; use not+ccnot or not+cnot+ccnot"
            ))),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::NotCcnot => "not+ccnot",
            Alphabet::NotCnotCcnot => "not+cnot+ccnot",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub circuit: Circuit,
    /// Distinct permutations reached, including the identity.
    pub explored: usize,
}

/// Breadth-first search over the permutation group generated by the
/// alphabet. Returns the shortest circuit reaching `target`; among equally
/// short ones, the lexicographically smallest gate sequence.
pub fn shortest_circuit(
    target: Permutation,
    alphabet: Alphabet,
    max_gates: usize,
) -> Result<SearchOutcome> {
    let gens: Vec<(Gate, Permutation)> = alphabet
        .gates()
        .into_iter()
        .map(|g| (g, g.permutation()))
        .collect();
    let mut parent: HashMap<Permutation, Option<(Permutation, Gate)>> = HashMap::new();
    parent.insert(Permutation::IDENTITY, None);
    let mut frontier = vec![Permutation::IDENTITY];
    let mut found = target == Permutation::IDENTITY;

    // Levels are expanded in discovery order, and discovery order within a
    // level is lexicographic in the gate sequence.
    let mut depth = 0;
    while !found && depth < max_gates && !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        'level: for &state in &frontier {
            for &(gate, perm) in &gens {
                let reached = state.then(perm);
                if parent.contains_key(&reached) {
                    continue;
                }
                parent.insert(reached, Some((state, gate)));
                next.push(reached);
                if reached == target {
                    found = true;
                    break 'level;
                }
            }
        }
        frontier = next;
    }
    if !found {
        return Err(Error::NotFound(format!(
            "no {alphabet} circuit with at most {max_gates} gates"
        )));
    }

    let mut gates = Vec::new();
    let mut cursor = target;
    while let Some(Some((prev, gate))) = parent.get(&cursor) {
        gates.push(*gate);
        cursor = *prev;
    }
    gates.reverse();
    Ok(SearchOutcome {
        circuit: Circuit::new(gates),
        explored: parent.len(),
    })
}

/// Shortest circuit for the zero-phase fanout swap.
pub fn synthesize_swap_circuit(alphabet: Alphabet, max_gates: usize) -> Result<Circuit> {
    if max_gates == 0 {
        return Err(invalid("max_gates must be at least 1"));
    }
    Ok(shortest_circuit(Permutation::fanout_swap(), alphabet, max_gates)?.circuit)
}

/// Number of distinct permutations reachable with the alphabet.
pub fn group_order(alphabet: Alphabet) -> usize {
    let gens: Vec<Permutation> = alphabet.gates().iter().map(Gate::permutation).collect();
    let mut seen = std::collections::HashSet::from([Permutation::IDENTITY]);
    let mut frontier = vec![Permutation::IDENTITY];
    while let Some(state) = frontier.pop() {
        for &g in &gens {
            let next = state.then(g);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhaseEquivalence {
    pub equal: bool,
    /// `e^{i theta}` with `u1 ~ e^{i theta} u2`; meaningful when `equal`.
    #[serde(serialize_with = "serialize_complex")]
    pub phase: C64,
    pub residual: f64,
}

fn serialize_complex<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// Tests `u1 = e^{i theta} u2` within `tol` (Frobenius). The phase is
/// estimated from `Tr(u2^dagger u1)`.
pub fn equivalent_up_to_phase(
    u1: &ComplexMatrix,
    u2: &ComplexMatrix,
    tol: f64,
) -> Result<PhaseEquivalence> {
    let overlap = u2.dagger().mat_mul(u1)?.trace();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        ONE
    };
    let residual = u1.frobenius_distance(&u2.scale(phase))?;
    Ok(PhaseEquivalence {
        equal: residual < tol,
        phase,
        residual,
    })
}

/// `m` acting on qubit `q` alone.
pub fn single_qubit_operator(q: Qubit, m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(m.dim(), 2, "single-qubit operator must be 2x2");
    let id = ComplexMatrix::identity(2);
    let factors: [&ComplexMatrix; 3] =
        std::array::from_fn(|j| if j == q.position() { m } else { &id });
    factors[0].kron(factors[1]).kron(factors[2])
}

/// `m` applied to `target` when `control` reads 1.
pub fn controlled_operator(control: Qubit, target: Qubit, m: &ComplexMatrix) -> ComplexMatrix {
    assert_ne!(control, target);
    assert_eq!(m.dim(), 2, "controlled operator must be 2x2");
    let mask = target.row_mask();
    ComplexMatrix::from_fn(8, |r, c| {
        let (lr, lc) = (BasisLabel::from_index(r), BasisLabel::from_index(c));
        if r & !mask != c & !mask {
            return ZERO;
        }
        if lc.bit(control) {
            // Local index 0 is |1>.
            m[(usize::from(!lr.bit(target)), usize::from(!lc.bit(target)))]
        } else if r == c {
            ONE
        } else {
            ZERO
        }
    })
}

/// `sqrt(sigma_x) = (1/2) [[1+i, 1-i], [1-i, 1+i]]`.
pub fn sqrt_not() -> ComplexMatrix {
    let p = C64::new(0.5, 0.5);
    let m = C64::new(0.5, -0.5);
    ComplexMatrix::from_fn(2, |r, c| if r == c { p } else { m })
}

#[derive(Debug, Clone)]
pub struct DecompositionFactor {
    pub label: String,
    pub matrix: ComplexMatrix,
}

#[derive(Debug, Clone)]
pub struct CcnotDecomposition {
    /// Applied first-listed-first.
    pub factors: Vec<DecompositionFactor>,
    pub product: ComplexMatrix,
    pub equivalence: PhaseEquivalence,
}

/// CCNOT(I,C->D) from two-qubit gates: controlled-V(C->D), CNOT(I->C),
/// controlled-V^dagger(C->D), CNOT(I->C), controlled-V(I->D), `V^2 = NOT`.
pub fn ccnot_to_cnot_circuit() -> CcnotDecomposition {
    use Qubit::{C, D, I};
    let v = sqrt_not();
    let cnot = Gate::cnot(I, C).expect("distinct");
    let factors = vec![
        ("CV(C->D)", controlled_operator(C, D, &v)),
        ("CNOT(I->C)", cnot.matrix()),
        ("CV+(C->D)", controlled_operator(C, D, &v.dagger())),
        ("CNOT(I->C)", cnot.matrix()),
        ("CV(I->D)", controlled_operator(I, D, &v)),
    ];
    let product = factors
        .iter()
        .fold(ComplexMatrix::identity(8), |acc, (_, m)| m * &acc);
    let target = Gate::ccnot(I, C, D).expect("distinct").matrix();
    let equivalence = equivalent_up_to_phase(&product, &target, 1e-12).expect("same dim");
    CcnotDecomposition {
        factors: factors
            .into_iter()
            .map(|(label, matrix)| DecompositionFactor {
                label: label.to_string(),
                matrix,
            })
            .collect(),
        product,
        equivalence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanout::{build_fanout_unitary, FanoutPhases};
    use crate::register::labelled_state;
    use Qubit::{C, D, I};

    fn maps(g: &Gate, from: &str, to: &str) -> bool {
        g.matrix().apply(&labelled_state(from).unwrap()).unwrap() == labelled_state(to).unwrap()
    }

    #[test]
    fn gate_semantics() {
        assert!(maps(&Gate::not(D), "110", "111"));
        let toffoli = Gate::ccnot(I, C, D).unwrap();
        assert!(maps(&toffoli, "110", "111"));
        assert!(maps(&toffoli, "010", "010"));
        let cnot = Gate::cnot(C, D).unwrap();
        assert!(maps(&cnot, "011", "010"));
        assert!(maps(&cnot, "001", "001"));
    }

    #[test]
    fn malformed_gates_rejected() {
        assert!(Gate::cnot(C, C).is_err());
        assert!(Gate::ccnot(I, I, D).is_err());
        assert!(Gate::ccnot(I, C, C).is_err());
    }

    #[test]
    fn gates_are_involutive_permutations() {
        for g in Alphabet::NotCnotCcnot.gates() {
            let m = g.matrix();
            assert_eq!(m.mat_mul(&m).unwrap(), ComplexMatrix::identity(8));
            for row in m.rows() {
                assert_eq!(row.iter().filter(|&&z| z == ONE).count(), 1);
                assert!(row.iter().all(|&z| z == ONE || z == ZERO));
            }
            let expected = if matches!(g, Gate::Ccnot { .. }) {
                -1
            } else {
                1
            };
            assert_eq!(g.permutation().sign(), expected, "{g}");
        }
    }

    #[test]
    fn circuit_unitary_basics() {
        assert_eq!(Circuit::default().unitary(), ComplexMatrix::identity(8));
        let twice = Circuit::new(vec![Gate::not(I), Gate::not(I)]);
        assert_eq!(twice.unitary(), ComplexMatrix::identity(8));
    }

    #[test]
    fn application_order_is_first_listed_first() {
        let a = Gate::not(C);
        let b = Gate::ccnot(I, C, D).unwrap();
        let c = Circuit::new(vec![a, b]);
        assert_eq!(c.unitary(), b.matrix().mat_mul(&a.matrix()).unwrap());
        // |100> -NOT(C)-> |110> -CCNOT-> |111>
        assert_eq!(
            c.unitary().apply(&labelled_state("100").unwrap()).unwrap(),
            labelled_state("111").unwrap()
        );
    }

    #[test]
    fn certificate_composes_to_swap() {
        let cert = Circuit::swap_certificate();
        assert_eq!(cert.len(), 9);
        assert_eq!(cert.permutation(), Permutation::fanout_swap());
        assert_eq!(
            cert.unitary(),
            build_fanout_unitary(FanoutPhases::new(0.0, 0.0))
        );
        assert_eq!(cert.ccnot_count() % 2, 1);
    }

    #[test]
    fn shortest_not_ccnot_circuit() {
        // Frozen from an independent BFS over S8.
        let c = synthesize_swap_circuit(Alphabet::NotCcnot, 9).unwrap();
        assert_eq!(
            c.to_string(),
            "CCNOT(C,D->I) NOT(C) CCNOT(I,C->D) CCNOT(I,D->C) CCNOT(I,C->D) NOT(C) CCNOT(C,D->I)"
        );
        assert_eq!(c.permutation(), Permutation::fanout_swap());
        assert_eq!(c.ccnot_count(), 5);
    }

    #[test]
    fn search_is_deterministic_and_bounded() {
        let a = synthesize_swap_circuit(Alphabet::NotCnotCcnot, 12).unwrap();
        let b = synthesize_swap_circuit(Alphabet::NotCnotCcnot, 12).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.permutation(), Permutation::fanout_swap());
        assert_eq!(a.ccnot_count() % 2, 1);
        let outcome = shortest_circuit(
            Permutation([1, 0, 2, 3, 4, 5, 6, 7]),
            Alphabet::NotCcnot,
            100,
        )
        .unwrap();
        assert!(outcome.explored <= 40320);
    }

    #[test]
    fn search_fails_when_budget_too_small() {
        assert!(matches!(
            synthesize_swap_circuit(Alphabet::NotCcnot, 6),
            Err(Error::NotFound(_))
        ));
        assert!(synthesize_swap_circuit(Alphabet::NotCcnot, 0).is_err());
    }

    #[test]
    fn alphabets_generate_all_of_s8() {
        assert_eq!(group_order(Alphabet::NotCcnot), 40320);
    }

    #[test]
    fn phase_equivalence() {
        let m = Circuit::swap_certificate().unitary();
        let r = equivalent_up_to_phase(&m, &m, 1e-12).unwrap();
        assert!(r.equal && (r.phase - ONE).norm() < 1e-15);
        let ph = C64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        let r = equivalent_up_to_phase(&m.scale(ph), &m, 1e-12).unwrap();
        assert!(r.equal && (r.phase - ph).norm() < 1e-15);
        let r = equivalent_up_to_phase(&m, &ComplexMatrix::identity(8), 1e-12).unwrap();
        assert!(!r.equal);
    }

    #[test]
    fn sqrt_not_squares_to_not() {
        let v = sqrt_not();
        let x = ComplexMatrix::from_permutation(&[1, 0]);
        assert!(v.mat_mul(&v).unwrap().frobenius_distance(&x).unwrap() < 1e-15);
    }

    #[test]
    fn controlled_operator_matches_cnot() {
        let x = ComplexMatrix::from_permutation(&[1, 0]);
        assert_eq!(
            controlled_operator(I, D, &x),
            Gate::cnot(I, D).unwrap().matrix()
        );
        assert_eq!(single_qubit_operator(C, &x), Gate::not(C).matrix());
    }

    #[test]
    fn ccnot_decomposition() {
        let d = ccnot_to_cnot_circuit();
        assert_eq!(d.factors.len(), 5);
        assert!(d.equivalence.equal, "{:?}", d.equivalence);
        assert!(d.equivalence.residual < 1e-12);
        for f in &d.factors {
            assert!(f.matrix.unitarity_residual() < 1e-15, "{}", f.label);
        }
    }

    #[test]
    fn circuit_file_roundtrip_and_rejections() {
        let cert = Circuit::swap_certificate();
        assert_eq!(Circuit::from_json(&cert.to_json()).unwrap(), cert);

        let unknown =
            r#"{"order":"first-acts-first","gates":[{"kind":"SWAP","controls":[],"target":"I"}]}"#;
        assert!(Circuit::from_json(unknown).is_err());
        let bad_qubit = r#"{"order":"first-acts-first","gates":[{"kind":"NOT","target":"Q"}]}"#;
        assert!(Circuit::from_json(bad_qubit).is_err());
        let bad_order = r#"{"order":"last-acts-first","gates":[]}"#;
        assert!(Circuit::from_json(bad_order).is_err());
        let arity = r#"{"order":"first-acts-first","gates":[{"kind":"CNOT","controls":["I","C"],"target":"D"}]}"#;
        assert!(Circuit::from_json(arity).is_err());
    }
}
