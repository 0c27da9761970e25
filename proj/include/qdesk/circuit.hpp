#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdesk/cnf.hpp"
#include "qdesk/layout.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

// Gate set is fixed at {NOT, CNOT, TOFFOLI}; unused controls are -1.
struct Gate {
    enum class Kind { not_gate, cnot, toffoli };

    Kind kind;
    int target;
    int c1 = -1;
    int c2 = -1;

    static Gate not_gate(int t) { return {Kind::not_gate, t}; }
    static Gate cnot(int c, int t) { return {Kind::cnot, t, c}; }
    static Gate toffoli(int c1, int c2, int t) { return {Kind::toffoli, t, c1, c2}; }
};

// Toffoli network computing a Boolean function into the output qubit, with
// every ancilla restored to 0 on every input. Qubit numbering: inputs
// 0..num_input_qubits-1, then ancillas, then the output qubit y last.
struct ReversibleCircuit {
    int num_input_qubits = 0;
    int num_ancilla = 0;
    int output_qubit = 0;
    std::vector<Gate> gates;

    int total_qubits() const { return num_input_qubits + num_ancilla + 1; }
};

// Clause ORs are computed into fresh ancillas by De Morgan (NOTs plus a
// Toffoli chain over scratch ancillas), ANDed into y, then every clause and
// scratch ancilla is uncomputed by the reversed gate sequence.
ReversibleCircuit compile(const CnfFormula& formula);

struct EvalResult {
    int y = 0;
    std::uint64_t ancilla_bits = 0;
};

// Classical simulation of the gate list from |input, ancilla=0, y=0>.
EvalResult eval(const ReversibleCircuit& circuit, std::uint64_t input);

// The full basis permutation on qubit-packed classical states (bit q of
// `bits` is circuit qubit q). Used for bijectivity checks.
std::uint64_t permute_bits(const ReversibleCircuit& circuit, std::uint64_t bits);

// State layout for circuit execution: registers x (inputs), anc (omitted
// when the circuit has no ancillas), y.
RegisterLayout circuit_layout(const ReversibleCircuit& circuit);

// Applies the network to a state over circuit_layout() as a permutation of
// basis states.
QuantumState apply_circuit(const QuantumState& state, const ReversibleCircuit& circuit);

std::string circuit_to_json(const ReversibleCircuit& circuit);

} // namespace qdesk
