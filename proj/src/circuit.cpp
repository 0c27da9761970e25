#include "qdesk/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {

// Emits a chain computing AND(wires...) into `target`, assuming target and
// scratch qubits start at 0. Returns the gates that must later be reversed
// to restore the scratch qubits (everything except the final write).
struct AndChain {
    std::vector<Gate> compute;
    std::vector<Gate> scratch_cleanup; // reversed scratch section
};

AndChain and_into(const std::vector<int>& wires, int target, const std::vector<int>& scratch) {
    AndChain chain;
    if (wires.empty()) {
        chain.compute.push_back(Gate::not_gate(target));
        return chain;
    }
    if (wires.size() == 1) {
        chain.compute.push_back(Gate::cnot(wires[0], target));
        return chain;
    }
    if (wires.size() == 2) {
        chain.compute.push_back(Gate::toffoli(wires[0], wires[1], target));
        return chain;
    }
    std::vector<Gate> scratch_section;
    scratch_section.push_back(Gate::toffoli(wires[0], wires[1], scratch[0]));
    for (std::size_t i = 2; i + 1 < wires.size(); ++i)
        scratch_section.push_back(Gate::toffoli(scratch[i - 2], wires[i], scratch[i - 1]));
    chain.compute = scratch_section;
    chain.compute.push_back(
        Gate::toffoli(scratch[wires.size() - 3], wires.back(), target));
    chain.scratch_cleanup.assign(scratch_section.rbegin(), scratch_section.rend());
    return chain;
}

// Gates computing clause `lits` (already deduplicated, non-tautological)
// into ancilla `clause_bit`, leaving inputs and scratches unchanged.
std::vector<Gate> clause_gates(const std::vector<int>& lits, int clause_bit,
                               const std::vector<int>& scratch) {
    std::vector<Gate> gates;
    // Flip wires so each carries the negated literal, AND them, then
    // complement: OR(l...) = NOT(AND(NOT l...)).
    std::vector<int> flips;
    std::vector<int> wires;
    for (int lit : lits) {
        const int wire = std::abs(lit) - 1;
        wires.push_back(wire);
        if (lit > 0) flips.push_back(wire);
    }
    for (int w : flips) gates.push_back(Gate::not_gate(w));
    const AndChain chain = and_into(wires, clause_bit, scratch);
    gates.insert(gates.end(), chain.compute.begin(), chain.compute.end());
    gates.insert(gates.end(), chain.scratch_cleanup.begin(), chain.scratch_cleanup.end());
    for (int w : flips) gates.push_back(Gate::not_gate(w));
    gates.push_back(Gate::not_gate(clause_bit));
    return gates;
}

std::vector<int> normalize_clause(const std::vector<int>& clause, bool& tautology) {
    std::vector<int> lits(clause);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    tautology = false;
    for (int lit : lits)
        if (std::find(lits.begin(), lits.end(), -lit) != lits.end()) tautology = true;
    return lits;
}

} // namespace

ReversibleCircuit compile(const CnfFormula& formula) {
    const int v = formula.num_vars;
    const int c = static_cast<int>(formula.clauses.size());

    std::vector<std::vector<int>> clauses;
    std::vector<bool> tautological;
    std::size_t max_clause_len = 0;
    for (const auto& raw : formula.clauses) {
        bool taut = false;
        auto lits = normalize_clause(raw, taut);
        if (lits.empty()) throw std::invalid_argument("empty clause");
        tautological.push_back(taut);
        if (!taut) max_clause_len = std::max(max_clause_len, lits.size());
        clauses.push_back(std::move(lits));
    }

    const int scratch_for_clauses = max_clause_len > 2 ? static_cast<int>(max_clause_len) - 2 : 0;
    const int scratch_for_y = c > 2 ? c - 2 : 0;
    const int num_scratch = std::max(scratch_for_clauses, scratch_for_y);

    ReversibleCircuit circuit;
    circuit.num_input_qubits = v;
    circuit.num_ancilla = c + num_scratch;
    circuit.output_qubit = v + circuit.num_ancilla;

    std::vector<int> scratch(num_scratch);
    for (int i = 0; i < num_scratch; ++i) scratch[i] = v + c + i;

    // Clause values into ancillas v..v+c-1.
    std::vector<Gate> clause_section;
    std::vector<int> clause_bits;
    for (int j = 0; j < c; ++j) {
        const int bit = v + j;
        clause_bits.push_back(bit);
        if (tautological[static_cast<std::size_t>(j)]) {
            clause_section.push_back(Gate::not_gate(bit));
            continue;
        }
        const auto gates = clause_gates(clauses[static_cast<std::size_t>(j)], bit, scratch);
        clause_section.insert(clause_section.end(), gates.begin(), gates.end());
    }
    circuit.gates = clause_section;

    // y = AND of all clause bits (the empty conjunction is constant 1).
    const AndChain y_chain = and_into(clause_bits, circuit.output_qubit, scratch);
    circuit.gates.insert(circuit.gates.end(), y_chain.compute.begin(), y_chain.compute.end());
    circuit.gates.insert(circuit.gates.end(), y_chain.scratch_cleanup.begin(),
                         y_chain.scratch_cleanup.end());

    // Uncompute the clause ancillas.
    circuit.gates.insert(circuit.gates.end(), clause_section.rbegin(), clause_section.rend());
    return circuit;
}

std::uint64_t permute_bits(const ReversibleCircuit& circuit, std::uint64_t bits) {
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
        case Gate::Kind::not_gate:
            bits ^= std::uint64_t{1} << g.target;
            break;
        case Gate::Kind::cnot:
            if (bits & (std::uint64_t{1} << g.c1)) bits ^= std::uint64_t{1} << g.target;
            break;
        case Gate::Kind::toffoli:
            if ((bits & (std::uint64_t{1} << g.c1)) && (bits & (std::uint64_t{1} << g.c2)))
                bits ^= std::uint64_t{1} << g.target;
            break;
        }
    }
    return bits;
}

EvalResult eval(const ReversibleCircuit& circuit, std::uint64_t input) {
    if (input >> circuit.num_input_qubits)
        throw std::invalid_argument("input exceeds num_input_qubits bits");
    // Pack the MSB-first input value into per-qubit bits.
    std::uint64_t bits = 0;
    for (int q = 0; q < circuit.num_input_qubits; ++q) {
        const std::uint64_t v = (input >> (circuit.num_input_qubits - 1 - q)) & 1;
        bits |= v << q;
    }
    bits = permute_bits(circuit, bits);
    EvalResult result;
    result.y = static_cast<int>((bits >> circuit.output_qubit) & 1);
    const std::uint64_t anc_mask = (std::uint64_t{1} << circuit.num_ancilla) - 1;
    result.ancilla_bits = (bits >> circuit.num_input_qubits) & anc_mask;
    return result;
}

RegisterLayout circuit_layout(const ReversibleCircuit& circuit) {
    std::vector<Register> regs;
    regs.push_back({"x", circuit.num_input_qubits});
    if (circuit.num_ancilla > 0) regs.push_back({"anc", circuit.num_ancilla});
    regs.push_back({"y", 1});
    return RegisterLayout(std::move(regs));
}

QuantumState apply_circuit(const QuantumState& state, const ReversibleCircuit& circuit) {
    const int total = circuit.total_qubits();
    if (state.layout().total_qubits() != total)
        throw LayoutError("state layout does not match circuit qubit count");
    // Circuit qubit q lives at index bit total-1-q.
    const auto bit_of = [total](int q) { return std::uint64_t{1} << (total - 1 - q); };
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
        case Gate::Kind::not_gate:
            kern::cx_swap(amp, 0, bit_of(g.target));
            break;
        case Gate::Kind::cnot:
            kern::cx_swap(amp, bit_of(g.c1), bit_of(g.target));
            break;
        case Gate::Kind::toffoli:
            kern::cx_swap(amp, bit_of(g.c1) | bit_of(g.c2), bit_of(g.target));
            break;
        }
    }
    return QuantumState(state.layout(), std::move(amp));
}

std::string circuit_to_json(const ReversibleCircuit& circuit) {
    nlohmann::ordered_json j;
    j["num_input_qubits"] = circuit.num_input_qubits;
    j["num_ancilla"] = circuit.num_ancilla;
    j["output_qubit"] = circuit.output_qubit;
    auto& gates = j["gates"] = nlohmann::ordered_json::array();
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
        case Gate::Kind::not_gate:
            gates.push_back({"not", g.target});
            break;
        case Gate::Kind::cnot:
            gates.push_back({"cnot", g.c1, g.target});
            break;
        case Gate::Kind::toffoli:
            gates.push_back({"toffoli", g.c1, g.c2, g.target});
            break;
        }
    }
    return j.dump(2);
}

} // namespace qdesk
