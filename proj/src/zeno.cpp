#include "qdesk/zeno.hpp"

#include <cmath>
#include <numbers>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

namespace {

constexpr double kAnnihilated = 1e-14;

int y_qubit_index(const RegisterLayout& layout) {
    return layout.offset("y"); // width 1: first qubit of register y
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    return std::norm(kern::inner(a.amplitudes(), b.amplitudes()));
}

} // namespace

ConstrainedSubspace constrained_subspace(const ReversibleCircuit& circuit) {
    const RegisterLayout layout = circuit_layout(circuit);
    ConstrainedSubspace subspace{layout, {}, std::vector<std::uint8_t>(layout.dim(), 0)};
    const std::uint64_t inputs = std::uint64_t{1} << circuit.num_input_qubits;
    const int anc = circuit.num_ancilla;
    for (std::uint64_t x = 0; x < inputs; ++x) {
        const std::uint64_t y = eval(circuit, x).y;
        const std::uint64_t index = (x << (anc + 1)) | y;
        subspace.basis_indices.push_back(index);
        subspace.keep[index] = 1;
    }
    return subspace;
}

QuantumState prepare_phi(const ReversibleCircuit& circuit, const CnfFormula& formula) {
    if (circuit.num_input_qubits != formula.num_vars)
        throw LayoutError("circuit and formula disagree on variable count");
    const RegisterLayout layout = circuit_layout(circuit);

    // Route one: Hadamard every input, then run the network.
    QuantumState state = QuantumState::basis(layout, 0);
    state = apply_hadamard(state, "x");
    state = apply_circuit(state, circuit);

    // Route two: enumerate the subspace directly.
    const ConstrainedSubspace subspace = constrained_subspace(circuit);
    if (subspace.basis_indices.empty()) throw LayoutError("constrained subspace is empty");
    const double w = 1.0 / std::sqrt(static_cast<double>(subspace.basis_indices.size()));
    std::vector<cd> direct(layout.dim(), cd{0.0, 0.0});
    for (std::uint64_t index : subspace.basis_indices) direct[index] = cd{w, 0.0};

    for (std::uint64_t i = 0; i < layout.dim(); ++i) {
        if (std::abs(state.amp(i) - direct[i]) > 1e-12)
            throw NormError("network preparation disagrees with subspace enumeration");
    }
    return state;
}

UnnormalizedState projector_apply(const QuantumState& state, const ConstrainedSubspace& subspace) {
    if (!(state.layout() == subspace.layout))
        throw LayoutError("state layout does not match subspace layout");
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    kern::project_mask(amp, subspace.keep);
    return UnnormalizedState(state.layout(), std::move(amp));
}

double solution_overlap(const QuantumState& state, const CnfFormula& formula) {
    const auto& layout = state.layout();
    const auto amp = state.amplitudes();
    const std::uint64_t dim = layout.dim();
    double mass = 0.0;
    // Ascending-index accumulation; cheap at instance sizes.
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & 1) == 0) continue; // y is the least significant bit
        const std::uint64_t x = layout.extract("x", i);
        if (assignment_satisfies(formula, x)) mass += std::norm(amp[i]);
    }
    return mass;
}

ZenoInstance make_instance(const CnfFormula& formula) {
    ReversibleCircuit circuit = compile(formula);
    ConstrainedSubspace subspace = constrained_subspace(circuit);
    QuantumState phi = prepare_phi(circuit, formula);
    return ZenoInstance{formula, std::move(circuit), std::move(subspace), std::move(phi)};
}

ZenoTrace run_frequent(const ZenoInstance& instance, int slices, std::mt19937_64& rng) {
    if (slices < 1) throw std::invalid_argument("slices must be >= 1");
    const double theta = std::numbers::pi / (2.0 * slices);
    const int y = y_qubit_index(instance.phi.layout());

    ZenoTrace trace{ZenoMode::frequent, slices, {}, std::nullopt, false, -1};
    QuantumState state = instance.phi;
    for (int step = 1; step <= slices; ++step) {
        state = apply_rotation(state, y, theta);
        const UnnormalizedState projected = projector_apply(state, instance.subspace);
        const double p = projected.squared_norm();
        const double u = canonical(rng);
        if (u < p) {
            state = projected.normalized();
        } else {
            // Rejected branch: the trajectory collapses outside the subspace.
            std::vector<cd> rest(state.amplitudes().begin(), state.amplitudes().end());
            for (std::uint64_t i = 0; i < rest.size(); ++i)
                if (instance.subspace.keep[i]) rest[i] = cd{0.0, 0.0};
            state = UnnormalizedState(state.layout(), std::move(rest)).normalized();
            trace.died = true;
            trace.died_at = step;
        }
        trace.samples.push_back({step, p, fidelity(instance.phi, state),
                                 solution_overlap(state, instance.formula)});
        if (trace.died) break;
    }
    trace.final_state = std::move(state);
    return trace;
}

ZenoTrace run_projected(const ZenoInstance& instance, int slices) {
    if (slices < 1) throw std::invalid_argument("slices must be >= 1");
    const double theta = std::numbers::pi / (2.0 * slices);
    const int y = y_qubit_index(instance.phi.layout());

    ZenoTrace trace{ZenoMode::projected, slices, {}, std::nullopt, false, -1};
    QuantumState state = instance.phi;
    for (int step = 1; step <= slices; ++step) {
        state = apply_rotation(state, y, theta);
        const UnnormalizedState projected = projector_apply(state, instance.subspace);
        const double p = projected.squared_norm();
        if (p < kAnnihilated) {
            trace.died = true;
            trace.died_at = step;
            trace.samples.push_back({step, p, 0.0, 0.0});
            throw DegenerateDynamicsError(std::move(trace));
        }
        state = projected.normalized();
        trace.samples.push_back({step, p, fidelity(instance.phi, state),
                                 solution_overlap(state, instance.formula)});
    }
    trace.final_state = std::move(state);
    return trace;
}

ZenoTrace run_unitary(const ZenoInstance& instance, int slices) {
    if (slices < 1) throw std::invalid_argument("slices must be >= 1");
    const double theta = std::numbers::pi / (2.0 * slices);
    const int y = y_qubit_index(instance.phi.layout());

    ZenoTrace trace{ZenoMode::unitary, slices, {}, std::nullopt, false, -1};
    QuantumState state = instance.phi;
    for (int step = 1; step <= slices; ++step) {
        state = apply_rotation(state, y, theta);
        const double weight = projector_apply(state, instance.subspace).squared_norm();
        trace.samples.push_back({step, weight, fidelity(instance.phi, state),
                                 solution_overlap(state, instance.formula)});
    }
    trace.final_state = std::move(state);
    return trace;
}

std::vector<double> survival_profile(const ZenoInstance& instance, int slices) {
    if (slices < 1) throw std::invalid_argument("slices must be >= 1");
    const double theta = std::numbers::pi / (2.0 * slices);
    const int y = y_qubit_index(instance.phi.layout());

    std::vector<double> profile(slices, 0.0);
    QuantumState state = instance.phi;
    for (int step = 0; step < slices; ++step) {
        state = apply_rotation(state, y, theta);
        const UnnormalizedState projected = projector_apply(state, instance.subspace);
        profile[step] = projected.squared_norm();
        if (profile[step] < kAnnihilated) break; // dead branch; remaining stay 0
        state = projected.normalized();
    }
    return profile;
}

} // namespace qdesk
