#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qdesk/circuit.hpp"
#include "qdesk/cnf.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

// Span of the computational-basis states whose input bits carry y = f(input)
// with all ancillas 0. Membership is decided by the compiled network.
struct ConstrainedSubspace {
    RegisterLayout layout;
    std::vector<std::uint64_t> basis_indices; // sorted
    std::vector<std::uint8_t> keep;           // dense membership mask over the layout
};

ConstrainedSubspace constrained_subspace(const ReversibleCircuit& circuit);

// The equally weighted superposition over the constrained subspace, built
// two ways and cross-checked to 1e-12: Hadamards on every input followed by
// the network, and direct enumeration of the subspace basis.
QuantumState prepare_phi(const ReversibleCircuit& circuit, const CnfFormula& formula);

// Amplitudes outside the subspace zeroed; squared norm = survival probability.
UnnormalizedState projector_apply(const QuantumState& state, const ConstrainedSubspace& subspace);

// Probability mass on basis states whose input bits satisfy the formula and
// whose y bit is 1.
double solution_overlap(const QuantumState& state, const CnfFormula& formula);

enum class ZenoMode { frequent, projected, unitary };

struct ZenoSample {
    int step = 0;
    double survival_probability = 0.0;
    double fidelity_with_initial = 0.0;
    double solution_overlap = 0.0;
};

struct ZenoTrace {
    ZenoMode mode = ZenoMode::unitary;
    int slices = 0;
    std::vector<ZenoSample> samples;
    std::optional<QuantumState> final_state;
    bool died = false;
    int died_at = -1;
};

// Everything one experiment needs; built once per CNF instance.
struct ZenoInstance {
    CnfFormula formula;
    ReversibleCircuit circuit;
    ConstrainedSubspace subspace;
    QuantumState phi;
};

ZenoInstance make_instance(const CnfFormula& formula);

// The projected-evolution run annihilated the state.
struct DegenerateDynamicsError : std::runtime_error {
    explicit DegenerateDynamicsError(ZenoTrace partial_trace)
        : std::runtime_error("projection annihilated the state"),
          partial(std::move(partial_trace)) {}

    ZenoTrace partial;
};

// One sampled trajectory: k times, rotate y by pi/(2k) and projectively
// measure membership in the subspace. A rejected measurement ends the
// trajectory; its sample row records the rejected branch.
ZenoTrace run_frequent(const ZenoInstance& instance, int slices, std::mt19937_64& rng);

// Deterministic project-and-renormalize slicing (the continuous-measurement
// reading). The trace is the deliverable; no convergence to the solution is
// assumed.
ZenoTrace run_projected(const ZenoInstance& instance, int slices);

// Control arm: the bare rotation with no measurement. The final state is
// slice-count independent; survival_probability records the instantaneous
// subspace weight.
ZenoTrace run_unitary(const ZenoInstance& instance, int slices);

// Conditional per-slice survival probabilities along the surviving branch
// (deterministic; their product is the total survival probability of the
// frequent-measurement protocol). Stops filling after an annihilated slice,
// leaving the remaining entries 0.
std::vector<double> survival_profile(const ZenoInstance& instance, int slices);

} // namespace qdesk
