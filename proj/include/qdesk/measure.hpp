#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qdesk/oracle.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

struct MeasurementRecord {
    std::string register_name;
    std::uint64_t outcome;
    double probability;
    QuantumState post_state;
};

// Exact Born distribution of the named register, indexed by outcome value.
// Computed from amplitudes, no sampling; sums to 1 within 1e-10.
std::vector<double> exact_distribution(const QuantumState& state, std::string_view reg);

// Projective measurement: samples from exact_distribution, then collapses
// by project-then-renormalize. The measured register ends in the pure basis
// state `outcome`.
MeasurementRecord measure(const QuantumState& state, std::string_view reg,
                          std::mt19937_64& rng);

// Post-selected register-a state sqrt(N/2) <f_bar|_b |state_t2>: the
// equal superposition of the two preimages of f_bar, normalized. Selecting
// an outcome of zero probability raises PostSelectionError.
QuantumState eq1_selected_state(const QuantumState& state_t2, std::uint64_t f_bar,
                                std::string_view selected_reg = "b");

// Relocates the collapse to just after the first Hadamard: builds
// (|x0> + |x0 ^ r>)/sqrt(2) |0>_b from the classical preimages of f_bar,
// then runs the oracle forward. Equals the measure-path post-state exactly.
QuantumState backdated_run(const PeriodicOracle& oracle, std::uint64_t f_bar);

} // namespace qdesk
