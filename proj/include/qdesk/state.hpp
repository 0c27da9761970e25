#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdesk/kernels.hpp"
#include "qdesk/layout.hpp"
#include "qdesk/oracle.hpp"

namespace qdesk {

// Normalized complex amplitude vector over a register layout. The norm is
// checked at construction (1e-10); nothing ever renormalizes silently, so a
// state that fails the invariant raises NormError instead of being repaired.
class QuantumState {
public:
    QuantumState(RegisterLayout layout, std::vector<cd> amplitudes);

    static QuantumState basis(RegisterLayout layout, std::uint64_t index);

    const RegisterLayout& layout() const { return layout_; }
    std::span<const cd> amplitudes() const { return amp_; }
    const cd& amp(std::uint64_t i) const { return amp_[i]; }
    std::uint64_t dim() const { return amp_.size(); }

private:
    RegisterLayout layout_;
    std::vector<cd> amp_;
};

// Intermediate of projections and partial contractions: same shape as
// QuantumState but carries its own squared norm, which must lie in
// [0, 1 + 1e-10].
class UnnormalizedState {
public:
    UnnormalizedState(RegisterLayout layout, std::vector<cd> amplitudes);

    const RegisterLayout& layout() const { return layout_; }
    std::span<const cd> amplitudes() const { return amp_; }
    const cd& amp(std::uint64_t i) const { return amp_[i]; }
    std::uint64_t dim() const { return amp_.size(); }
    double squared_norm() const { return norm2_; }

    // Scales to unit norm; throws NormError on a (near-)zero vector.
    QuantumState normalized() const;

private:
    RegisterLayout layout_;
    std::vector<cd> amp_;
    double norm2_ = 0.0;
};

// |bits> with one character per qubit, first qubit first.
QuantumState prepare_basis(const RegisterLayout& layout, std::string_view bits);

// Walsh-Hadamard transform on the named register's qubits only.
QuantumState apply_hadamard(const QuantumState& state, std::string_view reg);

// |x>_in |y>_out -> |x>_in |y ^ f(x)>_out. A permutation of basis states.
QuantumState apply_oracle(const QuantumState& state, const PeriodicOracle& oracle,
                          std::string_view input_reg = "a", std::string_view output_reg = "b");

// Real rotation on one qubit; angle pi/2 maps |0> to |1> exactly.
QuantumState apply_rotation(const QuantumState& state, int qubit, double angle);

// Contraction of the named register against the basis bra <value|. The
// squared norm of the result is the Born probability of observing `value`;
// a zero vector is a legal return.
UnnormalizedState partial_inner(const QuantumState& state, std::string_view reg,
                                std::uint64_t value);

// Debug dump (JSON): layout plus an array of [re, im] pairs.
std::string state_to_json(const QuantumState& state);

} // namespace qdesk
