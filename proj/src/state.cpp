#include "qdesk/state.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {
constexpr double kNormTol = 1e-10;
} // namespace

QuantumState::QuantumState(RegisterLayout layout, std::vector<cd> amplitudes)
    : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
    if (amp_.size() != layout_.dim())
        throw LayoutError("amplitude vector length != 2^total_qubits");
    const double n2 = kern::norm2(amp_);
    if (std::abs(n2 - 1.0) > kNormTol)
        throw NormError("state norm^2 = " + std::to_string(n2) + " violates unit-norm invariant");
}

QuantumState QuantumState::basis(RegisterLayout layout, std::uint64_t index) {
    if (index >= layout.dim()) throw LayoutError("basis index out of range");
    std::vector<cd> amp(layout.dim(), cd{0.0, 0.0});
    amp[index] = cd{1.0, 0.0};
    return QuantumState(std::move(layout), std::move(amp));
}

UnnormalizedState::UnnormalizedState(RegisterLayout layout, std::vector<cd> amplitudes)
    : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
    if (amp_.size() != layout_.dim())
        throw LayoutError("amplitude vector length != 2^total_qubits");
    norm2_ = kern::norm2(amp_);
    if (norm2_ > 1.0 + kNormTol)
        throw NormError("squared norm " + std::to_string(norm2_) + " exceeds 1");
}

QuantumState UnnormalizedState::normalized() const {
    if (norm2_ < 1e-28) throw NormError("cannot normalize a zero vector");
    std::vector<cd> amp(amp_);
    kern::scale(amp, cd{1.0 / std::sqrt(norm2_), 0.0});
    return QuantumState(layout_, std::move(amp));
}

QuantumState prepare_basis(const RegisterLayout& layout, std::string_view bits) {
    if (static_cast<int>(bits.size()) != layout.total_qubits())
        throw LayoutError("bit string length != total_qubits");
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw LayoutError("bit string must contain only 0 and 1");
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return QuantumState::basis(layout, index);
}

QuantumState apply_hadamard(const QuantumState& state, std::string_view reg) {
    const auto& layout = state.layout();
    const int shift = layout.shift(reg);
    const int width = layout.width(reg);
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    for (int b = shift; b < shift + width; ++b) kern::hadamard(amp, b);
    return QuantumState(layout, std::move(amp));
}

QuantumState apply_oracle(const QuantumState& state, const PeriodicOracle& oracle,
                          std::string_view input_reg, std::string_view output_reg) {
    const auto& layout = state.layout();
    if (layout.width(input_reg) != oracle.n)
        throw LayoutError("input register width != oracle width");
    if (layout.width(output_reg) != oracle.n)
        throw LayoutError("output register width != oracle output width");
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    kern::xor_table(amp, layout.shift(input_reg), layout.mask(input_reg),
                    layout.shift(output_reg), oracle.table);
    return QuantumState(layout, std::move(amp));
}

QuantumState apply_rotation(const QuantumState& state, int qubit, double angle) {
    const int bit = state.layout().qubit_bit(qubit);
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    kern::rotate(amp, bit, angle);
    return QuantumState(state.layout(), std::move(amp));
}

UnnormalizedState partial_inner(const QuantumState& state, std::string_view reg,
                                std::uint64_t value) {
    const auto& layout = state.layout();
    if (value > layout.mask(reg)) throw LayoutError("value exceeds register width");
    RegisterLayout rest = layout.without(reg);
    std::vector<cd> out(rest.dim());
    kern::gather_fixed(state.amplitudes(), layout.shift(reg), layout.mask(reg), value, out);
    return UnnormalizedState(std::move(rest), std::move(out));
}

std::string state_to_json(const QuantumState& state) {
    nlohmann::ordered_json j;
    auto& regs = j["layout"] = nlohmann::ordered_json::array();
    for (const auto& r : state.layout().registers()) regs.push_back({r.name, r.width});
    auto& amps = j["amplitudes"] = nlohmann::ordered_json::array();
    for (const cd& a : state.amplitudes()) amps.push_back({a.real(), a.imag()});
    return j.dump(2);
}

} // namespace qdesk
