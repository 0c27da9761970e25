#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qdesk {

struct Register {
    std::string name;
    int width = 0;

    bool operator==(const Register&) const = default;
};

// Qubit bookkeeping for a multi-register state.
//
// The first-listed register occupies the most significant bits of a basis
// index, and within a register the first qubit is the most significant, so
// a state |x>_a |y>_b over layout {a, b} reads as the concatenated integer
// xy. Global qubit 0 is the first qubit of the first register.
class RegisterLayout {
public:
    RegisterLayout() = default;
    RegisterLayout(std::initializer_list<Register> regs);
    explicit RegisterLayout(std::vector<Register> regs);

    int total_qubits() const { return total_; }
    std::uint64_t dim() const { return std::uint64_t{1} << total_; }
    const std::vector<Register>& registers() const { return regs_; }

    bool has(std::string_view name) const;
    int width(std::string_view name) const;
    // Number of qubits before this register.
    int offset(std::string_view name) const;
    // Number of index bits to the right of this register.
    int shift(std::string_view name) const;
    std::uint64_t mask(std::string_view name) const;

    std::uint64_t extract(std::string_view name, std::uint64_t index) const;
    std::uint64_t replace(std::string_view name, std::uint64_t index, std::uint64_t value) const;

    // Index bit position of a global qubit. Throws on out-of-range.
    int qubit_bit(int qubit) const;

    // Layout of the remaining registers after removing one.
    RegisterLayout without(std::string_view name) const;

    bool operator==(const RegisterLayout&) const = default;

private:
    int find(std::string_view name) const;
    [[noreturn]] void unknown(std::string_view name) const;

    std::vector<Register> regs_;
    int total_ = 0;
};

} // namespace qdesk
