#include "qdesk/layout.hpp"

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {
// Dense amplitude vectors above this qubit count are not a desk-scale
// experiment any more; refuse rather than thrash.
constexpr int kMaxTotalQubits = 26;
} // namespace

RegisterLayout::RegisterLayout(std::initializer_list<Register> regs)
    : RegisterLayout(std::vector<Register>(regs)) {}

RegisterLayout::RegisterLayout(std::vector<Register> regs) : regs_(std::move(regs)) {
    for (const auto& r : regs_) {
        if (r.width < 1) throw LayoutError("register '" + r.name + "' has width < 1");
        total_ += r.width;
    }
    if (total_ > kMaxTotalQubits)
        throw LayoutError("layout exceeds " + std::to_string(kMaxTotalQubits) + " qubits");
    for (std::size_t i = 0; i < regs_.size(); ++i)
        for (std::size_t j = i + 1; j < regs_.size(); ++j)
            if (regs_[i].name == regs_[j].name)
                throw LayoutError("duplicate register name '" + regs_[i].name + "'");
}

int RegisterLayout::find(std::string_view name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name == name) return static_cast<int>(i);
    return -1;
}

void RegisterLayout::unknown(std::string_view name) const {
    throw LayoutError("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::has(std::string_view name) const { return find(name) >= 0; }

int RegisterLayout::width(std::string_view name) const {
    const int i = find(name);
    if (i < 0) unknown(name);
    return regs_[static_cast<std::size_t>(i)].width;
}

int RegisterLayout::offset(std::string_view name) const {
    const int i = find(name);
    if (i < 0) unknown(name);
    int off = 0;
    for (int j = 0; j < i; ++j) off += regs_[static_cast<std::size_t>(j)].width;
    return off;
}

int RegisterLayout::shift(std::string_view name) const {
    return total_ - offset(name) - width(name);
}

std::uint64_t RegisterLayout::mask(std::string_view name) const {
    return (std::uint64_t{1} << width(name)) - 1;
}

std::uint64_t RegisterLayout::extract(std::string_view name, std::uint64_t index) const {
    return (index >> shift(name)) & mask(name);
}

std::uint64_t RegisterLayout::replace(std::string_view name, std::uint64_t index,
                                      std::uint64_t value) const {
    const int s = shift(name);
    const std::uint64_t m = mask(name);
    return (index & ~(m << s)) | ((value & m) << s);
}

int RegisterLayout::qubit_bit(int qubit) const {
    if (qubit < 0 || qubit >= total_)
        throw LayoutError("qubit index " + std::to_string(qubit) + " out of range");
    return total_ - 1 - qubit;
}

RegisterLayout RegisterLayout::without(std::string_view name) const {
    const int i = find(name);
    if (i < 0) unknown(name);
    std::vector<Register> rest;
    rest.reserve(regs_.size() - 1);
    for (std::size_t j = 0; j < regs_.size(); ++j)
        if (static_cast<int>(j) != i) rest.push_back(regs_[j]);
    return RegisterLayout(std::move(rest));
}

} // namespace qdesk
