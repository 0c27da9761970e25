#include "qdesk/gf2.hpp"

#include <algorithm>

namespace qdesk {

bool Gf2System::add_row(std::uint64_t z) {
    if (std::find(rows.begin(), rows.end(), z) != rows.end()) return false;
    rows.push_back(z);
    return true;
}

bool Gf2Eliminator::add(std::uint64_t row) {
    for (std::uint64_t r : rows_) {
        const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(r));
        if (row & pivot) row ^= r;
    }
    if (row == 0) return false;
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(row));
    for (std::uint64_t& r : rows_)
        if (r & pivot) r ^= row;
    rows_.push_back(row);
    std::sort(rows_.begin(), rows_.end(), std::greater<>());
    return true;
}

std::vector<std::uint64_t> Gf2Eliminator::nullspace_basis() const {
    std::uint64_t pivot_mask = 0;
    for (std::uint64_t r : rows_) pivot_mask |= std::uint64_t{1} << (63 - std::countl_zero(r));

    std::vector<std::uint64_t> basis;
    for (int f = n_ - 1; f >= 0; --f) {
        const std::uint64_t fbit = std::uint64_t{1} << f;
        if (pivot_mask & fbit) continue;
        std::uint64_t v = fbit;
        // Row (pivot p): x_p = XOR of its free-column entries; with a single
        // free variable set, x_p = [row has bit f].
        for (std::uint64_t r : rows_) {
            if (r & fbit) v |= std::uint64_t{1} << (63 - std::countl_zero(r));
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<std::uint64_t> gf2_solve(const Gf2System& system) {
    Gf2Eliminator elim(system.n);
    for (std::uint64_t row : system.rows) elim.add(row);
    const auto basis = elim.nullspace_basis();

    std::vector<std::uint64_t> all;
    const std::uint64_t combos = std::uint64_t{1} << basis.size();
    for (std::uint64_t c = 1; c < combos; ++c) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (c & (std::uint64_t{1} << i)) v ^= basis[i];
        all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace qdesk
