#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qdesk {

// Mod-2 inner product of two bit vectors.
inline bool gf2_dot(std::uint64_t a, std::uint64_t b) {
    return (std::popcount(a & b) & 1) != 0;
}

// Constraint rows z with z . r = 0, deduplicated on insert.
struct Gf2System {
    int n = 0;
    std::vector<std::uint64_t> rows;

    explicit Gf2System(int width) : n(width) {}
    // Returns true if the row was new.
    bool add_row(std::uint64_t z);
};

// Incremental reduced row echelon form over GF(2).
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(int n) : n_(n) {}

    // Returns true if the row increased the rank.
    bool add(std::uint64_t row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int n() const { return n_; }

    // Basis of {v : row . v = 0 for all rows}.
    std::vector<std::uint64_t> nullspace_basis() const;

private:
    int n_;
    std::vector<std::uint64_t> rows_; // pivot bits strictly descending
};

// All nonzero v with z . v = 0 for every row of the system, ascending.
std::vector<std::uint64_t> gf2_solve(const Gf2System& system);

} // namespace qdesk
