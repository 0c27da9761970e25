#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdesk {

// A 2-to-1 function f on n-bit inputs with XOR period r: f(x) = f(x ^ r),
// and values of distinct {x, x^r} cosets are distinct. Output width is n.
struct PeriodicOracle {
    int n = 0;
    std::uint64_t r = 0;
    std::vector<std::uint32_t> table;

    std::uint32_t eval(std::uint64_t x) const { return table[x]; }
    std::uint64_t domain_size() const { return table.size(); }
};

// Seeded construction: image values are a seeded shuffle of all n-bit
// values, assigned injectively over the 2^(n-1) cosets of {0, r}.
// Deterministic for fixed (n, r, seed).
PeriodicOracle random_periodic(int n, std::uint64_t r, std::uint64_t seed);

// Checks all PeriodicOracle invariants exhaustively; throws OracleError.
void validate(const PeriodicOracle& oracle);

// The two preimages of `value` in ascending order, or nullopt if `value`
// is not in the image. Exhaustive scan: the exp(n)-step classical baseline.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
brute_force_reverse(const PeriodicOracle& oracle, std::uint64_t value);

// Recovers r by a classical collision scan over the table.
std::uint64_t brute_force_period(const PeriodicOracle& oracle);

std::string oracle_to_json(const PeriodicOracle& oracle);
PeriodicOracle oracle_from_json(std::string_view text);

} // namespace qdesk
