#include "qdesk/oracle.hpp"

#include <nlohmann/json.hpp>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

namespace {
constexpr int kMaxOracleWidth = 16;
} // namespace

PeriodicOracle random_periodic(int n, std::uint64_t r, std::uint64_t seed) {
    if (n < 1 || n > kMaxOracleWidth)
        throw OracleError("oracle width must be in [1, " + std::to_string(kMaxOracleWidth) + "]");
    const std::uint64_t size = std::uint64_t{1} << n;
    if (r == 0 || r >= size) throw OracleError("invalid period: r must be a nonzero n-bit mask");

    std::vector<std::uint32_t> values(size);
    for (std::uint64_t v = 0; v < size; ++v) values[v] = static_cast<std::uint32_t>(v);
    auto rng = make_stream(seed, 0);
    shuffle_values(values, rng);

    PeriodicOracle oracle{n, r, std::vector<std::uint32_t>(size)};
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (x < (x ^ r)) {
            oracle.table[x] = values[next];
            oracle.table[x ^ r] = values[next];
            ++next;
        }
    }
    return oracle;
}

void validate(const PeriodicOracle& oracle) {
    const std::uint64_t size = std::uint64_t{1} << oracle.n;
    if (oracle.n < 1 || oracle.n > kMaxOracleWidth) throw OracleError("width out of range");
    if (oracle.r == 0 || oracle.r >= size) throw OracleError("period is not a nonzero n-bit mask");
    if (oracle.table.size() != size) throw OracleError("table size != 2^n");
    std::vector<int> preimages(size, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
        if (oracle.table[x] >= size) throw OracleError("output value exceeds n bits");
        if (oracle.table[x] != oracle.table[x ^ oracle.r])
            throw OracleError("table breaks f(x) = f(x ^ r)");
        preimages[oracle.table[x]] += 1;
    }
    for (std::uint64_t v = 0; v < size; ++v)
        if (preimages[v] != 0 && preimages[v] != 2)
            throw OracleError("table is not exactly 2-to-1");
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
brute_force_reverse(const PeriodicOracle& oracle, std::uint64_t value) {
    for (std::uint64_t x = 0; x < oracle.domain_size(); ++x) {
        if (oracle.table[x] == value) {
            const std::uint64_t other = x ^ oracle.r;
            return std::make_pair(std::min(x, other), std::max(x, other));
        }
    }
    return std::nullopt;
}

std::uint64_t brute_force_period(const PeriodicOracle& oracle) {
    std::vector<std::int64_t> first_seen(oracle.domain_size(), -1);
    for (std::uint64_t x = 0; x < oracle.domain_size(); ++x) {
        const std::uint32_t v = oracle.table[x];
        if (first_seen[v] >= 0) return x ^ static_cast<std::uint64_t>(first_seen[v]);
        first_seen[v] = static_cast<std::int64_t>(x);
    }
    throw OracleError("no collision found: table is not 2-to-1");
}

std::string oracle_to_json(const PeriodicOracle& oracle) {
    nlohmann::ordered_json j;
    j["n"] = oracle.n;
    j["r"] = oracle.r;
    j["table"] = oracle.table;
    return j.dump(2);
}

PeriodicOracle oracle_from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    PeriodicOracle oracle{j.at("n").get<int>(), j.at("r").get<std::uint64_t>(),
                          j.at("table").get<std::vector<std::uint32_t>>()};
    validate(oracle);
    return oracle;
}

} // namespace qdesk
