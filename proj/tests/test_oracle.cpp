#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdesk/errors.hpp"
#include "qdesk/oracle.hpp"
#include "qdesk/rng.hpp"

using namespace qdesk;

TEST_CASE("n=1 oracles have the only possible shape") {
    const auto oracle = random_periodic(1, 1, 42);
    validate(oracle);
    CHECK(oracle.table[0] == oracle.table[1]);
}

TEST_CASE("n=2, r=11 pairs the two antidiagonal cosets") {
    const auto oracle = random_periodic(2, 0b11, 3);
    validate(oracle);
    CHECK(oracle.table[0b00] == oracle.table[0b11]);
    CHECK(oracle.table[0b01] == oracle.table[0b10]);
    CHECK(oracle.table[0b00] != oracle.table[0b01]);
}

TEST_CASE("construction is deterministic per (n, r, seed)") {
    const auto a = random_periodic(6, 0b10010, 99);
    const auto b = random_periodic(6, 0b10010, 99);
    CHECK(a.table == b.table);
    const auto c = random_periodic(6, 0b10010, 100);
    CHECK(a.table != c.table);
}

TEST_CASE("zero and oversized periods are rejected") {
    CHECK_THROWS_AS(random_periodic(3, 0, 1), OracleError);
    CHECK_THROWS_AS(random_periodic(3, 8, 1), OracleError);
    CHECK_THROWS_AS(random_periodic(0, 1, 1), OracleError);
    CHECK_THROWS_AS(random_periodic(17, 1, 1), OracleError);
}

TEST_CASE("every constructed oracle satisfies all invariants") {
    auto rng = make_stream(7, 1);
    for (int n : {1, 2, 3, 5, 8, 12, 16}) {
        for (int trial = 0; trial < 3; ++trial) {
            const std::uint64_t r = 1 + bounded(rng, (std::uint64_t{1} << n) - 1);
            const auto oracle = random_periodic(n, r, rng());
            validate(oracle); // exhaustive
        }
    }
}

TEST_CASE("validate catches broken tables") {
    auto oracle = random_periodic(3, 0b011, 5);
    SUBCASE("periodicity breach") {
        oracle.table[0] ^= 1;
        CHECK_THROWS_AS(validate(oracle), OracleError);
    }
    SUBCASE("collision across cosets") {
        oracle.table[0b100] = oracle.table[0];
        oracle.table[0b100 ^ 0b011] = oracle.table[0];
        CHECK_THROWS_AS(validate(oracle), OracleError);
    }
}

TEST_CASE("brute_force_reverse finds both preimages in order") {
    const auto oracle = random_periodic(2, 0b11, 3);
    const auto v0 = oracle.table[0b00];
    const auto pair = brute_force_reverse(oracle, v0);
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0b00);
    CHECK(pair->second == 0b11);
}

TEST_CASE("brute_force_reverse returns nothing outside the image") {
    const auto oracle = random_periodic(3, 0b101, 8);
    int misses = 0;
    for (std::uint64_t v = 0; v < 8; ++v)
        if (!brute_force_reverse(oracle, v)) ++misses;
    CHECK(misses == 4); // half the values are unused by a 2-to-1 map
}

TEST_CASE("preimage pairs always XOR to the period") {
    const auto oracle = random_periodic(5, 0b10011, 21);
    for (std::uint64_t x = 0; x < oracle.domain_size(); ++x) {
        const auto pair = brute_force_reverse(oracle, oracle.table[x]);
        REQUIRE(pair.has_value());
        CHECK((pair->first ^ pair->second) == oracle.r);
    }
}

TEST_CASE("brute_force_period recovers r by collision scan") {
    CHECK(brute_force_period(random_periodic(1, 1, 0)) == 1);
    CHECK(brute_force_period(random_periodic(2, 0b11, 3)) == 0b11);

    auto rng = make_stream(13, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t r = 1 + bounded(rng, 255);
        const auto oracle = random_periodic(8, r, rng());
        CHECK(brute_force_period(oracle) == r);
    }
}

TEST_CASE("oracle JSON round-trips") {
    const auto oracle = random_periodic(4, 0b1001, 77);
    const auto text = oracle_to_json(oracle);
    const auto back = oracle_from_json(text);
    CHECK(back.n == oracle.n);
    CHECK(back.r == oracle.r);
    CHECK(back.table == oracle.table);
}
