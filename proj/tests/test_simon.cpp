#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qdesk/rng.hpp"
#include "qdesk/simon.hpp"

#include "helpers.hpp"

using namespace qdesk;

TEST_CASE("gf2_dot is the mod-2 inner product") {
    CHECK_FALSE(gf2_dot(0b11, 0b11));
    CHECK(gf2_dot(0b11, 0b01));
    CHECK(gf2_dot(0b11, 0b10));
    CHECK_FALSE(gf2_dot(0, 0b1011));
}

TEST_CASE("gf2_solve enumerates the nullspace") {
    SUBCASE("width 1, no rows") {
        Gf2System sys(1);
        CHECK(gf2_solve(sys) == std::vector<std::uint64_t>{1});
    }
    SUBCASE("rows 110 and 011 pin down 111") {
        Gf2System sys(3);
        sys.add_row(0b110);
        sys.add_row(0b011);
        CHECK(gf2_solve(sys) == std::vector<std::uint64_t>{0b111});
    }
    SUBCASE("row 11 leaves 11, checked exhaustively") {
        Gf2System sys(2);
        sys.add_row(0b11);
        const auto got = gf2_solve(sys);
        // Independent check: scan all 4 candidates.
        std::vector<std::uint64_t> expected;
        for (std::uint64_t v = 1; v < 4; ++v)
            if (!gf2_dot(v, 0b11)) expected.push_back(v);
        CHECK(got == expected);
        CHECK(got == std::vector<std::uint64_t>{0b11});
    }
    SUBCASE("agrees with an exhaustive scan on random systems") {
        auto rng = make_stream(8, 0);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4 + static_cast<int>(bounded(rng, 4));
            Gf2System sys(n);
            for (int i = 0; i < 3; ++i) sys.add_row(bounded(rng, std::uint64_t{1} << n));
            const auto got = gf2_solve(sys);
            std::vector<std::uint64_t> expected;
            for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
                bool ok = true;
                for (std::uint64_t row : sys.rows) ok = ok && !gf2_dot(row, v);
                if (ok) expected.push_back(v);
            }
            CHECK(got == expected);
        }
    }
}

TEST_CASE("system rows deduplicate") {
    Gf2System sys(4);
    CHECK(sys.add_row(0b1010));
    CHECK_FALSE(sys.add_row(0b1010));
    CHECK(sys.rows.size() == 1);
}

TEST_CASE("run_once only ever returns z with r.z = 0") {
    SUBCASE("n=1 forces z=0") {
        const auto oracle = random_periodic(1, 1, 2);
        auto rng = make_stream(1, 0);
        for (int i = 0; i < 20; ++i) CHECK(run_once(oracle, rng, false) == 0);
    }
    SUBCASE("n=2, r=11: z is 00 or 11, roughly evenly") {
        const auto oracle = random_periodic(2, 0b11, 3);
        auto rng = make_stream(2, 0);
        std::map<std::uint64_t, int> counts;
        for (int i = 0; i < 2000; ++i) counts[run_once(oracle, rng, false)]++;
        CHECK(counts.size() == 2);
        CHECK(counts.count(0b00) == 1);
        CHECK(counts.count(0b11) == 1);
        CHECK(std::abs(counts[0b00] / 2000.0 - 0.5) < 0.05);
    }
    SUBCASE("support invariant across random oracles and both modes") {
        auto rng = make_stream(3, 0);
        for (int n : {3, 5, 7}) {
            const std::uint64_t r = 1 + bounded(rng, (std::uint64_t{1} << n) - 1);
            const auto oracle = random_periodic(n, r, rng());
            for (bool skip : {false, true})
                for (int i = 0; i < 50; ++i)
                    CHECK_FALSE(gf2_dot(run_once(oracle, rng, skip), r));
        }
    }
}

TEST_CASE("exact z-distribution is uniform on the orthogonal complement") {
    SUBCASE("n=2, r=11") {
        const auto oracle = random_periodic(2, 0b11, 3);
        const auto d = z_distribution(oracle, false);
        CHECK(d[0b00] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d[0b11] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d[0b01] == 0.0);
        CHECK(d[0b10] == 0.0);
    }
    SUBCASE("n=3, r=101") {
        const auto oracle = random_periodic(3, 0b101, 5);
        const auto d = z_distribution(oracle, false);
        for (std::uint64_t z : {0b000u, 0b010u, 0b101u, 0b111u})
            CHECK(d[z] == doctest::Approx(0.25).epsilon(1e-12));
        for (std::uint64_t z : {0b001u, 0b011u, 0b100u, 0b110u}) CHECK(std::abs(d[z]) < 1e-15);
    }
    SUBCASE("uniform mass 2^-(n-1) for n up to 10") {
        auto rng = make_stream(9, 0);
        for (int n = 2; n <= 10; ++n) {
            const std::uint64_t r = 1 + bounded(rng, (std::uint64_t{1} << n) - 1);
            const auto oracle = random_periodic(n, r, rng());
            const auto d = z_distribution(oracle, false);
            const double mass = std::pow(2.0, -(n - 1));
            for (std::uint64_t z = 0; z < d.size(); ++z) {
                const double expected = gf2_dot(z, r) ? 0.0 : mass;
                CHECK(std::abs(d[z] - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("skipping the intermediate measurement leaves the z-distribution unchanged") {
    auto rng = make_stream(10, 0);
    for (int n = 1; n <= 8; ++n) {
        const std::uint64_t r = 1 + bounded(rng, (std::uint64_t{1} << n) - 1);
        const auto oracle = random_periodic(n, r, rng());
        const auto with_d = z_distribution(oracle, false);
        const auto without_d = z_distribution(oracle, true);
        REQUIRE(with_d.size() == without_d.size());
        for (std::size_t z = 0; z < with_d.size(); ++z)
            CHECK(std::abs(with_d[z] - without_d[z]) <= 1e-12);
    }
}

TEST_CASE("empirical z frequencies track the exact distribution with and without step d") {
    const auto oracle = random_periodic(2, 0b11, 3);
    std::map<bool, std::map<std::uint64_t, int>> counts;
    auto rng = make_stream(11, 0);
    for (bool skip : {false, true})
        for (int i = 0; i < 1000; ++i) counts[skip][run_once(oracle, rng, skip)]++;
    for (bool skip : {false, true}) {
        CHECK(std::abs(counts[skip][0b00] / 1000.0 - 0.5) < 0.06);
        CHECK(std::abs(counts[skip][0b11] / 1000.0 - 0.5) < 0.06);
    }
}

TEST_CASE("recover_period identifies r") {
    SUBCASE("n=1 needs no informative samples") {
        const auto oracle = random_periodic(1, 1, 6);
        auto rng = make_stream(12, 0);
        const auto report = recover_period(oracle, rng, 20);
        CHECK(report.recovered_r == 1);
        CHECK(report.samples_used == 0);
        CHECK(report.z_samples.empty());
    }
    SUBCASE("n=2 stops once the informative z arrives") {
        const auto oracle = random_periodic(2, 0b11, 3);
        double total_samples = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto rng = make_stream(seed, 0);
            const auto report = recover_period(oracle, rng, 40);
            CHECK(report.recovered_r == 0b11);
            for (std::uint64_t z : report.z_samples) CHECK_FALSE(gf2_dot(z, report.recovered_r));
            total_samples += report.samples_used;
        }
        CHECK(total_samples / 50.0 < 4.0); // geometric wait, mean 2
    }
    SUBCASE("n=10, 100 seeds, within 10n samples, matches the classical scan") {
        const int n = 10;
        auto seed_rng = make_stream(13, 0);
        for (int trial = 0; trial < 100; ++trial) {
            const std::uint64_t r = 1 + bounded(seed_rng, (std::uint64_t{1} << n) - 1);
            const auto oracle = random_periodic(n, r, seed_rng());
            auto rng = make_stream(1000 + trial, 0);
            const auto report = recover_period(oracle, rng, 10 * n);
            CHECK(report.recovered_r == oracle.r);
            CHECK(report.recovered_r == brute_force_period(oracle));
            CHECK(report.samples_used <= 10 * n);
        }
    }
    SUBCASE("budget exhaustion carries the partial system") {
        const auto oracle = random_periodic(6, 0b101010, 15);
        auto rng = make_stream(14, 0);
        CHECK_THROWS_AS((void)recover_period(oracle, rng, 2), BudgetExceededError);
        auto rng2 = make_stream(14, 0);
        try {
            (void)recover_period(oracle, rng2, 2);
        } catch (const BudgetExceededError& e) {
            CHECK(e.partial.samples_used == 2);
            CHECK(e.partial.z_samples.size() == 2);
            CHECK(e.partial.recovered_r == 0);
        }
    }
}

TEST_CASE("skip-step-d runs recover the same period") {
    const auto oracle = random_periodic(5, 0b10101, 44);
    auto rng = make_stream(15, 0);
    const auto report = recover_period(oracle, rng, 100, true);
    CHECK(report.recovered_r == oracle.r);
    CHECK(report.skip_step_d);
}
