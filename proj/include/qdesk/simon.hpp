#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "qdesk/gf2.hpp"
#include "qdesk/measure.hpp"
#include "qdesk/oracle.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

struct SimonRunReport {
    int n = 0;
    std::uint64_t recovered_r = 0;
    int samples_used = 0;
    std::vector<std::uint64_t> z_samples;
    bool skip_step_d = false;
};

// recover_period ran out of samples before the nullspace was a singleton.
// Carries the partial report and the constraint system gathered so far.
struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(SimonRunReport partial_report, Gf2System partial_system)
        : std::runtime_error("sample budget exhausted before the period was identified"),
          partial(std::move(partial_report)), system(std::move(partial_system)) {}

    SimonRunReport partial;
    Gf2System system;
};

// Two n-qubit registers: a holds x, b holds f(x).
RegisterLayout simon_layout(int n);

// (1/sqrt(N)) sum_x |x>_a |0>_b  -- after the first Hadamard.
QuantumState simon_phi_t1(int n);

// (1/sqrt(N)) sum_x |x>_a |f(x)>_b  -- after the oracle.
QuantumState simon_phi_t2(const PeriodicOracle& oracle);

// One full pipeline pass: prepare, H_a, oracle, [measure b], H_a,
// measure a. Returns z; every returned z satisfies z . r = 0.
std::uint64_t run_once(const PeriodicOracle& oracle, std::mt19937_64& rng, bool skip_step_d);

// Exact distribution of z, computed from amplitudes without sampling.
// Uniform mass 2^-(n-1) on {z : z . r = 0} for either flag value.
std::vector<double> z_distribution(const PeriodicOracle& oracle, bool skip_step_d);

// Repeats run_once, accumulating constraints until the GF(2) nullspace is a
// singleton. Throws BudgetExceededError when max_samples runs out first.
SimonRunReport recover_period(const PeriodicOracle& oracle, std::mt19937_64& rng,
                              int max_samples, bool skip_step_d = false);

} // namespace qdesk
