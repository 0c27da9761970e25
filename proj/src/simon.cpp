#include "qdesk/simon.hpp"

#include <stdexcept>
#include <string>

namespace qdesk {

RegisterLayout simon_layout(int n) { return RegisterLayout{{"a", n}, {"b", n}}; }

QuantumState simon_phi_t1(int n) {
    return apply_hadamard(QuantumState::basis(simon_layout(n), 0), "a");
}

QuantumState simon_phi_t2(const PeriodicOracle& oracle) {
    return apply_oracle(simon_phi_t1(oracle.n), oracle);
}

std::uint64_t run_once(const PeriodicOracle& oracle, std::mt19937_64& rng, bool skip_step_d) {
    QuantumState state = simon_phi_t2(oracle);
    if (!skip_step_d) state = measure(state, "b", rng).post_state;
    state = apply_hadamard(state, "a");
    return measure(state, "a", rng).outcome;
}

std::vector<double> z_distribution(const PeriodicOracle& oracle, bool skip_step_d) {
    const QuantumState phi_t2 = simon_phi_t2(oracle);
    if (skip_step_d) {
        return exact_distribution(apply_hadamard(phi_t2, "a"), "a");
    }
    // With the intermediate measurement: marginalize the conditional
    // z-distributions over the exact outcome weights of register b.
    const auto b_probs = exact_distribution(phi_t2, "b");
    const std::uint64_t n_z = std::uint64_t{1} << oracle.n;
    std::vector<double> z_probs(n_z, 0.0);
    const auto& layout = phi_t2.layout();
    for (std::uint64_t f_bar = 0; f_bar < b_probs.size(); ++f_bar) {
        if (b_probs[f_bar] <= 0.0) continue;
        std::vector<cd> amp(phi_t2.amplitudes().begin(), phi_t2.amplitudes().end());
        kern::project_value(amp, layout.shift("b"), layout.mask("b"), f_bar);
        kern::scale(amp, cd{1.0 / std::sqrt(b_probs[f_bar]), 0.0});
        const QuantumState collapsed(layout, std::move(amp));
        const auto conditional = exact_distribution(apply_hadamard(collapsed, "a"), "a");
        for (std::uint64_t z = 0; z < n_z; ++z) z_probs[z] += b_probs[f_bar] * conditional[z];
    }
    return z_probs;
}

SimonRunReport recover_period(const PeriodicOracle& oracle, std::mt19937_64& rng,
                              int max_samples, bool skip_step_d) {
    SimonRunReport report;
    report.n = oracle.n;
    report.skip_step_d = skip_step_d;

    Gf2System system(oracle.n);
    Gf2Eliminator elim(oracle.n);
    while (true) {
        if (elim.rank() == oracle.n - 1) {
            const auto basis = elim.nullspace_basis();
            report.recovered_r = basis.front();
            return report;
        }
        if (report.samples_used >= max_samples) throw BudgetExceededError(report, system);

        const std::uint64_t z = run_once(oracle, rng, skip_step_d);
        if (gf2_dot(z, oracle.r))
            throw std::logic_error("sampled z with z . r != 0; pipeline is broken");
        report.samples_used += 1;
        report.z_samples.push_back(z);
        if (z != 0 && system.add_row(z)) elim.add(z);
    }
}

} // namespace qdesk
