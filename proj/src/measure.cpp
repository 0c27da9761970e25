#include "qdesk/measure.hpp"

#include <cmath>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

std::vector<double> exact_distribution(const QuantumState& state, std::string_view reg) {
    const auto& layout = state.layout();
    auto probs = kern::register_probs(state.amplitudes(), layout.shift(reg), layout.mask(reg));
    double total = 0.0;
    for (double p : probs) total += p;
    if (std::abs(total - 1.0) > 1e-10)
        throw NormError("distribution mass " + std::to_string(total) + " != 1");
    return probs;
}

MeasurementRecord measure(const QuantumState& state, std::string_view reg,
                          std::mt19937_64& rng) {
    const auto probs = exact_distribution(state, reg);
    const double u = canonical(rng);

    std::uint64_t outcome = 0;
    double p = 0.0;
    double cum = 0.0;
    bool picked = false;
    for (std::uint64_t v = 0; v < probs.size(); ++v) {
        if (probs[v] <= 0.0) continue;
        cum += probs[v];
        outcome = v;
        p = probs[v];
        if (u < cum) {
            picked = true;
            break;
        }
    }
    // Rounding can leave cum a hair below 1; fall through to the last
    // positive outcome.
    (void)picked;

    const auto& layout = state.layout();
    std::vector<cd> amp(state.amplitudes().begin(), state.amplitudes().end());
    kern::project_value(amp, layout.shift(reg), layout.mask(reg), outcome);
    kern::scale(amp, cd{1.0 / std::sqrt(p), 0.0});
    return MeasurementRecord{std::string(reg), outcome, p,
                             QuantumState(layout, std::move(amp))};
}

QuantumState eq1_selected_state(const QuantumState& state_t2, std::uint64_t f_bar,
                                std::string_view selected_reg) {
    const UnnormalizedState contracted = partial_inner(state_t2, selected_reg, f_bar);
    if (contracted.squared_norm() < 1e-14)
        throw PostSelectionError("post-selected outcome has zero probability");
    const double scale2 = static_cast<double>(contracted.dim()) / 2.0;
    std::vector<cd> amp(contracted.amplitudes().begin(), contracted.amplitudes().end());
    kern::scale(amp, cd{std::sqrt(scale2), 0.0});
    const double n2 = kern::norm2(amp);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw NormError("sqrt(N/2)-scaled selection is not normalized; "
                        "input was not a uniform 2-to-1 image state");
    return QuantumState(contracted.layout(), std::move(amp));
}

QuantumState backdated_run(const PeriodicOracle& oracle, std::uint64_t f_bar) {
    const auto pair = brute_force_reverse(oracle, f_bar);
    if (!pair) throw PostSelectionError("outcome is not in the oracle image");
    const RegisterLayout layout{{"a", oracle.n}, {"b", oracle.n}};
    std::vector<cd> amp(layout.dim(), cd{0.0, 0.0});
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    const int b_width = oracle.n;
    amp[pair->first << b_width] = cd{kInvSqrt2, 0.0};
    amp[pair->second << b_width] = cd{kInvSqrt2, 0.0};
    const QuantumState beta_t1(layout, std::move(amp));
    return apply_oracle(beta_t1, oracle);
}

} // namespace qdesk
