#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qdesk/rng.hpp"
#include "qdesk/state.hpp"

namespace qdesk::testing {

// Haar-ish random normalized state: i.i.d. complex Gaussian amplitudes,
// normalized. Deterministic per seed.
inline QuantumState random_state(const RegisterLayout& layout, std::uint64_t seed) {
    auto rng = make_stream(seed, 0);
    std::vector<cd> amp(layout.dim());
    for (auto& a : amp) {
        // Box-Muller on our canonical draws.
        const double u1 = canonical(rng) + 1e-300;
        const double u2 = canonical(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = cd{r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)};
    }
    const double n = std::sqrt(kern::serial::norm2(amp));
    for (auto& a : amp) a /= n;
    return QuantumState(layout, std::move(amp));
}

inline double max_amp_diff(const QuantumState& a, const QuantumState& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        worst = std::max(worst, std::abs(a.amp(i) - b.amp(i)));
    return worst;
}

inline double l2_diff(const QuantumState& a, const QuantumState& b) {
    double s = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) s += std::norm(a.amp(i) - b.amp(i));
    return std::sqrt(s);
}

// Regularized upper incomplete gamma Q(a, x), for chi-square p-values.
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 1.0;
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // Lower series, then complement.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Continued fraction for Q directly.
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

inline double chi2_pvalue(double chi2, int dof) { return gamma_q(dof / 2.0, chi2 / 2.0); }

} // namespace qdesk::testing
