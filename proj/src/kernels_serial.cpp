#include "qdesk/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

// Plain-loop reference implementations. Semantics match qdesk::kern; sums
// accumulate in simple ascending order. Kept for correctness tests and the
// kernel benchmark, not used on any production path.

namespace qdesk::kern::serial {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::pair<double, double> rotation_entries(double theta) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (theta == half_pi) return {0.0, 1.0};
    if (theta == -half_pi) return {0.0, -1.0};
    if (theta == 0.0) return {1.0, 0.0};
    return {std::cos(theta), std::sin(theta)};
}

} // namespace

void hadamard(std::span<cd> amp, int bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (i & mask) continue;
        const cd a = amp[i];
        const cd b = amp[i | mask];
        amp[i] = (a + b) * kInvSqrt2;
        amp[i | mask] = (a - b) * kInvSqrt2;
    }
}

void rotate(std::span<cd> amp, int bit, double theta) {
    const auto [c, s] = rotation_entries(theta);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (i & mask) continue;
        const cd a = amp[i];
        const cd b = amp[i | mask];
        amp[i] = c * a - s * b;
        amp[i | mask] = s * a + c * b;
    }
}

void xor_table(std::span<cd> amp, int in_shift, std::uint64_t in_mask, int out_shift,
               std::span<const std::uint32_t> table) {
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        const std::uint64_t x = (i >> in_shift) & in_mask;
        const std::uint64_t j = i ^ (static_cast<std::uint64_t>(table[x]) << out_shift);
        if (i < j) std::swap(amp[i], amp[j]);
    }
}

void cx_swap(std::span<cd> amp, std::uint64_t control_mask, std::uint64_t target_mask) {
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if ((i & control_mask) == control_mask && (i & target_mask) == 0)
            std::swap(amp[i], amp[i | target_mask]);
    }
}

void project_value(std::span<cd> amp, int shift, std::uint64_t mask, std::uint64_t value) {
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (((i >> shift) & mask) != value) amp[i] = cd{0.0, 0.0};
    }
}

void project_mask(std::span<cd> amp, std::span<const std::uint8_t> keep) {
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (!keep[i]) amp[i] = cd{0.0, 0.0};
    }
}

void scale(std::span<cd> amp, cd factor) {
    for (auto& a : amp) a *= factor;
}

void lincomb(std::span<const cd> a, cd ca, std::span<const cd> b, cd cb, std::span<cd> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ca * a[i] + cb * b[i];
}

double norm2(std::span<const cd> amp) {
    double s = 0.0;
    for (const cd& a : amp) s += std::norm(a);
    return s;
}

cd inner(std::span<const cd> a, std::span<const cd> b) {
    cd s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

std::vector<double> register_probs(std::span<const cd> amp, int shift, std::uint64_t mask) {
    std::vector<double> probs(mask + 1, 0.0);
    for (std::uint64_t i = 0; i < amp.size(); ++i) probs[(i >> shift) & mask] += std::norm(amp[i]);
    return probs;
}

void gather_fixed(std::span<const cd> in, int shift, std::uint64_t mask, std::uint64_t value,
                  std::span<cd> out) {
    const std::uint64_t low = (std::uint64_t{1} << shift) - 1;
    const int width = static_cast<int>(std::countr_zero(mask + 1));
    for (std::uint64_t k = 0; k < out.size(); ++k) {
        const std::uint64_t idx = ((k >> shift) << (shift + width)) | (value << shift) | (k & low);
        out[k] = in[idx];
    }
}

} // namespace qdesk::kern::serial
