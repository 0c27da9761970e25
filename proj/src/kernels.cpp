#include "qdesk/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace qdesk::kern {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// cos/sin with exact values at the quarter turns, so that a pi/2 rotation
// maps |0> to |1> without float dust.
std::pair<double, double> rotation_entries(double theta) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (theta == half_pi) return {0.0, 1.0};
    if (theta == -half_pi) return {0.0, -1.0};
    if (theta == 0.0) return {1.0, 0.0};
    return {std::cos(theta), std::sin(theta)};
}

} // namespace

void hadamard(std::span<cd> amp, int bit) {
    const std::int64_t half = static_cast<std::int64_t>(amp.size() >> 1);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t hi = ~lo;
#pragma omp parallel for
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((static_cast<std::uint64_t>(i) & hi) << 1) |
                                 (static_cast<std::uint64_t>(i) & lo);
        const std::uint64_t i1 = i0 | mask;
        const cd a = amp[i0];
        const cd b = amp[i1];
        amp[i0] = (a + b) * kInvSqrt2;
        amp[i1] = (a - b) * kInvSqrt2;
    }
}

void rotate(std::span<cd> amp, int bit, double theta) {
    const auto [c, s] = rotation_entries(theta);
    const std::int64_t half = static_cast<std::int64_t>(amp.size() >> 1);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t hi = ~lo;
#pragma omp parallel for
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((static_cast<std::uint64_t>(i) & hi) << 1) |
                                 (static_cast<std::uint64_t>(i) & lo);
        const std::uint64_t i1 = i0 | mask;
        const cd a = amp[i0];
        const cd b = amp[i1];
        amp[i0] = c * a - s * b;
        amp[i1] = s * a + c * b;
    }
}

void xor_table(std::span<cd> amp, int in_shift, std::uint64_t in_mask, int out_shift,
               std::span<const std::uint32_t> table) {
    const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t u = static_cast<std::uint64_t>(i);
        const std::uint64_t x = (u >> in_shift) & in_mask;
        const std::uint64_t j = u ^ (static_cast<std::uint64_t>(table[x]) << out_shift);
        if (u < j) std::swap(amp[u], amp[j]);
    }
}

void cx_swap(std::span<cd> amp, std::uint64_t control_mask, std::uint64_t target_mask) {
    const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t u = static_cast<std::uint64_t>(i);
        if ((u & control_mask) == control_mask && (u & target_mask) == 0)
            std::swap(amp[u], amp[u | target_mask]);
    }
}

void project_value(std::span<cd> amp, int shift, std::uint64_t mask, std::uint64_t value) {
    const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t u = static_cast<std::uint64_t>(i);
        if (((u >> shift) & mask) != value) amp[u] = cd{0.0, 0.0};
    }
}

void project_mask(std::span<cd> amp, std::span<const std::uint8_t> keep) {
    const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) {
        if (!keep[static_cast<std::size_t>(i)]) amp[static_cast<std::size_t>(i)] = cd{0.0, 0.0};
    }
}

void scale(std::span<cd> amp, cd factor) {
    const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) amp[static_cast<std::size_t>(i)] *= factor;
}

void lincomb(std::span<const cd> a, cd ca, std::span<const cd> b, cd cb, std::span<cd> out) {
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out[u] = ca * a[u] + cb * b[u];
    }
}

double norm2(std::span<const cd> amp) {
    const std::size_t n = amp.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::norm(amp[i]);
        partial[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

cd inner(std::span<const cd> a, std::span<const cd> b) {
    const std::size_t n = a.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<cd> partial(nchunks, cd{0.0, 0.0});
#pragma omp parallel for
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        cd s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
        partial[static_cast<std::size_t>(c)] = s;
    }
    cd total{0.0, 0.0};
    for (cd p : partial) total += p;
    return total;
}

std::vector<double> register_probs(std::span<const cd> amp, int shift, std::uint64_t mask) {
    const std::uint64_t buckets = mask + 1;
    const std::uint64_t low_count = std::uint64_t{1} << shift;
    const std::uint64_t hi_count = amp.size() / (buckets * low_count);
    const int hi_shift = shift + static_cast<int>(std::countr_zero(buckets));
    std::vector<double> probs(buckets, 0.0);
    // One bucket per iteration: each bucket is summed serially in ascending
    // index order, so the result is thread-count independent.
#pragma omp parallel for
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(buckets); ++v) {
        double s = 0.0;
        for (std::uint64_t h = 0; h < hi_count; ++h) {
            const std::uint64_t base = (h << hi_shift) | (static_cast<std::uint64_t>(v) << shift);
            for (std::uint64_t l = 0; l < low_count; ++l) s += std::norm(amp[base | l]);
        }
        probs[static_cast<std::size_t>(v)] = s;
    }
    return probs;
}

void gather_fixed(std::span<const cd> in, int shift, std::uint64_t mask, std::uint64_t value,
                  std::span<cd> out) {
    const std::uint64_t low = (std::uint64_t{1} << shift) - 1;
    const int width = static_cast<int>(std::countr_zero(mask + 1));
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for
    for (std::int64_t k = 0; k < n; ++k) {
        const std::uint64_t u = static_cast<std::uint64_t>(k);
        const std::uint64_t idx = ((u >> shift) << (shift + width)) | (value << shift) | (u & low);
        out[u] = in[idx];
    }
}

} // namespace qdesk::kern
