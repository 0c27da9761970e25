#include "qdesk/waves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {

std::vector<cd> combine(const QuantumState& phi, const QuantumState& beta, cd cphi, cd cbeta) {
    std::vector<cd> out(phi.dim());
    kern::lincomb(phi.amplitudes(), cphi, beta.amplitudes(), cbeta, out);
    return out;
}

} // namespace

WavePair decompose(const QuantumState& phi, const QuantumState& beta, double delta) {
    if (!(phi.layout() == beta.layout()))
        throw LayoutError("decompose requires phi and beta on the same layout");
    const cd phase = std::polar(1.0, delta);
    auto plus = combine(phi, beta, cd{0.5, 0.0}, 0.5 * phase);
    auto minus = combine(phi, beta, cd{-0.5, 0.0}, 0.5 * phase);
    return WavePair{UnnormalizedState(phi.layout(), std::move(plus)),
                    UnnormalizedState(phi.layout(), std::move(minus)), delta};
}

std::pair<QuantumState, QuantumState> reconstruct(const WavePair& pair) {
    const auto& plus = pair.psi_plus;
    const auto& minus = pair.psi_minus;
    std::vector<cd> phi(plus.dim());
    kern::lincomb(plus.amplitudes(), cd{1.0, 0.0}, minus.amplitudes(), cd{-1.0, 0.0}, phi);
    const cd back_phase = std::polar(1.0, -pair.delta);
    std::vector<cd> beta(plus.dim());
    kern::lincomb(plus.amplitudes(), back_phase, minus.amplitudes(), back_phase, beta);
    return {QuantumState(plus.layout(), std::move(phi)),
            QuantumState(plus.layout(), std::move(beta))};
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i).real();
    return t;
}

DensityMatrix delta_averaged_density(const QuantumState& phi, const QuantumState& beta,
                                     Wave which, int grid) {
    if (grid < 2) throw std::invalid_argument("delta grid needs K >= 2");
    if (!(phi.layout() == beta.layout()))
        throw LayoutError("density average requires matching layouts");
    const std::size_t d = phi.dim();
    if (d > 4096) throw LayoutError("density matrix limited to dim <= 4096");

    DensityMatrix rho(d);
    std::vector<cd> psi(d);
    const double sign = (which == Wave::plus) ? 1.0 : -1.0;
    for (int k = 0; k < grid; ++k) {
        const double delta = 2.0 * std::numbers::pi * k / grid;
        const cd phase = std::polar(1.0, delta);
        // psi_+ = (phi + e^{i d} beta)/2,  psi_- = (e^{i d} beta - phi)/2
        kern::lincomb(phi.amplitudes(), cd{0.5 * sign, 0.0}, beta.amplitudes(), 0.5 * phase, psi);
        const std::int64_t n = static_cast<std::int64_t>(d);
#pragma omp parallel for
        for (std::int64_t i = 0; i < n; ++i) {
            const auto row = static_cast<std::size_t>(i);
            for (std::size_t col = 0; col < d; ++col)
                rho.at(row, col) += psi[row] * std::conj(psi[col]);
        }
    }
    const double inv_k = 1.0 / grid;
    for (auto& e : rho.m) e *= inv_k;
    return rho;
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.m.size(); ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

} // namespace qdesk
