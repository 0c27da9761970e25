#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdesk/state.hpp"

namespace qdesk {

enum class Wave { plus, minus };

// Retarded/advanced components of a forward state phi and backward state
// beta, at gauge phase delta:
//
//   psi_plus  =  (phi + e^{i delta} beta) / 2
//   psi_minus = -(phi - e^{i delta} beta) / 2
//
// so phi = psi_plus - psi_minus and beta = e^{-i delta}(psi_plus + psi_minus).
// The individual components are not normalized in general.
struct WavePair {
    UnnormalizedState psi_plus;
    UnnormalizedState psi_minus;
    double delta;
};

WavePair decompose(const QuantumState& phi, const QuantumState& beta, double delta);

// Exact inversion of decompose: (phi, beta).
std::pair<QuantumState, QuantumState> reconstruct(const WavePair& pair);

// Small dense density matrix, row-major.
struct DensityMatrix {
    std::size_t dim = 0;
    std::vector<cd> m;

    explicit DensityMatrix(std::size_t d) : dim(d), m(d * d, cd{0.0, 0.0}) {}
    cd& at(std::size_t i, std::size_t j) { return m[i * dim + j]; }
    const cd& at(std::size_t i, std::size_t j) const { return m[i * dim + j]; }
    double trace_real() const;
};

// Average of psi psi^dagger for the chosen wave over the uniform grid
// delta_k = 2 pi k / K. For any K >= 2 the e^{+-i delta} cross terms cancel
// identically, leaving (|phi><phi| + |beta><beta|) / 4 for either wave.
DensityMatrix delta_averaged_density(const QuantumState& phi, const QuantumState& beta,
                                     Wave which, int grid);

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

} // namespace qdesk
