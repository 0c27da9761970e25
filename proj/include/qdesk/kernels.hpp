#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qdesk {

using cd = std::complex<double>;

// Low-level state-vector kernels.
//
// qdesk::kern holds the OpenMP-parallel versions used throughout the
// library; qdesk::kern::serial holds plain-loop reference implementations
// kept for testing and for the kernel benchmark.
//
// Determinism contract: element-wise kernels write each amplitude exactly
// once from fixed inputs, and reductions accumulate in a fixed chunk order,
// so every kernel returns bit-identical results regardless of thread count.
namespace kern {

// Fixed reduction chunk size (in elements). Chunk boundaries never depend
// on the number of threads.
inline constexpr std::size_t kChunk = 4096;

// In-place Hadamard on the qubit at bit position `bit`.
void hadamard(std::span<cd> amp, int bit);

// In-place real rotation on one qubit: |0> -> cos t |0> + sin t |1>,
// |1> -> -sin t |0> + cos t |1>. theta == pi/2 flips exactly.
void rotate(std::span<cd> amp, int bit, double theta);

// Basis permutation |x>|y> -> |x>|y ^ table[x]> for disjoint bit fields.
void xor_table(std::span<cd> amp, int in_shift, std::uint64_t in_mask, int out_shift,
               std::span<const std::uint32_t> table);

// Controlled bit-flip permutation: swaps amp[i] and amp[i ^ target_mask]
// for every i with all control bits set. control_mask = 0 gives NOT.
void cx_swap(std::span<cd> amp, std::uint64_t control_mask, std::uint64_t target_mask);

// Zero every amplitude whose register field (mask at shift) != value.
void project_value(std::span<cd> amp, int shift, std::uint64_t mask, std::uint64_t value);

// Zero every amplitude with keep[i] == 0.
void project_mask(std::span<cd> amp, std::span<const std::uint8_t> keep);

void scale(std::span<cd> amp, cd factor);

// out = ca * a + cb * b (all spans same length, out may not alias inputs).
void lincomb(std::span<const cd> a, cd ca, std::span<const cd> b, cd cb, std::span<cd> out);

double norm2(std::span<const cd> amp);

// <a|b> = sum conj(a[i]) * b[i].
cd inner(std::span<const cd> a, std::span<const cd> b);

// Born weights of each value of the register field (mask at shift):
// result[v] = sum |amp[i]|^2 over i with field == v. Ascending-index
// accumulation within each bucket.
std::vector<double> register_probs(std::span<const cd> amp, int shift, std::uint64_t mask);

// Contraction against a basis bra: out[k] = in[index with the register
// field fixed to `value` and the remaining bits taken from k].
void gather_fixed(std::span<const cd> in, int shift, std::uint64_t mask, std::uint64_t value,
                  std::span<cd> out);

namespace serial {

void hadamard(std::span<cd> amp, int bit);
void rotate(std::span<cd> amp, int bit, double theta);
void xor_table(std::span<cd> amp, int in_shift, std::uint64_t in_mask, int out_shift,
               std::span<const std::uint32_t> table);
void cx_swap(std::span<cd> amp, std::uint64_t control_mask, std::uint64_t target_mask);
void project_value(std::span<cd> amp, int shift, std::uint64_t mask, std::uint64_t value);
void project_mask(std::span<cd> amp, std::span<const std::uint8_t> keep);
void scale(std::span<cd> amp, cd factor);
void lincomb(std::span<const cd> a, cd ca, std::span<const cd> b, cd cb, std::span<cd> out);
double norm2(std::span<const cd> amp);
cd inner(std::span<const cd> a, std::span<const cd> b);
std::vector<double> register_probs(std::span<const cd> amp, int shift, std::uint64_t mask);
void gather_fixed(std::span<const cd> in, int shift, std::uint64_t mask, std::uint64_t value,
                  std::span<cd> out);

} // namespace serial

} // namespace kern
} // namespace qdesk
