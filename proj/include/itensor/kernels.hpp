#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "itensor/tensor.hpp"

namespace itensor {

/// Per-row quantities shared by the B and double-B tests.
struct RowStats {
  double diag = 0.0;
  /// All entries of the row, ascending tail order.
  double rowsum = 0.0;
  /// Largest off-diagonal entry; -inf when the row has none (n = 1).
  double max_off = 0.0;
  /// max(0, max_off)
  double gamma = 0.0;
  /// Sum over off-diagonal tails of (gamma - a), ascending tail order.
  double slack_sum = 0.0;
};

/// Scalar reference. Every other path that produces RowStats must match it
/// bit for bit.
RowStats row_stats(std::span<const double> row, Index diag_tail);

namespace kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);

/// The ISA used by the dispatching entry points below. AVX2 when the CPU has
/// it, unless ITENSOR_SIMD=scalar is set or force_isa overrides.
Isa active_isa();
/// Pin the dispatch (tests use this); nullopt restores automatic selection.
void force_isa(std::optional<Isa> isa);

/// RowStats of the four row vertices with patterns base..base+3, where bit t
/// of a pattern picks upper[t] over lower[t]. `base` must be a multiple of 4
/// and len >= 2 (rows with fewer entries have fewer than 4 vertices).
void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]);

/// x_i * (A x^{m-1})_i for four vectors at once. `xs` holds the vectors
/// back to back (xs[k*n + i]); `out` has the same layout.
void p_products4(const Tensor& a, const double* xs, double* out);

namespace scalar {
void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]);
void p_products4(const Tensor& a, const double* xs, double* out);
}  // namespace scalar

namespace avx2 {
void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]);
void p_products4(const Tensor& a, const double* xs, double* out);
}  // namespace avx2

}  // namespace kernels
}  // namespace itensor
