#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itensor/kernels.hpp"
#include "itensor/tensor.hpp"
#include "itensor/verdict.hpp"

namespace itensor {

struct CheckOptions {
  Tolerance tolerance{};
  /// Log every evaluated inequality in Verdict::conditions.
  bool record = false;
};

enum class BMethod { Definition, RowsumGamma, Slack };
const char* method_name(BMethod m);

/// B-tensor test. Condition "a" is the positive row sum, "b" the per-entry
/// bound; rowsum_gamma and slack report a single "b" per row.
Verdict check_b(const Tensor& a, BMethod method = BMethod::Definition, const CheckOptions& opt = {});

/// Diagonal entry against the sum of absolute off-diagonal entries.
Verdict check_dd(const Tensor& a, bool strict, const CheckOptions& opt = {});

/// Off-diagonal entries <= 0.
Verdict check_z(const Tensor& a, const CheckOptions& opt = {});

/// Double B-tensor test, conditions "a", "b", "c" in that order.
Verdict check_double_b(const Tensor& a, const CheckOptions& opt = {});

/// The row-statistics form of the two tests above, used where RowStats are
/// already at hand (vertex oracles). `stats` has one entry per row.
bool b_from_stats(std::span<const RowStats> stats, Index row_size, const Tolerance& tol = {});
bool double_b_from_stats(std::span<const RowStats> stats, const Tolerance& tol = {});

struct PointDichotomy {
  enum class Kind { IsB, CriticalRow, NotDoubleB } kind = Kind::NotDoubleB;
  std::optional<Index> critical_row;
  /// Every row at slack equality. More than one entry contradicts uniqueness
  /// and is reported rather than hidden.
  std::vector<Index> equality_rows;
};

const char* dichotomy_name(PointDichotomy::Kind k);

PointDichotomy classify_double_b_dichotomy(const Tensor& a, const CheckOptions& opt = {});

/// Single-row criterion for circulant tensors. Throws InputError on
/// non-circulant input.
Verdict check_b_circulant(const Tensor& a, const CheckOptions& opt = {});

/// Sufficient conditions for the P property. Holds or Inconclusive only.
Verdict p_sufficient(const Tensor& a, const CheckOptions& opt = {});

struct FalsifyResult {
  bool falsified = false;
  std::optional<std::vector<double>> counterexample;
  /// max_i x_i (A x^{m-1})_i at the counterexample.
  std::optional<double> max_product;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
};

/// Searches for x != 0 with max_i x_i (A x^{m-1})_i <= 0. Candidates, in
/// order: +e_1, -e_1, +e_2, ...; all 2^n sign vectors when n <= 20; then
/// `budget` random unit vectors from mt19937_64(seed). The first falsifying
/// candidate in that order is returned, independent of thread count.
FalsifyResult falsify_p(const Tensor& a, std::size_t budget, std::uint64_t seed);

}  // namespace itensor
