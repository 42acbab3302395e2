#pragma once

#include <optional>
#include <vector>

#include "itensor/interval.hpp"
#include "itensor/point.hpp"
#include "itensor/verdict.hpp"

namespace itensor {

enum class IntervalBMethod { Theorem, Compact, Slack, Pairwise };
const char* method_name(IntervalBMethod m);

/// Interval B-tensor test. Per row, condition "a" is the positive lower row
/// sum and "b" the per-tail inequality of the chosen form:
///   theorem   sum_{t != j} lower_t > (N-1) upper_j
///   compact   sum lower > max{0, (N-1) upper_j + lower_j}
///   slack     lower_d - lower_j > sum_{k != d} (upper_j - lower_k)
///   pairwise  lower_d - upper_j > sum_{k != d, j} (upper_j - lower_k)
/// with N = n^{m-1}. The compact form folds "a" into its max.
Verdict check_interval_b(const IntervalTensor& ai, IntervalBMethod method = IntervalBMethod::Theorem,
                         const CheckOptions& opt = {});

/// Interval Z shortcut: every lower row sum positive. Throws InputError
/// unless is_interval_z(ai).
Verdict check_interval_b_zfast(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Necessary conditions for interval B: "nec-a" lower diagonal above the
/// summed magnitudes of negative lower entries; "nec-b" above |upper| and
/// |lower| of each off-diagonal; "prime" above max{0, upper off-diagonal}.
/// Fails certifies the interval is not interval B; Holds proves nothing.
Verdict interval_b_necessary(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Interval double B-tensor test. Conditions in order a, b1, b2, c1, c2, c3;
/// the pairwise ones run over ordered row pairs (i, j), i != j. The first
/// failure in that order is the witness.
Verdict check_interval_double_b(const IntervalTensor& ai, const CheckOptions& opt = {});

struct IntervalDichotomy {
  enum class Kind { IntervalB, CriticalRow, NotDoubleB } kind = Kind::NotDoubleB;
  enum class Mode { NonpositiveRowSum, SlackEquality };
  struct RowFailure {
    Index row = 0;
    Mode mode = Mode::NonpositiveRowSum;
    /// Tail where the pairwise slack form sits at equality.
    std::optional<Index> tail;
  };
  std::optional<Index> critical_row;
  /// Every row failing the pairwise form. A second entry contradicts the
  /// claimed uniqueness and is surfaced rather than hidden.
  std::vector<RowFailure> failing_rows;
};
const char* dichotomy_name(IntervalDichotomy::Kind k);

IntervalDichotomy classify_interval_double_b_dichotomy(const IntervalTensor& ai, const CheckOptions& opt = {});

enum class NecessaryVariant { Extremes, Rowmax };

/// Necessary conditions for interval double B.
///   extremes  check_double_b on lower and on every extreme_row_max_except
///   rowmax    the theorem's inequalities specialised to argmax-upper tails
/// Fails certifies non-membership.
Verdict interval_double_b_necessary(const IntervalTensor& ai, NecessaryVariant variant,
                                    const CheckOptions& opt = {});

/// Per row, the first off-diagonal tail k whose lower entry is >= every other
/// off-diagonal upper entry of that row. Empty when some row has none (the
/// index of that row is returned through `failing_row`).
std::optional<std::vector<Index>> dominance_tails(const IntervalTensor& ai, Index* failing_row = nullptr);

/// Exact under the dominance hypothesis (n >= 3, dominance_tails found):
/// interval double B iff lower and every row-max extreme built on the
/// distinguished tails are double B. Inconclusive when the hypothesis fails.
Verdict check_interval_double_b_dominance(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Interval Z shortcut: check_double_b(lower). Throws InputError unless
/// is_interval_z(ai).
Verdict check_interval_double_b_zfast(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Sufficient: every row has a nonnegative lower off-diagonal maximum and
/// extreme_hat(ai) is double B. Holds or Inconclusive.
Verdict check_interval_double_b_hat_sufficient(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Row-1 criterion for circulant bounds: "c1" lower_d > -sum_{off} lower and
/// "c2" lower_d - upper_j > sum_{k != d, j} (upper_j - lower_k) for every
/// off-diagonal j. Throws InputError unless both bounds are circulant.
Verdict check_interval_circulant(const IntervalTensor& ai, const CheckOptions& opt = {});

/// Sufficient conditions for interval P (even order with interval Z and
/// interval B, or symmetric with interval B or interval double B). Holds or
/// Inconclusive.
Verdict interval_p_sufficient(const IntervalTensor& ai, const CheckOptions& opt = {});

}  // namespace itensor
