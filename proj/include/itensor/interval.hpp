#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "itensor/tensor.hpp"

namespace itensor {

/// The box {A : lower <= A <= upper}.
class IntervalTensor {
 public:
  /// Throws InputError on shape mismatch or lower > upper (1-based position).
  IntervalTensor(Tensor lower, Tensor upper);

  const Tensor& lower() const noexcept { return lower_; }
  const Tensor& upper() const noexcept { return upper_; }
  const Shape& shape() const noexcept { return lower_.shape(); }
  int order() const noexcept { return lower_.order(); }
  Index dim() const noexcept { return lower_.dim(); }
  Index size() const noexcept { return lower_.size(); }
  Index row_size() const noexcept { return lower_.row_size(); }

  double lo(Index row, Index tail) const { return lower_[shape().flat(row, tail)]; }
  double up(Index row, Index tail) const { return upper_[shape().flat(row, tail)]; }

  friend bool operator==(const IntervalTensor&, const IntervalTensor&) = default;

 private:
  Tensor lower_;
  Tensor upper_;
};

inline IntervalTensor make_interval(Tensor lower, Tensor upper) {
  return IntervalTensor(std::move(lower), std::move(upper));
}

/// (A^c, Delta) = ((lower + upper) / 2, (upper - lower) / 2).
std::pair<Tensor, Tensor> midpoint_radius(const IntervalTensor& ai);

bool contains(const IntervalTensor& ai, const Tensor& a);

/// Sub-box test: inner.lower >= outer.lower and inner.upper <= outer.upper.
bool interval_subset(const IntervalTensor& inner, const IntervalTensor& outer);

/// Symmetric interval: midpoint and radius both symmetric.
bool is_symmetric_interval(const IntervalTensor& ai);

bool is_interval_z(const IntervalTensor& ai);

/// Lower on the diagonal, upper everywhere else.
Tensor extreme_prime(const IntervalTensor& ai);

/// Lower everywhere except (row, tail), which takes its upper value. Throws
/// InputError when `tail` is the diagonal tail of `row`.
Tensor extreme_single_raise(const IntervalTensor& ai, Index row, Index tail);

/// Two raised positions in distinct rows.
Tensor extreme_double_raise(const IntervalTensor& ai, Index row1, Index tail1, Index row2, Index tail2);

/// Off-diagonal tail of `row` with the largest upper entry, smallest tail on
/// ties. nullopt when n = 1.
std::optional<Index> argmax_upper_tail(const IntervalTensor& ai, Index row);

/// Lower everywhere, except that each row other than `skip_row` has its
/// largest off-diagonal upper entry raised to upper.
Tensor extreme_row_max_except(const IntervalTensor& ai, Index skip_row);
/// Same, with the raised tail of each row given explicitly.
Tensor extreme_row_max_except(const IntervalTensor& ai, Index skip_row, std::span<const Index> tails);

/// Per row: upper at the argmax-upper tail k, lower on the diagonal and
/// min(lower, lower at k) elsewhere. May leave the box.
Tensor extreme_hat(const IntervalTensor& ai);

/// Collapses every dominated off-diagonal position (some other off-diagonal
/// position of the same row has lower >= its upper) to its lower bound.
struct KReduction {
  IntervalTensor reduced;
  /// Flat positions of the collapsed set, ascending.
  std::vector<Index> positions;
};
KReduction reduce_via_K(const IntervalTensor& ai);

/// Member whose entry at flat position p is lower or upper as the sign
/// product z_{i1} ... z_{im} is +1 or -1; the exact-endpoint form of
/// sign_transform(A^c, Delta, z).
Tensor sign_vertex(const IntervalTensor& ai, std::span<const int> z);

/// Default cap on vertex enumeration: 2^20 tensors.
inline constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t{1} << 20;

/// Throws BudgetExceeded unless 2^(n^m) <= limit.
void require_vertex_budget(const IntervalTensor& ai, std::uint64_t limit);

/// Vertex with selector bit p choosing upper at flat position p.
Tensor vertex_at(const IntervalTensor& ai, std::uint64_t selector);

/// Every distinct vertex exactly once, in ascending selector order. Bit k of
/// a selector picks upper at the k-th position with lower < upper, so a box
/// without degenerate entries yields 2^(n^m) vertices with bit p <-> flat
/// position p. The first vertex is lower, the last upper.
class VertexStream {
 public:
  /// Throws BudgetExceeded when the vertex count exceeds `limit`.
  VertexStream(const IntervalTensor& ai, std::uint64_t limit = kDefaultVertexBudget);

  std::uint64_t count() const noexcept { return count_; }
  /// Writes the next vertex and its selector; false once exhausted.
  bool next(Tensor& out, std::uint64_t* selector = nullptr);
  void restart() noexcept { next_ = 0; }

 private:
  const IntervalTensor* ai_;
  std::vector<Index> free_;
  std::uint64_t count_;
  std::uint64_t next_ = 0;
};

}  // namespace itensor
