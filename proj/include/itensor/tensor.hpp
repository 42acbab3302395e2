#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace itensor {

using Index = std::size_t;

/// Full multi-index (i1, ..., im), 0-based.
using MultiIndex = std::vector<Index>;

/// Trailing multi-index (i2, ..., im) of an entry inside its row, 0-based.
using Tail = std::vector<Index>;

/// Order m and dimension n of a tensor in T_{m,n}.
///
/// Entries are stored row-major over (i1, ..., im) with i1 slowest, so row i1
/// is the contiguous block [i1 * n^{m-1}, (i1 + 1) * n^{m-1}). Inside a row an
/// entry is addressed by its tail offset, the row-major rank of (i2, ..., im).
struct Shape {
  int order = 2;
  Index dim = 1;

  /// n^m
  Index size() const noexcept;
  /// n^{m-1}, the number of entries in one row.
  Index row_size() const noexcept;
  /// Tail offset of the diagonal entry (i1, i1, ..., i1) inside row i1.
  Index diag_tail(Index row) const noexcept;
  Index flat(Index row, Index tail) const noexcept { return row * row_size() + tail; }

  MultiIndex unravel(Index flat) const;
  Index ravel(std::span<const Index> index) const;
  Tail tail_digits(Index tail) const;
  Index tail_offset(std::span<const Index> tail) const;

  /// Throws InputError unless order >= 2 and dim >= 1 and n^m fits in memory indexing.
  void validate() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Dense real tensor of order m and dimension n. Every entry is finite.
class Tensor {
 public:
  /// Validates shape, length (n^m) and finiteness; errors name the offending
  /// 1-based flat position.
  Tensor(int order, Index dim, std::vector<double> entries);
  explicit Tensor(Shape shape, std::vector<double> entries)
      : Tensor(shape.order, shape.dim, std::move(entries)) {}

  static Tensor filled(int order, Index dim, double value);
  static Tensor zeros(int order, Index dim) { return filled(order, dim, 0.0); }
  /// Diagonal tensor with `value` on every a_{i...i}, zero elsewhere.
  static Tensor diagonal(int order, Index dim, double value);

  const Shape& shape() const noexcept { return shape_; }
  int order() const noexcept { return shape_.order; }
  Index dim() const noexcept { return shape_.dim; }
  Index size() const noexcept { return entries_.size(); }
  Index row_size() const noexcept { return row_size_; }

  std::span<const double> entries() const noexcept { return entries_; }
  double operator[](Index flat) const noexcept { return entries_[flat]; }
  double at(std::span<const Index> index) const;

  /// Row i1: the n^{m-1} entries a_{i1 i2 ... im} in tail order.
  std::span<const double> row(Index i1) const;
  double diag(Index i1) const { return entries_[shape_.flat(i1, shape_.diag_tail(i1))]; }

  /// Sets one entry; rejects non-finite values.
  void set(Index flat, double value);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  Shape shape_;
  Index row_size_;
  std::vector<double> entries_;
};

/// Throws InputError if the shapes differ; `what` names the operation.
void require_same_shape(const Tensor& a, const Tensor& b, const char* what);

/// Sum of the entries of row i1 in ascending tail order.
double row_sum(const Tensor& a, Index i1);

/// gamma^+_{i1}(A) = max{0, off-diagonal entries of row i1}; 0 when n = 1.
double gamma_plus(const Tensor& a, Index i1);

/// (A x^{m-1})_i for every i.
std::vector<double> tensor_apply(const Tensor& a, std::span<const double> x);

/// A^z = A^c - Delta x_1 T_z ... x_m T_z: entry a^c - delta * z_{i1} ... z_{im}.
Tensor sign_transform(const Tensor& center, const Tensor& radius, std::span<const int> z);

bool is_symmetric(const Tensor& a);

/// Invariance under the simultaneous cyclic shift i_l -> i_l + 1 (mod n).
bool is_circulant(const Tensor& a);

Tensor circulant_from_first_row(std::span<const double> row, int order, Index dim);

/// One row of a row_mix assignment: take the diagonal of parents[parent] and
/// place that parent's k-th off-diagonal entry (tail order, diagonal
/// skipped) at off-diagonal slot `permutation[k]` of the result.
struct RowSource {
  Index parent = 0;
  std::vector<Index> permutation;
};

/// Row-wise recombination of same-shape parents. `rows` must have one
/// entry per row and every permutation must be a bijection on the n^{m-1}-1
/// off-diagonal slots.
Tensor row_mix(std::span<const Tensor> parents, std::span<const RowSource> rows);

/// "(1,2,2)"-style 1-based rendering.
std::string format_index(std::span<const Index> index);

}  // namespace itensor
