#pragma once

// Fixtures and slow, independent reference checks. The reference checks
// walk full multi-indices through Tensor::at and share no code with the
// library's row kernels, so they can serve as oracles.

#include <functional>
#include <vector>

#include "itensor/interval.hpp"
#include "itensor/tensor.hpp"

namespace support {

using itensor::Index;
using itensor::IntervalTensor;
using itensor::Tensor;

inline Tensor t32(std::vector<double> entries) { return Tensor(3, 2, std::move(entries)); }

/// Bounds of the worked T_{3,2} example that is not interval B.
inline IntervalTensor boundary_example() {
  return IntervalTensor(t32({4, 0, 0, 1, 0, 1, 1, 4}), t32({5, 1, 1, 2, 1, 2, 2, 5}));
}

/// Diagonal [6,7], off-diagonal [0,1] in T_{3,2}.
inline IntervalTensor double_b_example() {
  return IntervalTensor(t32({6, 0, 0, 0, 0, 0, 0, 6}), t32({7, 1, 1, 1, 1, 1, 1, 7}));
}

/// Calls fn(index) for every full multi-index in row-major order.
inline void for_each_index(int order, Index dim, const std::function<void(const std::vector<Index>&)>& fn) {
  std::vector<Index> idx(static_cast<std::size_t>(order), 0);
  while (true) {
    fn(idx);
    int k = order - 1;
    while (k >= 0 && ++idx[k] == dim) idx[k--] = 0;
    if (k < 0) return;
  }
}

inline bool is_diagonal_index(const std::vector<Index>& idx) {
  for (Index c : idx) {
    if (c != idx[0]) return false;
  }
  return true;
}

struct RowRef {
  double diag = 0.0;
  std::vector<double> off;
  double sum = 0.0;
};

inline std::vector<RowRef> rows_of(const Tensor& a) {
  std::vector<RowRef> rows(a.dim());
  for_each_index(a.order(), a.dim(), [&](const std::vector<Index>& idx) {
    const double v = a.at(idx);
    auto& r = rows[idx[0]];
    r.sum += v;
    if (is_diagonal_index(idx)) {
      r.diag = v;
    } else {
      r.off.push_back(v);
    }
  });
  return rows;
}

inline double gamma_ref(const RowRef& r) {
  double g = 0.0;
  for (double v : r.off) g = v > g ? v : g;
  return g;
}

/// Row sums positive and each mean above every off-diagonal entry.
inline bool ref_is_b(const Tensor& a) {
  const double big_n = static_cast<double>(a.row_size());
  for (const auto& r : rows_of(a)) {
    if (!(r.sum > 0)) return false;
    for (double v : r.off) {
      if (!(r.sum / big_n > v)) return false;
    }
  }
  return true;
}

inline bool ref_is_double_b(const Tensor& a) {
  const auto rows = rows_of(a);
  std::vector<double> lead, slack;
  for (const auto& r : rows) {
    const double g = gamma_ref(r);
    double s = 0.0;
    for (double v : r.off) s += g - v;
    if (!(r.diag > g)) return false;
    if (!(r.diag - g >= s)) return false;
    lead.push_back(r.diag - g);
    slack.push_back(s);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i != j && !(lead[i] * lead[j] > slack[i] * slack[j])) return false;
    }
  }
  return true;
}

/// Every vertex of the box satisfies `pred`.
inline bool all_vertices(const IntervalTensor& ai, const std::function<bool(const Tensor&)>& pred) {
  const Index size = ai.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << size); ++s) {
    std::vector<double> v(size);
    for (Index p = 0; p < size; ++p) v[p] = (s >> p) & 1u ? ai.upper()[p] : ai.lower()[p];
    if (!pred(Tensor(ai.shape(), v))) return false;
  }
  return true;
}

}  // namespace support
