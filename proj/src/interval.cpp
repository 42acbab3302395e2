#include "itensor/interval.hpp"

#include <algorithm>

#include "itensor/error.hpp"

namespace itensor {

IntervalTensor::IntervalTensor(Tensor lower, Tensor upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_shape(lower_, upper_, "interval");
  for (Index p = 0; p < lower_.size(); ++p) {
    if (lower_[p] > upper_[p]) {
      throw InputError("lower exceeds upper at " + format_index(shape().unravel(p)));
    }
  }
}

std::pair<Tensor, Tensor> midpoint_radius(const IntervalTensor& ai) {
  std::vector<double> mid(ai.size()), rad(ai.size());
  for (Index p = 0; p < ai.size(); ++p) {
    const double l = ai.lower()[p];
    const double u = ai.upper()[p];
    mid[p] = (l + u) / 2.0;
    rad[p] = (u - l) / 2.0;
  }
  return {Tensor(ai.shape(), std::move(mid)), Tensor(ai.shape(), std::move(rad))};
}

bool contains(const IntervalTensor& ai, const Tensor& a) {
  require_same_shape(ai.lower(), a, "contains");
  for (Index p = 0; p < a.size(); ++p) {
    if (a[p] < ai.lower()[p] || a[p] > ai.upper()[p]) return false;
  }
  return true;
}

bool interval_subset(const IntervalTensor& inner, const IntervalTensor& outer) {
  require_same_shape(inner.lower(), outer.lower(), "interval_subset");
  for (Index p = 0; p < inner.size(); ++p) {
    if (inner.lower()[p] < outer.lower()[p] || inner.upper()[p] > outer.upper()[p]) return false;
  }
  return true;
}

bool is_symmetric_interval(const IntervalTensor& ai) {
  const auto [mid, rad] = midpoint_radius(ai);
  return is_symmetric(mid) && is_symmetric(rad);
}

bool is_interval_z(const IntervalTensor& ai) {
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    for (Index t = 0; t < ai.row_size(); ++t) {
      if (t != d && ai.up(i, t) > 0.0) return false;
    }
  }
  return true;
}

Tensor extreme_prime(const IntervalTensor& ai) {
  std::vector<double> out(ai.upper().entries().begin(), ai.upper().entries().end());
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index p = ai.shape().flat(i, ai.shape().diag_tail(i));
    out[p] = ai.lower()[p];
  }
  return Tensor(ai.shape(), std::move(out));
}

Tensor extreme_single_raise(const IntervalTensor& ai, Index row, Index tail) {
  if (row >= ai.dim() || tail >= ai.row_size()) throw InputError("extreme_single_raise: position out of range");
  if (tail == ai.shape().diag_tail(row)) {
    throw InputError("extreme_single_raise: tail is the diagonal of row " + std::to_string(row + 1));
  }
  Tensor out = ai.lower();
  out.set(ai.shape().flat(row, tail), ai.up(row, tail));
  return out;
}

Tensor extreme_double_raise(const IntervalTensor& ai, Index row1, Index tail1, Index row2, Index tail2) {
  if (row1 == row2) throw InputError("extreme_double_raise: rows must differ");
  Tensor out = extreme_single_raise(ai, row1, tail1);
  if (row2 >= ai.dim() || tail2 >= ai.row_size()) throw InputError("extreme_double_raise: position out of range");
  if (tail2 == ai.shape().diag_tail(row2)) {
    throw InputError("extreme_double_raise: tail is the diagonal of row " + std::to_string(row2 + 1));
  }
  out.set(ai.shape().flat(row2, tail2), ai.up(row2, tail2));
  return out;
}

std::optional<Index> argmax_upper_tail(const IntervalTensor& ai, Index row) {
  const Index d = ai.shape().diag_tail(row);
  std::optional<Index> best;
  for (Index t = 0; t < ai.row_size(); ++t) {
    if (t == d) continue;
    if (!best || ai.up(row, t) > ai.up(row, *best)) best = t;
  }
  return best;
}

Tensor extreme_row_max_except(const IntervalTensor& ai, Index skip_row) {
  if (skip_row >= ai.dim()) throw InputError("extreme_row_max_except: row out of range");
  std::vector<Index> tails(ai.dim(), 0);
  for (Index i = 0; i < ai.dim(); ++i) {
    if (auto k = argmax_upper_tail(ai, i)) tails[i] = *k;
  }
  if (ai.dim() == 1) return ai.lower();
  return extreme_row_max_except(ai, skip_row, tails);
}

Tensor extreme_row_max_except(const IntervalTensor& ai, Index skip_row, std::span<const Index> tails) {
  if (skip_row >= ai.dim()) throw InputError("extreme_row_max_except: row out of range");
  if (tails.size() != ai.dim()) throw InputError("extreme_row_max_except: need one tail per row");
  Tensor out = ai.lower();
  for (Index i = 0; i < ai.dim(); ++i) {
    if (i == skip_row) continue;
    if (tails[i] >= ai.row_size() || tails[i] == ai.shape().diag_tail(i)) {
      throw InputError("extreme_row_max_except: bad tail for row " + std::to_string(i + 1));
    }
    out.set(ai.shape().flat(i, tails[i]), ai.up(i, tails[i]));
  }
  return out;
}

Tensor extreme_hat(const IntervalTensor& ai) {
  Tensor out = ai.lower();
  for (Index i = 0; i < ai.dim(); ++i) {
    const auto k = argmax_upper_tail(ai, i);
    if (!k) continue;
    const Index d = ai.shape().diag_tail(i);
    const double at_k = ai.lo(i, *k);
    for (Index t = 0; t < ai.row_size(); ++t) {
      const Index p = ai.shape().flat(i, t);
      if (t == *k) {
        out.set(p, ai.up(i, t));
      } else if (t != d) {
        out.set(p, std::min(ai.lo(i, t), at_k));
      }
    }
  }
  return out;
}

KReduction reduce_via_K(const IntervalTensor& ai) {
  std::vector<double> upper(ai.upper().entries().begin(), ai.upper().entries().end());
  std::vector<Index> positions;
  for (Index i = 0; i < ai.dim(); ++i) {
    const Index d = ai.shape().diag_tail(i);
    for (Index j = 0; j < ai.row_size(); ++j) {
      if (j == d) continue;
      bool dominated = false;
      for (Index t = 0; t < ai.row_size() && !dominated; ++t) {
        if (t != d && t != j && ai.lo(i, t) >= ai.up(i, j)) dominated = true;
      }
      if (dominated) {
        const Index p = ai.shape().flat(i, j);
        positions.push_back(p);
        upper[p] = ai.lower()[p];
      }
    }
  }
  return {IntervalTensor(ai.lower(), Tensor(ai.shape(), std::move(upper))), std::move(positions)};
}

Tensor sign_vertex(const IntervalTensor& ai, std::span<const int> z) {
  const Index n = ai.dim();
  if (z.size() != n) throw InputError("sign vector has length " + std::to_string(z.size()));
  for (Index k = 0; k < n; ++k) {
    if (z[k] != 1 && z[k] != -1) {
      throw InputError("sign vector component " + std::to_string(k + 1) + " is not +1 or -1");
    }
  }
  std::vector<double> out(ai.size());
  for (Index p = 0; p < ai.size(); ++p) {
    int sign = 1;
    Index rest = p;
    for (int k = 0; k < ai.order(); ++k) {
      sign *= z[rest % n];
      rest /= n;
    }
    out[p] = sign > 0 ? ai.lower()[p] : ai.upper()[p];
  }
  return Tensor(ai.shape(), std::move(out));
}

void require_vertex_budget(const IntervalTensor& ai, std::uint64_t limit) {
  const Index entries = ai.size();
  if (entries >= 64 || (std::uint64_t{1} << entries) > limit) throw BudgetExceeded(entries, limit);
}

Tensor vertex_at(const IntervalTensor& ai, std::uint64_t selector) {
  std::vector<double> out(ai.size());
  for (Index p = 0; p < ai.size(); ++p) out[p] = (selector >> p) & 1u ? ai.upper()[p] : ai.lower()[p];
  return Tensor(ai.shape(), std::move(out));
}

VertexStream::VertexStream(const IntervalTensor& ai, std::uint64_t limit) : ai_(&ai), count_(0) {
  for (Index p = 0; p < ai.size(); ++p) {
    if (ai.lower()[p] < ai.upper()[p]) free_.push_back(p);
  }
  if (free_.size() >= 64 || (std::uint64_t{1} << free_.size()) > limit) throw BudgetExceeded(free_.size(), limit);
  count_ = std::uint64_t{1} << free_.size();
}

bool VertexStream::next(Tensor& out, std::uint64_t* selector) {
  if (next_ >= count_) return false;
  std::vector<double> v(ai_->lower().entries().begin(), ai_->lower().entries().end());
  for (std::size_t k = 0; k < free_.size(); ++k) {
    if ((next_ >> k) & 1u) v[free_[k]] = ai_->upper()[free_[k]];
  }
  out = Tensor(ai_->shape(), std::move(v));
  if (selector) *selector = next_;
  ++next_;
  return true;
}

}  // namespace itensor
