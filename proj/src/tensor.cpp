#include "itensor/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "itensor/error.hpp"

namespace itensor {

namespace {

Index checked_pow(Index base, int exponent) {
  Index result = 1;
  for (int k = 0; k < exponent; ++k) {
    if (base != 0 && result > std::numeric_limits<Index>::max() / base) {
      throw InputError("tensor too large: " + std::to_string(base) + "^" + std::to_string(exponent) +
                       " entries");
    }
    result *= base;
  }
  return result;
}

}  // namespace

Index Shape::size() const noexcept { return row_size() * dim; }

Index Shape::row_size() const noexcept {
  Index r = 1;
  for (int k = 1; k < order; ++k) r *= dim;
  return r;
}

Index Shape::diag_tail(Index row) const noexcept {
  Index t = 0;
  for (int k = 1; k < order; ++k) t = t * dim + row;
  return t;
}

MultiIndex Shape::unravel(Index flat) const {
  MultiIndex idx(static_cast<std::size_t>(order));
  for (int k = order - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = flat % dim;
    flat /= dim;
  }
  return idx;
}

Index Shape::ravel(std::span<const Index> index) const {
  if (index.size() != static_cast<std::size_t>(order)) {
    throw InputError("multi-index has " + std::to_string(index.size()) + " components, order is " +
                     std::to_string(order));
  }
  Index flat = 0;
  for (Index c : index) {
    if (c >= dim) throw InputError("index component " + std::to_string(c + 1) + " out of range [1," +
                                   std::to_string(dim) + "]");
    flat = flat * dim + c;
  }
  return flat;
}

Tail Shape::tail_digits(Index tail) const {
  Tail digits(static_cast<std::size_t>(order - 1));
  for (int k = order - 2; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = tail % dim;
    tail /= dim;
  }
  return digits;
}

Index Shape::tail_offset(std::span<const Index> tail) const {
  if (tail.size() != static_cast<std::size_t>(order - 1)) {
    throw InputError("trailing index has " + std::to_string(tail.size()) + " components, expected " +
                     std::to_string(order - 1));
  }
  Index t = 0;
  for (Index c : tail) {
    if (c >= dim) throw InputError("index component " + std::to_string(c + 1) + " out of range [1," +
                                   std::to_string(dim) + "]");
    t = t * dim + c;
  }
  return t;
}

void Shape::validate() const {
  if (order < 2) throw InputError("order must be >= 2, got " + std::to_string(order));
  if (dim < 1) throw InputError("dimension must be >= 1");
  checked_pow(dim, order);
}

Tensor::Tensor(int order, Index dim, std::vector<double> entries)
    : shape_{order, dim}, row_size_(0), entries_(std::move(entries)) {
  shape_.validate();
  row_size_ = shape_.row_size();
  if (entries_.size() != shape_.size()) {
    throw InputError("entries has length " + std::to_string(entries_.size()) + ", expected " +
                     std::to_string(dim) + "^" + std::to_string(order) + " = " +
                     std::to_string(shape_.size()));
  }
  for (Index p = 0; p < entries_.size(); ++p) {
    if (!std::isfinite(entries_[p])) {
      throw InputError("non-finite entry at " + format_index(shape_.unravel(p)));
    }
  }
}

Tensor Tensor::filled(int order, Index dim, double value) {
  Shape s{order, dim};
  s.validate();
  return Tensor(order, dim, std::vector<double>(s.size(), value));
}

Tensor Tensor::diagonal(int order, Index dim, double value) {
  Tensor t = zeros(order, dim);
  for (Index i = 0; i < dim; ++i) t.set(t.shape_.flat(i, t.shape_.diag_tail(i)), value);
  return t;
}

double Tensor::at(std::span<const Index> index) const { return entries_[shape_.ravel(index)]; }

std::span<const double> Tensor::row(Index i1) const {
  if (i1 >= dim()) throw InputError("row " + std::to_string(i1 + 1) + " out of range");
  return std::span<const double>(entries_).subspan(i1 * row_size_, row_size_);
}

void Tensor::set(Index flat, double value) {
  if (flat >= entries_.size()) throw InputError("flat position out of range");
  if (!std::isfinite(value)) throw InputError("non-finite entry at " + format_index(shape_.unravel(flat)));
  entries_[flat] = value;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (a.shape() != b.shape()) {
    throw InputError(std::string(what) + ": shape mismatch (" + std::to_string(a.order()) + "," +
                     std::to_string(a.dim()) + ") vs (" + std::to_string(b.order()) + "," +
                     std::to_string(b.dim()) + ")");
  }
}

double row_sum(const Tensor& a, Index i1) {
  double s = 0.0;
  for (double v : a.row(i1)) s += v;
  return s;
}

double gamma_plus(const Tensor& a, Index i1) {
  const auto row = a.row(i1);
  const Index d = a.shape().diag_tail(i1);
  double max_off = -std::numeric_limits<double>::infinity();
  for (Index t = 0; t < row.size(); ++t) {
    if (t != d && row[t] > max_off) max_off = row[t];
  }
  return max_off > 0.0 ? max_off : 0.0;
}

std::vector<double> tensor_apply(const Tensor& a, std::span<const double> x) {
  const Index n = a.dim();
  if (x.size() != n) {
    throw InputError("vector has length " + std::to_string(x.size()) + ", expected " + std::to_string(n));
  }
  const auto tail_len = static_cast<std::size_t>(a.order() - 1);
  std::vector<double> out(n, 0.0);
  std::vector<Index> digits(tail_len);
  for (Index i = 0; i < n; ++i) {
    const auto row = a.row(i);
    std::fill(digits.begin(), digits.end(), 0);
    double acc = 0.0;
    for (Index t = 0; t < row.size(); ++t) {
      double term = row[t];
      for (Index d : digits) term *= x[d];
      acc += term;
      for (std::size_t k = tail_len; k-- > 0;) {
        if (++digits[k] < n) break;
        digits[k] = 0;
      }
    }
    out[i] = acc;
  }
  return out;
}

Tensor sign_transform(const Tensor& center, const Tensor& radius, std::span<const int> z) {
  require_same_shape(center, radius, "sign_transform");
  const Index n = center.dim();
  if (z.size() != n) throw InputError("sign vector has length " + std::to_string(z.size()));
  for (Index k = 0; k < n; ++k) {
    if (z[k] != 1 && z[k] != -1) {
      throw InputError("sign vector component " + std::to_string(k + 1) + " is not +1 or -1");
    }
  }
  const auto& shape = center.shape();
  std::vector<double> out(center.size());
  for (Index p = 0; p < center.size(); ++p) {
    if (radius[p] < 0.0) throw InputError("negative radius at " + format_index(shape.unravel(p)));
    int sign = 1;
    Index rest = p;
    for (int k = 0; k < center.order(); ++k) {
      sign *= z[rest % n];
      rest /= n;
    }
    out[p] = center[p] - radius[p] * sign;
  }
  return Tensor(shape, std::move(out));
}

bool is_symmetric(const Tensor& a) {
  const auto& shape = a.shape();
  for (Index p = 0; p < a.size(); ++p) {
    auto idx = shape.unravel(p);
    std::sort(idx.begin(), idx.end());
    if (a[shape.ravel(idx)] != a[p]) return false;
  }
  return true;
}

bool is_circulant(const Tensor& a) {
  const auto& shape = a.shape();
  const Index n = a.dim();
  for (Index p = 0; p < a.size(); ++p) {
    auto idx = shape.unravel(p);
    for (auto& c : idx) c = (c + 1) % n;
    if (a[shape.ravel(idx)] != a[p]) return false;
  }
  return true;
}

Tensor circulant_from_first_row(std::span<const double> row, int order, Index dim) {
  Shape shape{order, dim};
  shape.validate();
  if (row.size() != shape.row_size()) {
    throw InputError("first row has length " + std::to_string(row.size()) + ", expected " +
                     std::to_string(shape.row_size()));
  }
  std::vector<double> out(shape.size());
  for (Index p = 0; p < out.size(); ++p) {
    // Shift (i1, ..., im) back by i1 so the first component becomes 0.
    auto idx = shape.unravel(p);
    const Index back = idx[0];
    for (auto& c : idx) c = (c + dim - back) % dim;
    out[p] = row[shape.ravel(idx) % shape.row_size()];
  }
  return Tensor(shape, std::move(out));
}

Tensor row_mix(std::span<const Tensor> parents, std::span<const RowSource> rows) {
  if (parents.empty()) throw InputError("row_mix: no parent tensors");
  for (const auto& p : parents) require_same_shape(parents[0], p, "row_mix");
  const auto& shape = parents[0].shape();
  const Index n = shape.dim;
  if (rows.size() != n) {
    throw InputError("row_mix: assignment covers " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  }
  const Index slots = shape.row_size() - 1;
  std::vector<double> out(shape.size());
  for (Index i = 0; i < n; ++i) {
    const auto& src = rows[i];
    if (src.parent >= parents.size()) {
      throw InputError("row_mix: row " + std::to_string(i + 1) + " names missing parent " +
                       std::to_string(src.parent));
    }
    if (src.permutation.size() != slots) {
      throw InputError("row_mix: row " + std::to_string(i + 1) + " permutation has length " +
                       std::to_string(src.permutation.size()) + ", expected " + std::to_string(slots));
    }
    std::vector<bool> seen(slots, false);
    for (Index target : src.permutation) {
      if (target >= slots || seen[target]) {
        throw InputError("row_mix: row " + std::to_string(i + 1) + " permutation is not a bijection");
      }
      seen[target] = true;
    }
    const auto prow = parents[src.parent].row(i);
    const Index d = shape.diag_tail(i);
    // Off-diagonal slot k <-> tail k, or k+1 once past the diagonal.
    auto slot_tail = [d](Index k) { return k < d ? k : k + 1; };
    out[shape.flat(i, d)] = prow[d];
    for (Index k = 0; k < slots; ++k) {
      out[shape.flat(i, slot_tail(src.permutation[k]))] = prow[slot_tail(k)];
    }
  }
  return Tensor(shape, std::move(out));
}

std::string format_index(std::span<const Index> index) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) os << ',';
    os << index[k] + 1;
  }
  os << ')';
  return os.str();
}

}  // namespace itensor
