#include <limits>
#include <vector>

#include "itensor/kernels.hpp"

namespace itensor {

RowStats row_stats(std::span<const double> row, Index diag_tail) {
  RowStats s;
  s.diag = row[diag_tail];
  double sum = 0.0;
  double max_off = -std::numeric_limits<double>::infinity();
  for (Index t = 0; t < row.size(); ++t) {
    sum += row[t];
    if (t != diag_tail) max_off = row[t] > max_off ? row[t] : max_off;
  }
  s.rowsum = sum;
  s.max_off = max_off;
  s.gamma = max_off > 0.0 ? max_off : 0.0;
  double slack = 0.0;
  for (Index t = 0; t < row.size(); ++t) {
    if (t != diag_tail) slack += s.gamma - row[t];
  }
  s.slack_sum = slack;
  return s;
}

namespace kernels::scalar {

void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]) {
  std::vector<double> row(len);
  for (int lane = 0; lane < 4; ++lane) {
    const std::uint64_t pattern = base + static_cast<std::uint64_t>(lane);
    for (Index t = 0; t < len; ++t) row[t] = (pattern >> t) & 1u ? upper[t] : lower[t];
    out[lane] = row_stats(row, diag_tail);
  }
}

void p_products4(const Tensor& a, const double* xs, double* out) {
  const Index n = a.dim();
  for (int lane = 0; lane < 4; ++lane) {
    const double* x = xs + lane * n;
    const auto ax = tensor_apply(a, std::span<const double>(x, n));
    for (Index i = 0; i < n; ++i) out[lane * n + i] = x[i] * ax[i];
  }
}

}  // namespace kernels::scalar
}  // namespace itensor
