// Compiled with -mavx2. One lane per vertex (or per sample vector), so each
// lane performs exactly the scalar operation sequence.
#include <immintrin.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "itensor/kernels.hpp"

namespace itensor::kernels::avx2 {

namespace {

inline __m256d lane_select(const double* lower, const double* upper, Index t, std::uint64_t base) {
  const auto bit = [&](int lane) -> long long {
    return ((base + static_cast<std::uint64_t>(lane)) >> t) & 1u ? -1LL : 0LL;
  };
  const __m256d mask = _mm256_castsi256_pd(_mm256_set_epi64x(bit(3), bit(2), bit(1), bit(0)));
  return _mm256_blendv_pd(_mm256_set1_pd(lower[t]), _mm256_set1_pd(upper[t]), mask);
}

}  // namespace

void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]) {
  __m256d sum = _mm256_setzero_pd();
  __m256d max_off = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  for (Index t = 0; t < len; ++t) {
    const __m256d v = lane_select(lower, upper, t, base);
    sum = _mm256_add_pd(sum, v);
    // _mm256_max_pd(a, b) is a > b ? a : b, the scalar update verbatim.
    if (t != diag_tail) max_off = _mm256_max_pd(v, max_off);
  }
  const __m256d gamma = _mm256_max_pd(max_off, _mm256_setzero_pd());
  __m256d slack = _mm256_setzero_pd();
  for (Index t = 0; t < len; ++t) {
    if (t == diag_tail) continue;
    slack = _mm256_add_pd(slack, _mm256_sub_pd(gamma, lane_select(lower, upper, t, base)));
  }
  alignas(32) double diag[4], s[4], m[4], g[4], sl[4];
  _mm256_store_pd(diag, lane_select(lower, upper, diag_tail, base));
  _mm256_store_pd(s, sum);
  _mm256_store_pd(m, max_off);
  _mm256_store_pd(g, gamma);
  _mm256_store_pd(sl, slack);
  for (int k = 0; k < 4; ++k) out[k] = RowStats{diag[k], s[k], m[k], g[k], sl[k]};
}

void p_products4(const Tensor& a, const double* xs, double* out) {
  const Index n = a.dim();
  const auto tail_len = static_cast<std::size_t>(a.order() - 1);
  // Component d of the four vectors, lane k = vector k.
  std::vector<double> xt(4 * n);
  for (Index d = 0; d < n; ++d) {
    for (Index k = 0; k < 4; ++k) xt[4 * d + k] = xs[k * n + d];
  }
  auto xv = [&](Index d) { return _mm256_loadu_pd(&xt[4 * d]); };
  std::vector<Index> digits(tail_len);
  alignas(32) double lanes[4];
  for (Index i = 0; i < n; ++i) {
    const auto row = a.row(i);
    std::fill(digits.begin(), digits.end(), 0);
    __m256d acc = _mm256_setzero_pd();
    for (Index t = 0; t < row.size(); ++t) {
      __m256d term = _mm256_set1_pd(row[t]);
      for (Index d : digits) term = _mm256_mul_pd(term, xv(d));
      acc = _mm256_add_pd(acc, term);
      for (std::size_t k = tail_len; k-- > 0;) {
        if (++digits[k] < n) break;
        digits[k] = 0;
      }
    }
    _mm256_store_pd(lanes, _mm256_mul_pd(xv(i), acc));
    for (int k = 0; k < 4; ++k) out[k * n + i] = lanes[k];
  }
}

}  // namespace itensor::kernels::avx2
