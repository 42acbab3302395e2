#include <atomic>
#include <cstdlib>
#include <cstring>

#include "itensor/error.hpp"
#include "itensor/kernels.hpp"

namespace itensor::kernels {

#ifndef ITENSOR_HAVE_AVX2
namespace avx2 {
void vertex_row_stats4(const double*, const double*, Index, Index, std::uint64_t, RowStats*) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
void p_products4(const Tensor&, const double*, double*) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

namespace {

// -1 = automatic, otherwise the forced Isa value.
std::atomic<int> forced{-1};

Isa detect() {
  const char* env = std::getenv("ITENSOR_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(ITENSOR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = detect();
  return detected;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) throw InputError(std::string("ISA not available: ") + isa_name(*isa));
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void vertex_row_stats4(const double* lower, const double* upper, Index len, Index diag_tail,
                       std::uint64_t base, RowStats out[4]) {
  if (len < 2 || len > 64 || base % 4 != 0) throw std::logic_error("vertex_row_stats4: bad row or base");
  if (active_isa() == Isa::Avx2) {
    avx2::vertex_row_stats4(lower, upper, len, diag_tail, base, out);
  } else {
    scalar::vertex_row_stats4(lower, upper, len, diag_tail, base, out);
  }
}

void p_products4(const Tensor& a, const double* xs, double* out) {
  if (active_isa() == Isa::Avx2) {
    avx2::p_products4(a, xs, out);
  } else {
    scalar::p_products4(a, xs, out);
  }
}

}  // namespace itensor::kernels
