// AVX2 variants of the amplitude kernels. Compiled with -mavx2; callers gate
// on runtime CPU support. std::complex<double> arrays are contiguous
// (re, im) pairs, so two complex values fill one __m256d lane set.

#if defined(__x86_64__) || defined(_M_X64)

#include "doomsim/kernels.hpp"

#include <immintrin.h>

namespace doomsim::kernels::detail {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

double norm_squared_avx2(std::span<const cplx> amps) {
  const double* p = reinterpret_cast<const double*>(amps.data());
  const std::size_t doubles = amps.size() * 2;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= doubles; i += 4) {
    __m256d v = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double total = hsum(acc);
  for (; i < doubles; ++i) total += p[i] * p[i];
  return total;
}

double project_bit_avx2(std::span<cplx> amps, int shift, int value) {
  const std::size_t run = std::size_t{1} << shift; // complex values per half-block
  if (shift == 0 || amps.size() < 4 || amps.size() % (2 * run) != 0)
    return project_bit_scalar(amps, shift, value);

  double* p = reinterpret_cast<double*>(amps.data());
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();

  for (std::size_t block = 0; block < amps.size(); block += 2 * run) {
    const std::size_t keep_start = block + (value ? run : 0);
    const std::size_t drop_start = block + (value ? 0 : run);
    // run >= 2 complex = 4 doubles, so whole halves vectorize cleanly
    for (std::size_t j = 0; j < run * 2; j += 4) {
      __m256d v = _mm256_loadu_pd(p + keep_start * 2 + j);
      acc = _mm256_fmadd_pd(v, v, acc);
      _mm256_storeu_pd(p + drop_start * 2 + j, zero);
    }
  }
  return hsum(acc);
}

void scale_avx2(std::span<cplx> amps, double factor) {
  double* p = reinterpret_cast<double*>(amps.data());
  const std::size_t doubles = amps.size() * 2;
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= doubles; i += 4)
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
  for (; i < doubles; ++i) p[i] *= factor;
}

} // namespace doomsim::kernels::detail

#endif
