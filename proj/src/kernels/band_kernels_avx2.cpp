#ifdef BANDLAB_HAVE_AVX2

#include <immintrin.h>

#include <limits>

#include "bandlab/kernels/band_kernels.hpp"

namespace bandlab::kernels {

void segment_distance_avx2(const double* x, const double* y, std::size_t n,
                           const double* lo, const double* hi, std::size_t nseg,
                           double* out) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d y2 = _mm256_mul_pd(vy, vy);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < nseg; ++k) {
      const __m256d a = _mm256_set1_pd(lo[k]);
      const __m256d b = _mm256_set1_pd(hi[k]);
      __m256d dx = _mm256_max_pd(_mm256_sub_pd(a, vx), _mm256_sub_pd(vx, b));
      dx = _mm256_max_pd(dx, zero);
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), y2);
      best = _mm256_min_pd(best, d2);
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(best));
  }
  if (i < n) segment_distance_scalar(x + i, y + i, n - i, lo, hi, nseg, out + i);
}

void mobius_avx2(const double* x, const double* y, std::size_t n, double omega,
                 double* out_re, double* out_im) {
  const __m256d w = _mm256_set1_pd(omega);
  const __m256d neg = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(x + i), w);
    const __m256d v = _mm256_loadu_pd(y + i);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(v, v));
    _mm256_storeu_pd(out_re + i, _mm256_div_pd(u, den));
    _mm256_storeu_pd(out_im + i, _mm256_div_pd(_mm256_xor_pd(v, neg), den));
  }
  if (i < n) mobius_scalar(x + i, y + i, n - i, omega, out_re + i, out_im + i);
}

}  // namespace bandlab::kernels

#endif  // BANDLAB_HAVE_AVX2
