#include "bandlab/kernels/band_kernels.hpp"

#include <cmath>
#include <limits>

namespace bandlab::kernels {

void segment_distance_scalar(const double* x, const double* y, std::size_t n,
                             const double* lo, const double* hi, std::size_t nseg,
                             double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double y2 = y[i] * y[i];
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nseg; ++k) {
      double dx = lo[k] - xi;
      const double dx2 = xi - hi[k];
      if (dx2 > dx) dx = dx2;
      if (dx < 0.0) dx = 0.0;
      const double d2 = dx * dx + y2;
      if (d2 < best) best = d2;
    }
    out[i] = std::sqrt(best);
  }
}

void mobius_scalar(const double* x, const double* y, std::size_t n, double omega,
                   double* out_re, double* out_im) {
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] - omega;
    const double v = y[i];
    const double den = u * u + v * v;
    out_re[i] = u / den;
    out_im[i] = -v / den;
  }
}

}  // namespace bandlab::kernels
