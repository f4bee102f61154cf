#pragma once

#include <cstddef>

// Batch geometry kernels.  Scalar reference implementations plus an AVX2
// variant selected at runtime; both compiled with contraction disabled so the
// two paths produce bitwise-identical results.

namespace bandlab::kernels {

// out[i] = min over segments [lo[k], hi[k]] of the Euclidean distance from
// (x[i], y[i]) to the segment on the real axis.
void segment_distance_scalar(const double* x, const double* y, std::size_t n,
                             const double* lo, const double* hi, std::size_t nseg,
                             double* out);

// w[i] = 1 / ((x[i], y[i]) - omega), split into real and imaginary parts.
void mobius_scalar(const double* x, const double* y, std::size_t n, double omega,
                   double* out_re, double* out_im);

#ifdef BANDLAB_HAVE_AVX2
void segment_distance_avx2(const double* x, const double* y, std::size_t n,
                           const double* lo, const double* hi, std::size_t nseg,
                           double* out);
void mobius_avx2(const double* x, const double* y, std::size_t n, double omega,
                 double* out_re, double* out_im);
#endif

enum class Isa { scalar, avx2 };

Isa active_isa();
bool isa_available(Isa isa);
void set_isa(Isa isa);  // throws std::invalid_argument if unsupported on this host
const char* isa_name(Isa isa);

// Dispatching entry points.
void segment_distance(const double* x, const double* y, std::size_t n,
                      const double* lo, const double* hi, std::size_t nseg,
                      double* out);
void mobius(const double* x, const double* y, std::size_t n, double omega,
            double* out_re, double* out_im);

}  // namespace bandlab::kernels
