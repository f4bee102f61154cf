#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "bandlab/kernels/band_kernels.hpp"

namespace bandlab::kernels {

namespace {

bool avx2_supported() {
#if defined(BANDLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect_default() {
  if (const char* env = std::getenv("BANDLAB_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Isa::avx2;
  }
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_default()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return avx2_supported();
  }
  return false;
}

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("kernel ISA not available on this host");
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void segment_distance(const double* x, const double* y, std::size_t n,
                      const double* lo, const double* hi, std::size_t nseg,
                      double* out) {
#ifdef BANDLAB_HAVE_AVX2
  if (active_isa() == Isa::avx2) {
    segment_distance_avx2(x, y, n, lo, hi, nseg, out);
    return;
  }
#endif
  segment_distance_scalar(x, y, n, lo, hi, nseg, out);
}

void mobius(const double* x, const double* y, std::size_t n, double omega,
            double* out_re, double* out_im) {
#ifdef BANDLAB_HAVE_AVX2
  if (active_isa() == Isa::avx2) {
    mobius_avx2(x, y, n, omega, out_re, out_im);
    return;
  }
#endif
  mobius_scalar(x, y, n, omega, out_re, out_im);
}

}  // namespace bandlab::kernels
