#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "bandlab/kernels/band_kernels.hpp"

using namespace bandlab::kernels;

namespace {

struct Batch {
  std::vector<double> x, y;
};

Batch random_batch(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 15.0);
  Batch batch;
  batch.x.resize(n);
  batch.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch.x[i] = coord(rng);
    batch.y[i] = coord(rng);
  }
  // Pin a few edge configurations: on-segment points and the real axis.
  if (n >= 4) {
    batch.x[0] = 1.5;
    batch.y[0] = 0.0;
    batch.x[1] = 2.0;
    batch.y[1] = 0.0;
    batch.y[2] = 0.0;
    batch.x[3] = -3.0;
  }
  return batch;
}

const std::vector<double> kLo{1.0, 3.0, 5.0, 8.0};
const std::vector<double> kHi{2.0, 4.0, 7.0, 12.0};

}  // namespace

TEST_CASE("scalar distances agree with a naive per-point evaluation") {
  const Batch batch = random_batch(257, 11);
  std::vector<double> out(batch.x.size());
  segment_distance_scalar(batch.x.data(), batch.y.data(), batch.x.size(), kLo.data(),
                          kHi.data(), kLo.size(), out.data());
  for (std::size_t i = 0; i < batch.x.size(); ++i) {
    double best = 1e300;
    for (std::size_t k = 0; k < kLo.size(); ++k) {
      const double cx = std::min(std::max(batch.x[i], kLo[k]), kHi[k]);
      const double dx = batch.x[i] - cx;
      best = std::min(best, std::hypot(dx, batch.y[i]));
    }
    CHECK(out[i] == doctest::Approx(best).epsilon(1e-14));
  }
}

#ifdef BANDLAB_HAVE_AVX2
TEST_CASE("avx2 and scalar kernels are bitwise identical") {
  if (!isa_available(Isa::avx2)) {
    MESSAGE("avx2 not available on this host; skipping");
    return;
  }
  for (const std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{4},
                              std::size_t{127}, std::size_t{1024}, std::size_t{100001}}) {
    const Batch batch = random_batch(n, 1000 + n);
    std::vector<double> scalar_out(n), avx_out(n);
    segment_distance_scalar(batch.x.data(), batch.y.data(), n, kLo.data(), kHi.data(),
                            kLo.size(), scalar_out.data());
    segment_distance_avx2(batch.x.data(), batch.y.data(), n, kLo.data(), kHi.data(),
                          kLo.size(), avx_out.data());
    CHECK(std::memcmp(scalar_out.data(), avx_out.data(), n * sizeof(double)) == 0);

    std::vector<double> sre(n), sim(n), are(n), aim(n);
    mobius_scalar(batch.x.data(), batch.y.data(), n, -2.5, sre.data(), sim.data());
    mobius_avx2(batch.x.data(), batch.y.data(), n, -2.5, are.data(), aim.data());
    CHECK(std::memcmp(sre.data(), are.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(sim.data(), aim.data(), n * sizeof(double)) == 0);
  }
}
#endif

TEST_CASE("dispatch override") {
  const Isa original = active_isa();
  set_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);

  const Batch batch = random_batch(97, 5);
  std::vector<double> scalar_out(batch.x.size());
  segment_distance(batch.x.data(), batch.y.data(), batch.x.size(), kLo.data(), kHi.data(),
                   kLo.size(), scalar_out.data());

  if (isa_available(Isa::avx2)) {
    set_isa(Isa::avx2);
    CHECK(active_isa() == Isa::avx2);
    std::vector<double> avx_out(batch.x.size());
    segment_distance(batch.x.data(), batch.y.data(), batch.x.size(), kLo.data(), kHi.data(),
                     kLo.size(), avx_out.data());
    CHECK(std::memcmp(scalar_out.data(), avx_out.data(),
                      batch.x.size() * sizeof(double)) == 0);
  }
  set_isa(original);
}

TEST_CASE("zero-length batches are no-ops") {
  segment_distance(nullptr, nullptr, 0, kLo.data(), kHi.data(), kLo.size(), nullptr);
  mobius(nullptr, nullptr, 0, 0.0, nullptr, nullptr);
}
