#include "bandlab/distortion.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "bandlab/kernels/band_kernels.hpp"

namespace bandlab {

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::distor1:
      return "distor1";
    case BoundKind::distor2:
      return "distor2";
    case BoundKind::distor3:
      return "distor3";
  }
  return "unknown";
}

namespace {

double bound_value(Complex z, double omega, const BandSet& set, BoundKind kind,
                   const Region& region, double relative_bound) {
  const double zw = std::abs(z - omega);
  const double a1 = set.first_edge();
  switch (kind) {
    case BoundKind::distor1:
      if (region.kind == Region::Kind::in_gap)
        throw WrongRegion("distor1 needs Re z < a_1 or Re z on a band");
      return 1.0 / (3.0 * zw * (zw + a1 - omega));
    case BoundKind::distor2: {
      if (region.kind != Region::Kind::in_gap)
        throw WrongRegion("distor2 needs Re z inside a gap of index >= 1");
      const int k = region.index;  // 1-based gap index
      const double b_k = set.band(k - 1).hi;
      const double a_next = set.band(k).lo;
      return 1.0 / (2.0 * zw * zw) / (1.0 + (a_next - b_k) / (b_k - omega));
    }
    case BoundKind::distor3:
      if (!(omega < 0.0)) throw WrongRegion("distor3 needs omega < 0");
      return 1.0 / (5.0 * (1.0 + relative_bound)) / (zw * (zw + a1 - omega));
  }
  throw WrongRegion("unknown bound kind");
}

}  // namespace

double distortion_bound(Complex z, double omega, const BandSet& set, BoundKind kind) {
  const Region region = classify(z.real(), set);
  const double r = (kind == BoundKind::distor3) ? gap_stats(set).relative_bound : 0.0;
  return bound_value(z, omega, set, kind, region, r);
}

DistortionSample distortion_ratio(Complex z, double omega, const BandSet& set) {
  if (!(omega < set.first_edge()))
    throw std::invalid_argument("distortion_ratio needs omega < a_1");
  DistortionSample sample;
  sample.z = z;
  sample.omega = omega;
  sample.dist_z = dist_to_bands(z, set);
  if (sample.dist_z == 0.0) throw OnSpectrum("z lies on the band set");
  const ImageBandSet image = mobius_image(set, omega);
  sample.dist_lambda = dist_to_image(MobiusMap{omega}(z), image);
  sample.ratio = sample.dist_lambda / sample.dist_z;
  const Region region = classify(z.real(), set);
  if (omega < 0.0) {
    sample.kind = BoundKind::distor3;
  } else {
    sample.kind =
        region.kind == Region::Kind::in_gap ? BoundKind::distor2 : BoundKind::distor1;
  }
  sample.bound = bound_value(z, omega, set, sample.kind, region,
                             sample.kind == BoundKind::distor3
                                 ? gap_stats(set).relative_bound
                                 : 0.0);
  sample.margin = sample.ratio - sample.bound;
  return sample;
}

DistortionReport verify_distortion(const BandSet& set, double omega, const Rect& region,
                                   long long n, std::uint64_t seed, double tol,
                                   double discard_eps) {
  if (!(omega < set.first_edge()))
    throw std::invalid_argument("verify_distortion needs omega < a_1");
  if (!(region.re_max < set.last_edge()))
    throw TruncationExceeded("sampling rectangle must satisfy max Re z < b_K");
  if (n < 0) throw std::invalid_argument("sample count must be nonnegative");

  DistortionReport report;
  report.samples = n;
  report.seed = seed;
  report.tol = tol;
  report.min_margin = std::numeric_limits<double>::infinity();
  if (n == 0) {
    report.min_margin = 0.0;  // vacuous success
    return report;
  }

  // Stratified jittered grid: one point per cell of an m x m lattice.
  const auto m = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  const double dx = (region.re_max - region.re_min) / static_cast<double>(m);
  const double dy = (region.im_max - region.im_min) / static_cast<double>(m);
  for (long long i = 0; i < n; ++i) {
    const long long cx = i % m;
    const long long cy = (i / m) % m;
    xs[static_cast<std::size_t>(i)] =
        region.re_min + (static_cast<double>(cx) + unit(rng)) * dx;
    ys[static_cast<std::size_t>(i)] =
        region.im_min + (static_cast<double>(cy) + unit(rng)) * dy;
  }

  // Batched distances through the dispatched kernels.
  const int K = set.size();
  std::vector<double> lo(static_cast<std::size_t>(K)), hi(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    lo[static_cast<std::size_t>(k)] = set.band(k).lo;
    hi[static_cast<std::size_t>(k)] = set.band(k).hi;
  }
  const ImageBandSet image = mobius_image(set, omega);
  std::vector<double> ilo(static_cast<std::size_t>(K)), ihi(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    ilo[static_cast<std::size_t>(k)] = image.beta(k);
    ihi[static_cast<std::size_t>(k)] = image.alpha(k);
  }
  const auto count = static_cast<std::size_t>(n);
  std::vector<double> dist_z(count), lam_re(count), lam_im(count), dist_l(count);
  kernels::segment_distance(xs.data(), ys.data(), count, lo.data(), hi.data(),
                            static_cast<std::size_t>(K), dist_z.data());
  kernels::mobius(xs.data(), ys.data(), count, omega, lam_re.data(), lam_im.data());
  kernels::segment_distance(lam_re.data(), lam_im.data(), count, ilo.data(), ihi.data(),
                            static_cast<std::size_t>(K), dist_l.data());

  const double relative_bound = gap_stats(set).relative_bound;
  auto record = [&](double margin, BoundKind kind, std::size_t i) {
    ++report.counts[static_cast<int>(kind)];
    if (margin < report.min_margin) {
      report.min_margin = margin;
      report.worst_z = Complex(xs[i], ys[i]);
      report.worst_kind = kind;
    }
  };

  for (std::size_t i = 0; i < count; ++i) {
    if (dist_z[i] <= discard_eps) {
      ++report.discarded;
      continue;
    }
    const Complex z(xs[i], ys[i]);
    const double ratio = dist_l[i] / dist_z[i];
    const Region reg = classify(xs[i], set);
    const BoundKind region_kind =
        reg.kind == Region::Kind::in_gap ? BoundKind::distor2 : BoundKind::distor1;
    record(ratio - bound_value(z, omega, set, region_kind, reg, 0.0), region_kind, i);
    if (omega < 0.0)
      record(ratio - bound_value(z, omega, set, BoundKind::distor3, reg, relative_bound),
             BoundKind::distor3, i);
  }
  if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;  // everything discarded
  return report;
}

}  // namespace bandlab
