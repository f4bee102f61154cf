#pragma once

#include <cstdint>
#include <string>

#include "bandlab/band_set.hpp"
#include "bandlab/mobius.hpp"

namespace bandlab {

/// The three lower bounds on dist(1/(z-omega), image) / dist(z, bands):
///   distor1: Re z < a_1 or Re z on a band,
///            1 / (3 |z-omega| (|z-omega| + a_1 - omega))
///   distor2: Re z in gap k >= 1,
///            1 / (2 |z-omega|^2) * (1 + (a_{k+1}-b_k)/(b_k-omega))^{-1}
///   distor3: omega < 0, any z off the bands,
///            1 / (5 (1 + r)) * 1 / (|z-omega| (|z-omega| + a_1 - omega)),
///            r the relative gap bound of the set.
enum class BoundKind { distor1, distor2, distor3 };

const char* bound_kind_name(BoundKind kind);

struct DistortionSample {
  Complex z;
  double omega = 0.0;
  double dist_z = 0.0;       // dist(z, bands)
  double dist_lambda = 0.0;  // dist(1/(z-omega), image bands)
  double ratio = 0.0;        // dist_lambda / dist_z
  double bound = 0.0;        // right-hand side of the applicable inequality
  BoundKind kind = BoundKind::distor1;
  double margin = 0.0;  // ratio - bound, nonnegative up to rounding
};

/// Evaluates the stated right-hand side; throws WrongRegion when the kind's
/// precondition on Re z (or the sign of omega for distor3) fails.
double distortion_bound(Complex z, double omega, const BandSet& set, BoundKind kind);

/// Full sample with the preferred bound: distor3 when omega < 0, else the
/// region bound.  Throws OnSpectrum when dist(z, bands) vanishes.
DistortionSample distortion_ratio(Complex z, double omega, const BandSet& set);

struct Rect {
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
};

struct DistortionReport {
  double min_margin = 0.0;
  Complex worst_z;
  BoundKind worst_kind = BoundKind::distor1;
  long long counts[3] = {0, 0, 0};  // margin evaluations per bound kind
  long long discarded = 0;          // samples within discard_eps of the bands
  long long samples = 0;            // requested sample count
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool pass() const { return min_margin >= -tol; }
};

/// Deterministic stratified sampling of the rectangle; for each kept sample
/// the region bound margin is evaluated, plus the distor3 margin when
/// omega < 0.  Requires region.re_max < b_K (truncation validity).
DistortionReport verify_distortion(const BandSet& set, double omega, const Rect& region,
                                   long long n, std::uint64_t seed, double tol = 1e-12,
                                   double discard_eps = 1e-9);

}  // namespace bandlab
