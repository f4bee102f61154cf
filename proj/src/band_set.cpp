#include "bandlab/band_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bandlab {

BandSet::BandSet(std::vector<Band> bands) : bands_(std::move(bands)) {
  if (bands_.empty()) throw InvalidBandSet("band set must contain at least one band");
  if (!(bands_.front().lo > 0.0))
    throw InvalidBandSet("first band edge a_1 must be positive, got " +
                         std::to_string(bands_.front().lo));
  for (std::size_t k = 0; k < bands_.size(); ++k) {
    if (!(bands_[k].lo < bands_[k].hi))
      throw InvalidBandSet("band " + std::to_string(k + 1) + " has a_k >= b_k");
    if (k + 1 < bands_.size() && !(bands_[k].hi < bands_[k + 1].lo))
      throw InvalidBandSet("bands " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                           " are not strictly increasing");
  }
}

GapStats gap_stats(const BandSet& set) {
  GapStats stats;
  stats.gap_lengths.reserve(static_cast<std::size_t>(set.size() > 0 ? set.size() - 1 : 0));
  for (int k = 0; k + 1 < set.size(); ++k) {
    const double r_k = set.band(k + 1).lo - set.band(k).hi;
    stats.gap_lengths.push_back(r_k);
    stats.relative_bound = std::max(stats.relative_bound, r_k / set.band(k).hi);
  }
  return stats;
}

double dist_to_bands(Complex z, const BandSet& set) {
  const double x = z.real();
  const double y = z.imag();
  // Matches the batch kernel arithmetic exactly.
  const double y2 = y * y;
  double best = std::numeric_limits<double>::infinity();
  for (const Band& band : set.bands()) {
    double dx = band.lo - x;
    const double dx2 = x - band.hi;
    if (dx2 > dx) dx = dx2;
    if (dx < 0.0) dx = 0.0;
    const double d2 = dx * dx + y2;
    if (d2 < best) best = d2;
  }
  return std::sqrt(best);
}

Region classify(double x, const BandSet& set) {
  if (x >= set.last_edge())
    throw TruncationExceeded("x = " + std::to_string(x) +
                             " lies at or beyond the last retained band edge b_K = " +
                             std::to_string(set.last_edge()));
  if (x < set.first_edge()) return {Region::Kind::left_of_spectrum, 0};
  for (int k = 0; k < set.size(); ++k) {
    if (x <= set.band(k).hi) {
      if (x >= set.band(k).lo) return {Region::Kind::on_band, k};
      return {Region::Kind::in_gap, k};  // between band k and band k+1, 1-based gap index k
    }
  }
  throw TruncationExceeded("unreachable: x beyond retained bands");
}

std::pair<double, double> crossing_ordinates(double x, const BandSet& set, int j) {
  if (j < 1 || j > set.size()) throw std::invalid_argument("band index j out of range");
  const Band& band = set.band(j - 1);
  if (!(x > 0.0) || !(x < band.lo))
    throw std::invalid_argument("crossing ordinates need 0 < x < a_j");
  const double u = std::sqrt(x * (band.lo - x));
  const double v = std::sqrt(x * (band.hi - x));
  return {u, v};
}

}  // namespace bandlab
