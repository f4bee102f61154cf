#include "bandlab/mobius.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bandlab {

ImageBandSet::ImageBandSet(std::vector<Band> intervals, double omega)
    : intervals_(std::move(intervals)), omega_(omega) {
  if (intervals_.empty()) throw InvalidBandSet("image band set must be nonempty");
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (!(0.0 < intervals_[k].lo && intervals_[k].lo < intervals_[k].hi))
      throw InvalidBandSet("image interval " + std::to_string(k + 1) + " is not ordered");
    if (k + 1 < intervals_.size() && !(intervals_[k + 1].hi < intervals_[k].lo))
      throw InvalidBandSet("image intervals are not strictly decreasing");
  }
}

ImageBandSet mobius_image(const BandSet& set, double omega) {
  if (!(omega < set.first_edge()))
    throw std::invalid_argument("mobius_image needs omega < a_1, got omega = " +
                                std::to_string(omega));
  std::vector<Band> intervals;
  intervals.reserve(static_cast<std::size_t>(set.size()));
  for (const Band& band : set.bands())
    intervals.push_back({1.0 / (band.hi - omega), 1.0 / (band.lo - omega)});
  return ImageBandSet(std::move(intervals), omega);
}

double dist_to_image(Complex w, const ImageBandSet& image) {
  const double x = w.real();
  const double y2 = w.imag() * w.imag();
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < image.size(); ++k) {
    double dx = image.beta(k) - x;
    const double dx2 = x - image.alpha(k);
    if (dx2 > dx) dx = dx2;
    if (dx < 0.0) dx = 0.0;
    const double d2 = dx * dx + y2;
    if (d2 < best) best = d2;
  }
  return std::sqrt(best);
}

}  // namespace bandlab
