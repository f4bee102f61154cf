#pragma once

#include "bandlab/band_set.hpp"

namespace bandlab {

/// The linear fractional map w = 1/(z - omega) with real shift omega < a_1.
struct MobiusMap {
  double omega = 0.0;
  Complex operator()(Complex z) const { return 1.0 / (z - omega); }
};

/// Image of a band set under MobiusMap: intervals [beta_k, alpha_k] with
/// beta_k = 1/(b_k - omega), alpha_k = 1/(a_k - omega), strictly decreasing
/// toward 0 in band order.
class ImageBandSet {
 public:
  ImageBandSet(std::vector<Band> intervals, double omega);

  int size() const { return static_cast<int>(intervals_.size()); }
  const Band& interval(int k) const { return intervals_[static_cast<std::size_t>(k)]; }
  double beta(int k) const { return intervals_[static_cast<std::size_t>(k)].lo; }
  double alpha(int k) const { return intervals_[static_cast<std::size_t>(k)].hi; }
  double omega() const { return omega_; }

 private:
  std::vector<Band> intervals_;
  double omega_;
};

/// Requires omega < a_1; otherwise the image interval ordering breaks.
ImageBandSet mobius_image(const BandSet& set, double omega);

double dist_to_image(Complex w, const ImageBandSet& image);

}  // namespace bandlab
