#pragma once

#include <complex>
#include <vector>

#include "bandlab/errors.hpp"

namespace bandlab {

using Complex = std::complex<double>;

struct Band {
  double lo = 0.0;  // a_k
  double hi = 0.0;  // b_k
};

/// Finite truncation of a band spectrum: K disjoint closed intervals
/// [a_1,b_1] < [a_2,b_2] < ... with a_1 > 0.
class BandSet {
 public:
  explicit BandSet(std::vector<Band> bands);

  int size() const { return static_cast<int>(bands_.size()); }
  const Band& band(int i) const { return bands_[static_cast<std::size_t>(i)]; }
  const std::vector<Band>& bands() const { return bands_; }

  double first_edge() const { return bands_.front().lo; }  // a_1
  double last_edge() const { return bands_.back().hi; }    // b_K

 private:
  std::vector<Band> bands_;
};

struct GapStats {
  std::vector<double> gap_lengths;  // gap_lengths[k-1] = a_{k+1} - b_k, k = 1..K-1
  double relative_bound = 0.0;      // max_k gap_lengths / b_k
};

GapStats gap_stats(const BandSet& set);

/// Classification of a real abscissa against the band set.  Gap indices are
/// 1-based: gap k separates band k and band k+1.
struct Region {
  enum class Kind { left_of_spectrum, on_band, in_gap };
  Kind kind = Kind::left_of_spectrum;
  int index = 0;  // band index (0-based) for on_band, gap index (1-based) for in_gap
};

/// Euclidean distance from z to the union of bands (as segments on the real
/// axis).  Zero iff z lies on a band.
double dist_to_bands(Complex z, const BandSet& set);

/// Throws TruncationExceeded for x >= b_K: classification there would need
/// bands beyond the truncation.  Edges a_k, b_k classify as on_band.
Region classify(double x, const BandSet& set);

/// Ordinates where the vertical line Re = x crosses into the image of band j
/// (1-based) under z -> 1/z: u_j = sqrt(x(a_j-x)), v_j = sqrt(x(b_j-x)).
/// Requires 0 < x < a_j and x to the left of band j.
std::pair<double, double> crossing_ordinates(double x, const BandSet& set, int j);

}  // namespace bandlab
