#include "bandlab/lt_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace bandlab {

double lt_sum_weighted(const std::vector<Complex>& eigs, const BandSet& set,
                       const ExponentPack& pack, double s0) {
  pack.validate();
  double sum = 0.0;
  for (const Complex& z : eigs) sum += lt_weight(z, set, pack, s0);
  return sum;
}

double lt_sum_resolvent(const std::vector<Complex>& eigs, const BandSet& set,
                        const ExponentPack& pack, double omega, double omega0_mag) {
  pack.validate();
  if (!(omega <= -omega0_mag))
    throw std::invalid_argument("lt_sum_resolvent: requires omega <= omega0");
  const double a1 = set.first_edge();
  double sum = 0.0;
  for (const Complex& z : eigs) {
    const double dist = dist_to_bands(z, set);
    if (dist == 0.0) continue;
    const double zw = std::abs(z - omega);
    sum += std::pow(dist, pack.p) /
           (std::pow(zw, pack.p) * std::pow(zw + a1 - omega, pack.p));
  }
  return sum;
}

}  // namespace bandlab
