#pragma once

#include <vector>

#include "bandlab/band_set.hpp"
#include "bandlab/spectral_constants.hpp"

namespace bandlab {

/// Sum over eigenvalues of dist(z, bands)^p / (s0 + |z|)^{d/2 + tau}.
double lt_sum_weighted(const std::vector<Complex>& eigs, const BandSet& set,
                       const ExponentPack& pack, double s0);

/// Sum over eigenvalues of
///   dist(z, bands)^p / (|z - omega|^p (|z - omega| + a1 - omega)^p).
/// Requires omega <= omega0 (pass the threshold magnitude as omega0_mag).
double lt_sum_resolvent(const std::vector<Complex>& eigs, const BandSet& set,
                        const ExponentPack& pack, double omega, double omega0_mag);

}  // namespace bandlab
