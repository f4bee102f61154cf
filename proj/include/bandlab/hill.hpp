#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bandlab/band_set.hpp"

namespace bandlab {

/// Real periodic potential with a declared period and a recorded constant
/// shift (used to push the first band edge above zero).
class PeriodicPotential {
 public:
  PeriodicPotential(std::function<double(double)> fn, double period, std::string kind);

  static PeriodicPotential free_potential(double period);
  static PeriodicPotential cosine(double amplitude, double period);
  /// Samples (x, value) on [0, period]; evaluation wraps periodically with
  /// linear interpolation.
  static PeriodicPotential table(std::vector<double> xs, std::vector<double> values,
                                 double period);

  double operator()(double x) const { return fn_(wrap(x)) + shift_; }
  double period() const { return period_; }
  double shift() const { return shift_; }
  const std::string& kind() const { return kind_; }

  /// Sup norm of the shifted potential, estimated on a dense sample.
  double sup_norm() const { return sup_norm_; }

  PeriodicPotential shifted(double c) const;

 private:
  double wrap(double x) const;
  void refresh_sup_norm();

  std::function<double(double)> fn_;
  double period_;
  double shift_ = 0.0;
  double sup_norm_ = 0.0;
  std::string kind_;
};

struct Monodromy {
  // Fundamental solutions over one period: columns (y1, y1') and (y2, y2')
  // with initial data (1,0) and (0,1).
  double y1 = 1.0, dy1 = 0.0, y2 = 0.0, dy2 = 1.0;
  double trace() const { return y1 + dy2; }
  double det() const { return y1 * dy2 - y2 * dy1; }
};

/// Integrates -y'' + V0 y = E y across one period with a classical
/// fixed-step 4th order scheme.  steps >= 100.
Monodromy monodromy(const PeriodicPotential& v0, double energy, int steps);

/// Floquet discriminant Delta(E) = trace of the monodromy matrix.
double discriminant(const PeriodicPotential& v0, double energy, int steps);

struct DiscriminantEval {
  double value = 0.0;           // at 2*steps
  double error_estimate = 0.0;  // Richardson comparison of steps vs 2*steps
  double det_drift = 0.0;       // |det - 1| of the finer monodromy
};

DiscriminantEval discriminant_checked(const PeriodicPotential& v0, double energy, int steps);

struct BandSearchOptions {
  int steps = 1024;          // integrator steps per discriminant evaluation
  int coarse_grid = 4000;    // stage-1 scan resolution over the energy range
  int refine_factor = 200;   // stage-2 subdivision near |Delta| ~ 2
  double near_edge = 0.05;   // |Delta| > 2 - near_edge flags a cell for stage 2
  double edge_tol = 1e-10;   // bisection tolerance on band edges
};

struct BandComputation {
  BandSet set;            // shifted so that a_1 > 0
  double shift_c = 0.0;   // recorded constant shift applied to the potential
  int bands_found = 0;    // before truncation to K
  double max_det_drift = 0.0;  // worst |det(monodromy) - 1| seen during the scan
};

/// Bands are the closure of {E : |Delta(E)| <= 2} within the scan range;
/// edges located by bisection on Delta -+ 2.  The last band may be clipped
/// at e_max (truncation).  Throws FewerBandsFound when fewer than K bands
/// close within the range.
BandComputation band_edges(const PeriodicPotential& v0, double e_min, double e_max, int K,
                           const BandSearchOptions& opts = {});

}  // namespace bandlab
