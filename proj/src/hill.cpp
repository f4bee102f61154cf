#include "bandlab/hill.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bandlab {

PeriodicPotential::PeriodicPotential(std::function<double(double)> fn, double period,
                                     std::string kind)
    : fn_(std::move(fn)), period_(period), kind_(std::move(kind)) {
  if (!(period_ > 0.0)) throw std::invalid_argument("potential period must be positive");
  refresh_sup_norm();
}

PeriodicPotential PeriodicPotential::free_potential(double period) {
  return PeriodicPotential([](double) { return 0.0; }, period, "free");
}

PeriodicPotential PeriodicPotential::cosine(double amplitude, double period) {
  const double freq = 2.0 * std::numbers::pi / period;
  return PeriodicPotential([amplitude, freq](double x) { return amplitude * std::cos(freq * x); },
                           period, "cosine");
}

PeriodicPotential PeriodicPotential::table(std::vector<double> xs, std::vector<double> values,
                                           double period) {
  if (xs.size() != values.size() || xs.size() < 2)
    throw std::invalid_argument("table potential needs matching samples, at least two");
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw std::invalid_argument("table potential abscissae must be sorted");
  if (xs.front() < 0.0 || xs.back() > period)
    throw std::invalid_argument("table potential abscissae must lie within [0, period]");
  auto interp = [xs = std::move(xs), values = std::move(values), period](double x) {
    // Outside the sampled range, wrap between the last sample and the first
    // one shifted by a period; degenerate when the samples already span it.
    if (x <= xs.front()) {
      const double x0 = xs.back() - period;
      const double span = xs.front() - x0;
      if (!(span > 0.0)) return values.front();
      return values.back() + (x - x0) / span * (values.front() - values.back());
    }
    if (x >= xs.back()) {
      const double span = xs.front() + period - xs.back();
      if (!(span > 0.0)) return values.back();
      return values.back() + (x - xs.back()) / span * (values.front() - values.back());
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return values[lo] + t * (values[hi] - values[lo]);
  };
  return PeriodicPotential(std::move(interp), period, "table");
}

double PeriodicPotential::wrap(double x) const {
  double y = std::fmod(x, period_);
  if (y < 0.0) y += period_;
  return y;
}

void PeriodicPotential::refresh_sup_norm() {
  constexpr int kSamples = 4096;
  double sup = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = period_ * static_cast<double>(i) / kSamples;
    sup = std::max(sup, std::fabs(fn_(x) + shift_));
  }
  sup_norm_ = sup;
}

PeriodicPotential PeriodicPotential::shifted(double c) const {
  PeriodicPotential copy = *this;
  copy.shift_ += c;
  copy.refresh_sup_norm();
  return copy;
}

namespace {

struct State {
  double y1, dy1, y2, dy2;
};

inline State derivative(const State& s, double w) {
  // y'' = (V0 - E) y, w = V0(x) - E.
  return {s.dy1, w * s.y1, s.dy2, w * s.y2};
}

inline State axpy(const State& s, double h, const State& d) {
  return {s.y1 + h * d.y1, s.dy1 + h * d.dy1, s.y2 + h * d.y2, s.dy2 + h * d.dy2};
}

}  // namespace

Monodromy monodromy(const PeriodicPotential& v0, double energy, int steps) {
  if (steps < 100) throw std::invalid_argument("monodromy integration needs steps >= 100");
  const double L = v0.period();
  const double h = L / static_cast<double>(steps);
  State s{1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < steps; ++i) {
    const double x = static_cast<double>(i) * h;
    const double w0 = v0(x) - energy;
    const double wm = v0(x + 0.5 * h) - energy;
    const double w1 = v0(x + h) - energy;
    const State k1 = derivative(s, w0);
    const State k2 = derivative(axpy(s, 0.5 * h, k1), wm);
    const State k3 = derivative(axpy(s, 0.5 * h, k2), wm);
    const State k4 = derivative(axpy(s, h, k3), w1);
    s = {s.y1 + h / 6.0 * (k1.y1 + 2.0 * k2.y1 + 2.0 * k3.y1 + k4.y1),
         s.dy1 + h / 6.0 * (k1.dy1 + 2.0 * k2.dy1 + 2.0 * k3.dy1 + k4.dy1),
         s.y2 + h / 6.0 * (k1.y2 + 2.0 * k2.y2 + 2.0 * k3.y2 + k4.y2),
         s.dy2 + h / 6.0 * (k1.dy2 + 2.0 * k2.dy2 + 2.0 * k3.dy2 + k4.dy2)};
  }
  return {s.y1, s.dy1, s.y2, s.dy2};
}

double discriminant(const PeriodicPotential& v0, double energy, int steps) {
  return monodromy(v0, energy, steps).trace();
}

DiscriminantEval discriminant_checked(const PeriodicPotential& v0, double energy, int steps) {
  const double coarse = discriminant(v0, energy, steps);
  const Monodromy fine = monodromy(v0, energy, 2 * steps);
  DiscriminantEval eval;
  eval.value = fine.trace();
  eval.error_estimate = std::fabs(coarse - fine.trace()) / 15.0;
  eval.det_drift = std::fabs(fine.det() - 1.0);
  return eval;
}

namespace {

// Bisection on Delta(E) -+ 2 between a point inside a band and one outside.
double refine_edge(const PeriodicPotential& v0, int steps, double e_inside, double e_outside,
                   double delta_outside, double tol) {
  const double level = delta_outside > 2.0 ? 2.0 : -2.0;
  double lo = e_inside, hi = e_outside;
  // f = Delta - level: |f| <= 0 inside (band side), > 0 outside.
  auto f = [&](double e) { return discriminant(v0, e, steps) - level; };
  double f_hi = delta_outside - level;
  for (int iter = 0; iter < 200 && std::fabs(hi - lo) > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (f_hi > 0.0)) {
      hi = mid;
      f_hi = fm;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BandComputation band_edges(const PeriodicPotential& v0, double e_min, double e_max, int K,
                           const BandSearchOptions& opts) {
  if (K < 1) throw FewerBandsFound(0, "requested band count must be at least 1");
  if (!(e_min < e_max)) throw std::invalid_argument("energy range is empty");

  // Stage 1: coarse scan.
  const int m = opts.coarse_grid;
  std::vector<double> grid(static_cast<std::size_t>(m) + 1);
  std::vector<double> delta(static_cast<std::size_t>(m) + 1);
  double max_drift = 0.0;
  for (int i = 0; i <= m; ++i) {
    grid[static_cast<std::size_t>(i)] =
        e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(m);
    const Monodromy mono = monodromy(v0, grid[static_cast<std::size_t>(i)], opts.steps);
    delta[static_cast<std::size_t>(i)] = mono.trace();
    max_drift = std::max(max_drift, std::fabs(mono.det() - 1.0));
  }

  // Stage 2: subdivide cells near |Delta| = 2 where a narrow band or gap can
  // hide between coarse samples.
  std::vector<double> xs, ds;
  xs.reserve(grid.size() * 2);
  ds.reserve(grid.size() * 2);
  auto near_edge = [&](double v) { return std::fabs(v) > 2.0 - opts.near_edge; };
  for (int i = 0; i < m; ++i) {
    xs.push_back(grid[static_cast<std::size_t>(i)]);
    ds.push_back(delta[static_cast<std::size_t>(i)]);
    const bool inside_l = std::fabs(delta[static_cast<std::size_t>(i)]) <= 2.0;
    const bool inside_r = std::fabs(delta[static_cast<std::size_t>(i) + 1]) <= 2.0;
    const bool flagged = near_edge(delta[static_cast<std::size_t>(i)]) ||
                         near_edge(delta[static_cast<std::size_t>(i) + 1]);
    if (flagged && inside_l == inside_r) {
      const double a = grid[static_cast<std::size_t>(i)];
      const double b = grid[static_cast<std::size_t>(i) + 1];
      for (int j = 1; j < opts.refine_factor; ++j) {
        const double x = a + (b - a) * static_cast<double>(j) / opts.refine_factor;
        xs.push_back(x);
        ds.push_back(discriminant(v0, x, opts.steps));
      }
    }
  }
  xs.push_back(grid.back());
  ds.push_back(delta.back());

  // March the refined samples and assemble bands.
  std::vector<Band> raw;
  bool inside = std::fabs(ds.front()) <= 2.0;
  double open_edge = inside ? xs.front() : 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const bool now = std::fabs(ds[i]) <= 2.0;
    if (now == inside) continue;
    if (now) {
      // entering a band: outside value at i-1
      open_edge = refine_edge(v0, opts.steps, xs[i], xs[i - 1], ds[i - 1], opts.edge_tol);
    } else {
      const double close_edge =
          refine_edge(v0, opts.steps, xs[i - 1], xs[i], ds[i], opts.edge_tol);
      raw.push_back({open_edge, close_edge});
    }
    inside = now;
  }
  if (inside) raw.push_back({open_edge, e_max});  // clipped truncation of the last band

  const int found = static_cast<int>(raw.size());
  if (found < K)
    throw FewerBandsFound(found, "found " + std::to_string(found) + " bands, requested " +
                                     std::to_string(K));
  raw.resize(static_cast<std::size_t>(K));

  // Shift so that a_1 > 0, recording the constant.
  double c = 0.0;
  if (raw.front().lo <= 0.0) c = 1.0 + std::fabs(raw.front().lo);
  for (Band& band : raw) {
    band.lo += c;
    band.hi += c;
  }
  return BandComputation{BandSet(std::move(raw)), c, found, max_drift};
}

}  // namespace bandlab
