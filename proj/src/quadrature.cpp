#include "bandlab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bandlab/errors.hpp"

namespace bandlab {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double resabs = kWgk[7] * std::fabs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[i] * (f1 + f2);
    resabs += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  resabs *= std::fabs(half);
  double err = std::fabs(kronrod - gauss);
  // QUADPACK-style sharpened estimate with a rounding floor.
  if (err > 0.0) err = std::pow(200.0 * err, 1.5);
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs);
  return {a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::priority_queue<Segment> heap;
  const double mid = 0.5 * (a + b);
  double total = 0.0, total_err = 0.0;
  for (const Segment& s : {gk15(f, a, mid), gk15(f, mid, b)}) {
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }
  int segments = 2;
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)) &&
         segments < opts.max_segments) {
    const Segment worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m == worst.a || m == worst.b) break;  // interval exhausted in double precision
    const Segment left = gk15(f, worst.a, m);
    const Segment right = gk15(f, m, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  result.value = total;
  result.error = total_err;
  result.segments = segments;
  result.converged =
      total_err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(total));
  return result;
}

QuadratureResult integrate_from(const std::function<double(double)>& f, double a,
                                const QuadratureOptions& opts) {
  auto g = [&f, a](double u) {
    const double den = 1.0 - u;
    const double s = a + u / den;
    return f(s) / (den * den);
  };
  return integrate(g, 0.0, 1.0, opts);
}

double integrate_from_or_throw(const std::function<double(double)>& f, double a,
                               const QuadratureOptions& opts) {
  const QuadratureResult r = integrate_from(f, a, opts);
  if (!r.converged)
    throw QuadratureError(r.error, "semi-infinite quadrature did not converge; achieved " +
                                       std::to_string(r.error));
  return r.value;
}

}  // namespace bandlab
