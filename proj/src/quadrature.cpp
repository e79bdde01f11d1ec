#include "radunc/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace radunc::quadrature {

namespace {

// Kronrod abscissae (descending) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const Integrand& f, double a, double b) {
  const PanelEstimate e = gauss_kronrod_15(f, a, b);
  return {a, b, e.kronrod, std::abs(e.kronrod - e.gauss)};
}

// Adaptive loop against an absolute target that may tighten as the
// integral estimate grows.
QuadratureResult adapt(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                       long max_evaluations) {
  std::priority_queue<Panel> panels;
  Panel first = make_panel(f, a, b);
  panels.push(first);
  double total = first.value;
  double error = first.error;
  long evaluations = 15;

  auto target = [&] { return std::max(rel_tol * std::abs(total), abs_tol); };

  while (error > target()) {
    if (evaluations + 30 > max_evaluations) {
      throw NonConvergenceError("integrate: no convergence on [" + std::to_string(a) + ", " +
                                std::to_string(b) + "] after " + std::to_string(evaluations) +
                                " evaluations (error " + std::to_string(error) + ")");
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at machine resolution
    panels.pop();
    const Panel left = make_panel(f, worst.a, mid);
    const Panel right = make_panel(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from the panels to shed drift from the running updates.
  double sum = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {sum, err, evaluations};
}

}  // namespace

PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double rel_tol,
                                  long max_evaluations) {
  if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
  if (!(rel_tol >= 0.0)) throw std::invalid_argument("integrate_finite: rel_tol must be >= 0");
  return adapt(f, a, b, rel_tol, kAbsFloor, max_evaluations);
}

double laguerre_cutoff(double a, int b) { return 2.0 * (a + 4.0 * b + 50.0); }

QuadratureResult integrate_semi_infinite(const Integrand& f, double rel_tol,
                                         std::optional<double> cutoff, long max_evaluations) {
  if (!(rel_tol >= 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite: rel_tol must be >= 0");
  }
  if (cutoff) {
    if (!(*cutoff > 0.0)) throw std::invalid_argument("integrate_semi_infinite: cutoff <= 0");
    QuadratureResult r = adapt(f, 0.0, *cutoff, rel_tol, kAbsFloor, max_evaluations);
    r.error_estimate += 2.0 * std::abs(f(*cutoff));
    r.evaluations += 1;
    return r;
  }

  // First pass at loose tolerance locates the mass and sets the absolute
  // target for the second pass.
  auto walk = [&](double seg_rel, double abs_target) {
    QuadratureResult acc;
    double lo = 0.0;
    double hi = 4.0;
    int quiet = 0;
    for (int seg = 0; seg < 64; ++seg) {
      const QuadratureResult part =
          adapt(f, lo, hi, seg_rel, abs_target, max_evaluations - acc.evaluations);
      acc.value += part.value;
      acc.error_estimate += part.error_estimate;
      acc.evaluations += part.evaluations;
      const double threshold = std::max(1e-3 * seg_rel * std::abs(acc.value), 0.1 * abs_target);
      quiet = std::abs(part.value) <= threshold ? quiet + 1 : 0;
      if (quiet >= 2) return acc;
      lo = hi;
      hi *= 2.0;
    }
    throw NonConvergenceError("integrate_semi_infinite: integrand does not decay");
  };

  const QuadratureResult coarse = walk(1e-6, kAbsFloor);
  const double abs_target = std::max(rel_tol * std::abs(coarse.value) * 0.25, kAbsFloor);
  QuadratureResult fine = walk(rel_tol, abs_target);
  fine.evaluations += coarse.evaluations;
  return fine;
}

}  // namespace radunc::quadrature
