#include "radunc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "radunc/format.hpp"
#include "radunc/hydrogenic.hpp"
#include "radunc/isw.hpp"
#include "radunc/quadrature.hpp"
#include "radunc/sho.hpp"
#include "radunc/specfun.hpp"

namespace radunc::verify {

namespace {

constexpr double kOracleRelTol = 1e-12;

// Length over which the wavefunction changes appreciably; sets the finite
// difference step.
double length_scale(const QuantumState& s) {
  switch (s.system) {
    case System::Hydrogen: return 0.5 * s.n;
    case System::Isw: return 1.0 / specfun::spherical_bessel_zero(s.l, s.n).value;
    case System::Sho: return 1.0 / std::sqrt(2.0 * s.n + 3.0);
  }
  return 1.0;
}

double integrate(const RadialFunction& f, const std::function<double(double)>& g) {
  return quadrature::integrate_finite(g, 0.0, f.upper, kOracleRelTol).value;
}

}  // namespace

std::string describe(const QuantumState& s) {
  std::string out = std::string(to_string(s.system)) + "(n=" + std::to_string(s.n) +
                    ",l=" + std::to_string(s.l);
  if (s.system == System::Hydrogen) out += ",Z=" + std::to_string(s.Z);
  return out + ")";
}

RadialFunction radial_function(const QuantumState& s) {
  switch (s.system) {
    case System::Hydrogen: {
      const hydrogenic::HydrogenicSpec spec(s.Z, s.n, s.l);
      // Observable units are a0/Z: R_u(x) = Z^{-3/2} R(x/Z) stays normalized.
      const double z = spec.Z;
      const double rho_max = quadrature::laguerre_cutoff(2.0 * s.l + 1.0, s.n - s.l - 1);
      return {[spec, z](double x) { return std::pow(z, -1.5) * hydrogenic::radial_wavefunction(spec, x / z); },
              [spec, z](double x) { return std::pow(z, -2.5) * hydrogenic::radial_wavefunction_deriv(spec, x / z); },
              0.5 * s.n * rho_max, false};
    }
    case System::Isw: {
      const isw::IswSpec spec(s.n, s.l);
      return {[spec](double r) { return isw::radial_wavefunction(spec, r); },
              [spec](double r) { return isw::radial_wavefunction_deriv(spec, r); }, 1.0, true};
    }
    case System::Sho: {
      const sho::ShoSpec spec(s.n, s.l);
      const double eta_max = quadrature::laguerre_cutoff(spec.superscript(), spec.radial());
      return {[spec](double r) { return sho::radial_wavefunction(spec, r); },
              [spec](double r) { return sho::radial_wavefunction_deriv(spec, r); },
              std::sqrt(eta_max), false};
    }
  }
  throw std::invalid_argument("radial_function: unknown system");
}

RadialObservables closed_form_observables(const QuantumState& s) {
  switch (s.system) {
    case System::Hydrogen: return hydrogenic::observables({s.Z, s.n, s.l});
    case System::Isw: return isw::observables({s.n, s.l});
    case System::Sho: return sho::observables({s.n, s.l});
  }
  throw std::invalid_argument("closed_form_observables: unknown system");
}

RadialObservables oracle_observables(const QuantumState& s) {
  const RadialFunction f = radial_function(s);
  const auto& R = f.R;
  const auto& dR = f.dR;
  RadialObservables o;
  o.mean_r = integrate(f, [&](double r) { const double v = R(r); return r * r * r * v * v; });
  o.mean_r2 = integrate(f, [&](double r) { const double v = R(r); return r * r * r * r * v * v; });
  o.mean_inv_r = integrate(f, [&](double r) { const double v = R(r); return r * v * v; });
  o.mean_inv_r2 = integrate(f, [&](double r) { const double v = R(r); return v * v; });
  o.mean_pr = integrate(f, [&](double r) { const double v = R(r); return r * r * v * dR(r) + r * v * v; });
  o.mean_pr2 = integrate(f, [&](double r) { const double w = r * dR(r) + R(r); return w * w; });
  finish_observables(o);
  return o;
}

double oracle_mean_pr2_laplacian_form(const QuantumState& s) {
  const RadialFunction f = radial_function(s);
  const double scale = length_scale(s);
  return integrate(f, [&](double r) {
    const double d2 = five_point_derivative(f.dR, r, scale, 0.0, f.upper);
    return -f.R(r) * (r * r * d2 + 2.0 * r * f.dR(r));
  });
}

double oracle_norm(const QuantumState& s) {
  const RadialFunction f = radial_function(s);
  return integrate(f, [&](double r) { const double v = f.R(r); return r * r * v * v; });
}

double five_point_derivative(const std::function<double(double)>& f, double x, double scale,
                             double lo, double hi) {
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 0.2) * scale;
  if (x - 2.0 * h >= lo && x + 2.0 * h <= hi) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
  }
  // One-sided fourth-order stencil, mirrored at the upper edge.
  const double s = x - 2.0 * h < lo ? h : -h;
  return (-25.0 * f(x) + 48.0 * f(x + s) - 36.0 * f(x + 2 * s) + 16.0 * f(x + 3 * s) -
          3.0 * f(x + 4 * s)) / (12.0 * s);
}

CommutatorResult commutator_check(const QuantumState& s, const std::vector<double>& radii) {
  const RadialFunction f = radial_function(s);
  const double scale = length_scale(s);
  const auto rR = [&](double r) { return r * f.R(r); };
  CommutatorResult out;
  for (double r : radii) {
    if (!(r > 0.0 && r < f.upper)) {
      throw std::domain_error("commutator_check: radius outside the domain interior");
    }
    const double R0 = f.R(r);
    if (std::abs(R0) < 1e-12) {
      ++out.samples_rejected;
      continue;
    }
    // p_r g = -i hbar (g' + g/r); divide the commutator by i hbar R.
    const double r_pr = r * five_point_derivative(f.R, r, scale, 0.0, f.upper) + R0;
    const double pr_r = five_point_derivative(rR, r, scale, 0.0, f.upper) + R0;
    const double ratio = -(r_pr - pr_r) / R0;
    out.max_deviation = std::max(out.max_deviation, std::abs(ratio - 1.0));
    ++out.samples_used;
  }
  return out;
}

double argmax(const std::function<double(double)>& f, const std::function<double(double)>& df,
              double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a;
  double hi = b;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-7 * (b - a)) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  double x = 0.5 * (lo + hi);
  // Near the peak f is flat to sqrt(eps); finish on the sign change of df.
  double left = std::max(a, x - 1e-5 * (b - a));
  double right = std::min(b, x + 1e-5 * (b - a));
  if (df(left) > 0.0 && df(right) < 0.0) {
    for (int i = 0; i < 200 && right - left > 0.0; ++i) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      (df(mid) > 0.0 ? left : right) = mid;
    }
    x = 0.5 * (left + right);
  }
  return x;
}

double most_probable_radius(const QuantumState& s) {
  std::function<double(double)> R;
  std::function<double(double)> dR;
  double upper;
  if (s.system == System::Hydrogen) {
    // In a0, so the answer compares directly with a0/Z.
    const hydrogenic::HydrogenicSpec spec(s.Z, s.n, s.l);
    R = [spec](double r) { return hydrogenic::radial_wavefunction(spec, r); };
    dR = [spec](double r) { return hydrogenic::radial_wavefunction_deriv(spec, r); };
    upper = 2.0 * s.n * s.n / s.Z;
  } else {
    const RadialFunction f = radial_function(s);
    R = f.R;
    dR = f.dR;
    upper = s.system == System::Isw ? 1.0 : 3.0 * std::sqrt(s.n + 1.5);
  }
  return argmax([&](double r) { const double v = R(r); return r * r * v * v; },
                [&](double r) { const double v = R(r); return 2.0 * r * v * (v + r * dR(r)); },
                0.0, upper);
}

SuiteConfig default_config() {
  SuiteConfig c;
  c.systems = {System::Hydrogen, System::Isw, System::Sho};
  return c;
}

std::vector<QuantumState> scan_states(const SuiteConfig& c) {
  std::vector<QuantumState> states;
  for (System sys : c.systems) {
    switch (sys) {
      case System::Hydrogen:
        for (int Z : c.hydrogen_Z) {
          for (int n = 1; n <= c.hydrogen_max_n; ++n) {
            for (int l = 0; l < n; ++l) states.push_back({sys, n, l, Z});
          }
        }
        break;
      case System::Isw:
        for (int n = 1; n <= c.isw_max_n; ++n) {
          for (int l = 0; l <= c.isw_max_l; ++l) states.push_back({sys, n, l, 1});
        }
        break;
      case System::Sho:
        for (int n = 0; n <= c.sho_max_n; ++n) {
          for (int l : sho::allowed_ell(n)) states.push_back({sys, n, l, 1});
        }
        break;
    }
  }
  return states;
}

namespace {

std::vector<VerificationReport> check_state(const QuantumState& s, double tol) {
  const RadialObservables closed = closed_form_observables(s);
  const RadialObservables oracle = oracle_observables(s);
  std::vector<VerificationReport> rows;
  rows.reserve(kObservableFields.size());
  for (std::size_t i = 0; i < kObservableFields.size(); ++i) {
    const double c = field(closed, i);
    const double o = field(oracle, i);
    const double abs_diff = std::abs(c - o);
    const double rel_diff = abs_diff == 0.0 ? 0.0 : abs_diff / std::abs(o);
    const bool near_zero = kObservableFields[i] == "mean_pr";
    const bool pass = near_zero ? abs_diff < 0.1 * tol : rel_diff < tol;
    rows.push_back({s, std::string(kObservableFields[i]), c, o, abs_diff, rel_diff, pass});
  }
  return rows;
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& c) {
  const std::vector<QuantumState> states = scan_states(c);
  std::vector<std::vector<VerificationReport>> per_state(states.size());
  if (c.parallel) {
    std::vector<std::future<std::vector<VerificationReport>>> jobs;
    jobs.reserve(states.size());
    for (const auto& s : states) {
      jobs.push_back(std::async(std::launch::async, check_state, s, c.tol));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) per_state[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) per_state[i] = check_state(states[i], c.tol);
  }
  std::vector<VerificationReport> out;
  for (auto& rows : per_state) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  s.checks = static_cast<int>(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i == 0 || !(reports[i].state == reports[i - 1].state)) ++s.states;
    if (!reports[i].pass) ++s.failures;
  }
  return s;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = format::csv_record(
      {"system", "n", "l", "Z", "field", "closed_form", "oracle", "abs_diff", "rel_diff", "pass"});
  for (const auto& r : reports) {
    out += format::csv_record({std::string(to_string(r.state.system)), std::to_string(r.state.n),
                               std::to_string(r.state.l), std::to_string(r.state.Z), r.field,
                               format::number(r.closed_form, 17), format::number(r.oracle, 17),
                               format::number(r.abs_diff, 3), format::number(r.rel_diff, 3),
                               r.pass ? "true" : "false"});
  }
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"system", to_string(r.state.system)},
                   {"n", r.state.n},
                   {"l", r.state.l},
                   {"Z", r.state.Z},
                   {"field", r.field},
                   {"closed_form", r.closed_form},
                   {"oracle", r.oracle},
                   {"abs_diff", r.abs_diff},
                   {"rel_diff", r.rel_diff},
                   {"pass", r.pass}});
  }
  const SuiteSummary s = summarize(reports);
  nlohmann::json doc = {{"states", s.states}, {"checks", s.checks}, {"failures", s.failures},
                        {"reports", arr}};
  return doc.dump(2) + "\n";
}

}  // namespace radunc::verify
