#include "radunc/sho.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radunc/quadrature.hpp"
#include "radunc/specfun.hpp"

namespace radunc::sho {

namespace {

constexpr double kRelTol = 1e-13;

double laguerre(const ShoSpec& s, double x) {
  return specfun::assoc_laguerre(specfun::LaguerreIndex(s.radial(), s.superscript()), x);
}

double weight_constant(const ShoSpec& s) {
  return specfun::gamma_fn(s.radial() + 1.0) / specfun::gamma_fn((s.n + s.l) / 2 + 1.5);
}

double cutoff(const ShoSpec& s) { return quadrature::laguerre_cutoff(s.superscript(), s.radial()); }

// int_0^inf eta^power e^-eta L(eta)^2.
double eta_moment(const ShoSpec& s, double power) {
  auto f = [&s, power](double eta) {
    const double L = laguerre(s, eta);
    return std::pow(eta, power) * std::exp(-eta) * L * L;
  };
  return quadrature::integrate_semi_infinite(f, kRelTol, cutoff(s)).value;
}

}  // namespace

ShoSpec::ShoSpec(int principal, int azimuthal) : n(principal), l(azimuthal) {
  if (n < 0) throw InvalidStateError("sho: n must be >= 0, got " + std::to_string(n));
  if (l < 0 || l > n || (n - l) % 2 != 0) {
    throw InvalidStateError("sho: parity violation, l must be one of n, n-2, ... >= 0; got n=" +
                            std::to_string(n) + " l=" + std::to_string(l));
  }
}

double energy(const ShoSpec& s) { return s.n + 1.5; }

double normalization_constant(const ShoSpec& s, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("sho: alpha must be > 0");
  return std::sqrt(2.0 * std::pow(alpha, 1.5) * weight_constant(s));
}

double radial_wavefunction(const ShoSpec& s, double r, double alpha) {
  if (r < 0.0) throw std::domain_error("sho: r must be >= 0");
  const double x = std::sqrt(alpha) * r;
  return normalization_constant(s, alpha) * std::pow(x, s.l) * std::exp(-0.5 * x * x) *
         laguerre(s, x * x);
}

double radial_wavefunction_deriv(const ShoSpec& s, double r, double alpha) {
  if (r < 0.0) throw std::domain_error("sho: r must be >= 0");
  const double k = std::sqrt(alpha);
  const double x = k * r;
  const int q = s.radial();
  const double L = laguerre(s, x * x);
  const double dL =
      q == 0 ? 0.0
             : -specfun::assoc_laguerre(specfun::LaguerreIndex(q - 1, s.superscript() + 1.0), x * x);
  const double xl = std::pow(x, s.l);
  const double dxl = s.l == 0 ? 0.0 : s.l * std::pow(x, s.l - 1);
  const double g = std::exp(-0.5 * x * x);
  const double d_dx = g * (dxl * L - x * xl * L + xl * 2.0 * x * dL);
  return normalization_constant(s, alpha) * k * d_dx;
}

ShoIntegrals sho_integrals(const ShoSpec& s) {
  ShoIntegrals out{};
  out.C = weight_constant(s);
  out.I1 = eta_moment(s, s.l + 1.0);
  // eta = t^2 removes the eta^{-1/2} endpoint singularity at l = 0.
  auto f = [&s](double t) {
    const double L = laguerre(s, t * t);
    return 2.0 * std::pow(t, 2 * s.l) * std::exp(-t * t) * L * L;
  };
  out.I7 = quadrature::integrate_semi_infinite(f, kRelTol, std::sqrt(cutoff(s))).value;
  return out;
}

double laguerre_square_moment_exact(double a, int b, double s) {
  if (b < 0) throw std::invalid_argument("laguerre_square_moment_exact: b >= 0");
  // L^a_b(x) = sum_i c_i x^i, c_i = (-1)^i Gamma(a+b+1) / (Gamma(b-i+1) Gamma(a+i+1) i!).
  std::vector<double> c(b + 1);
  for (int i = 0; i <= b; ++i) {
    c[i] = (i % 2 == 0 ? 1.0 : -1.0) * specfun::gamma_fn(a + b + 1.0) /
           (specfun::gamma_fn(b - i + 1.0) * specfun::gamma_fn(a + i + 1.0) *
            specfun::gamma_fn(i + 1.0));
  }
  double sum = 0.0;
  for (int i = 0; i <= b; ++i) {
    for (int j = 0; j <= b; ++j) sum += c[i] * c[j] * specfun::gamma_fn(s + i + j + 1.0);
  }
  return sum;
}

double i1_closed_form(const ShoSpec& s) {
  if (s.radial() > 3) throw std::out_of_range("sho: closed-form I1 only for (n-l)/2 <= 3");
  return laguerre_square_moment_exact(s.superscript(), s.radial(), s.l + 1.0);
}

MomentumIntegrals momentum_integrals(const ShoSpec& s) {
  const int b = s.radial();
  const double a = s.superscript();
  MomentumIntegrals m{};
  m.I4 = (0.5 * s.l + b + 0.5) * eta_moment(s, s.l);
  m.I5 = -0.5 * eta_moment(s, s.l + 1.0);
  if (b == 0) {
    m.I6 = 0.0;
  } else {
    const specfun::LaguerreIndex lower(b - 1, a);
    auto f = [&s, lower](double eta) {
      return std::pow(eta, s.l) * std::exp(-eta) * laguerre(s, eta) *
             specfun::assoc_laguerre(lower, eta);
    };
    m.I6 = -(b + a) * quadrature::integrate_semi_infinite(f, kRelTol, cutoff(s)).value;
  }
  return m;
}

RadialObservables observables(const ShoSpec& s) {
  const ShoIntegrals i = sho_integrals(s);
  const double e = energy(s);
  RadialObservables o;
  o.mean_r = i.C * i.I1;
  o.mean_r2 = e;
  o.mean_inv_r = i.C * eta_moment(s, s.l);
  o.mean_inv_r2 = i.C * i.I7;
  o.mean_pr = 0.0;
  o.mean_pr2 = e - s.l * (s.l + 1.0) * i.C * i.I7;
  o.delta_r = std::sqrt(e - o.mean_r * o.mean_r);
  o.delta_pr = std::sqrt(o.mean_pr2);
  o.sigma_r = o.delta_r / o.mean_r;
  o.product = o.delta_r * o.delta_pr;
  return o;
}

std::vector<int> allowed_ell(int n) {
  if (n < 0) throw InvalidStateError("sho: n must be >= 0");
  std::vector<int> out;
  for (int l = n; l >= 0; l -= 2) out.push_back(l);
  return out;
}

DegeneracyParity degeneracy_parity(int n) {
  int d = 0;
  for (int l : allowed_ell(n)) d += 2 * l + 1;
  return {d, n % 2 == 0 ? 1 : -1};
}

int cartesian_degeneracy(int n) {
  if (n < 0) throw InvalidStateError("sho: n must be >= 0");
  int count = 0;
  for (int nx = 0; nx <= n; ++nx) {
    for (int ny = 0; nx + ny <= n; ++ny) ++count;
  }
  return count;
}

double most_probable_radius_ground(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("sho: alpha must be > 0");
  return 1.0 / std::sqrt(alpha);
}

}  // namespace radunc::sho
