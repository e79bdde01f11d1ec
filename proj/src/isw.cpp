#include "radunc/isw.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "radunc/quadrature.hpp"

namespace radunc::isw {

namespace {

constexpr double kMomentRelTol = 1e-13;

double j_next_abs(const IswSpec& s, double z) {
  return std::abs(specfun::spherical_bessel_j(s.l + 1, z));
}

double moment_quadrature(int l, int m, double z) {
  auto f = [l, m](double rho) {
    const double j = specfun::spherical_bessel_j(l, rho);
    return std::pow(rho, m) * j * j;
  };
  return quadrature::integrate_finite(f, 0.0, z, kMomentRelTol).value;
}

}  // namespace

IswSpec::IswSpec(int zero_index, int azimuthal) : n(zero_index), l(azimuthal) {
  if (n < 1 || n > specfun::kMaxBesselZeroIndex) {
    throw InvalidStateError("isw: n must be in 1.." +
                            std::to_string(specfun::kMaxBesselZeroIndex) + ", got " +
                            std::to_string(n));
  }
  if (l < 0 || l > kMaxOrder) {
    throw InvalidStateError("isw: l must be in 0.." + std::to_string(kMaxOrder) + ", got " +
                            std::to_string(l));
  }
}

specfun::BesselZero zero(const IswSpec& s) { return specfun::spherical_bessel_zero(s.l, s.n); }

double energy(const IswSpec& s) {
  const double z = zero(s).value;
  return z * z;
}

double normalization_constant(const IswSpec& s) { return 1.0 / j_next_abs(s, zero(s).value); }

double radial_wavefunction(const IswSpec& s, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("isw: r must lie in [0, R]");
  const double z = zero(s).value;
  return std::numbers::sqrt2 * normalization_constant(s) * specfun::spherical_bessel_j(s.l, z * r);
}

double radial_wavefunction_deriv(const IswSpec& s, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("isw: r must lie in [0, R]");
  const double z = zero(s).value;
  return std::numbers::sqrt2 * normalization_constant(s) * z *
         specfun::spherical_bessel_j_deriv(s.l, z * r);
}

ShapeFactors shape_factors(const IswSpec& s) {
  const double z = zero(s).value;
  const double jn = j_next_abs(s, z);
  const double w = 2.0 / (jn * jn);
  ShapeFactors f{};
  f.A = w * moment_quadrature(s.l, 3, z) / std::pow(z, 4);
  f.B = w * moment_quadrature(s.l, 4, z) / std::pow(z, 5);
  f.D = s.l == 0 ? 0.0 : w * s.l * (s.l + 1) * moment_quadrature(s.l, 0, z) / std::pow(z, 3);
  return f;
}

specfun::SeriesResult bessel_square_moment_series(int l, int m, double z) {
  if (l < 0 || m < 0) throw std::invalid_argument("bessel_square_moment_series: l, m >= 0");
  // j_l^2 = (pi/2x) J_{l+1/2}^2 expanded termwise and integrated.
  const double c = 0.5 * (m + 2 * l + 1);
  specfun::SeriesResult r = specfun::hyp2f3({l + 1.0, c, 2.0 * l + 2.0, l + 1.5, c + 1.0, -z * z});
  const double g = specfun::gamma_fn(l + 1.5);
  const double lead = std::numbers::pi / 2.0 * std::pow(2.0, -2 * l - 1) *
                      std::pow(z, m + 2 * l + 1) / (g * g * (m + 2 * l + 1));
  r.value *= lead;
  return r;
}

std::optional<ShapeFactors> shape_factors_series(const IswSpec& s) {
  const double z = zero(s).value;
  const double jn = j_next_abs(s, z);
  const double w = 2.0 / (jn * jn);
  const auto a = bessel_square_moment_series(s.l, 3, z);
  const auto b = bessel_square_moment_series(s.l, 4, z);
  const auto d = bessel_square_moment_series(s.l, 0, z);
  if (!a.certified || !b.certified || !d.certified) return std::nullopt;
  return ShapeFactors{w * a.value / std::pow(z, 4), w * b.value / std::pow(z, 5),
                      s.l == 0 ? 0.0 : w * s.l * (s.l + 1) * d.value / std::pow(z, 3)};
}

double bessel_square_integral(int l, double x) {
  const double jm = l == 0 ? specfun::spherical_bessel_j_minus1(x)
                           : specfun::spherical_bessel_j(l - 1, x);
  const double j = specfun::spherical_bessel_j(l, x);
  const double jp = specfun::spherical_bessel_j(l + 1, x);
  return 0.5 * x * x * x * (j * j - jm * jp);
}

RadialObservables observables(const IswSpec& s) {
  const double z = zero(s).value;
  const ShapeFactors f = shape_factors(s);
  const double jn = j_next_abs(s, z);

  RadialObservables o;
  o.mean_r = f.A;
  o.mean_r2 = f.B;
  o.mean_inv_r2 = 2.0 / (z * jn * jn) * moment_quadrature(s.l, 0, z);
  o.mean_inv_r = 2.0 / (z * z * jn * jn) * moment_quadrature(s.l, 1, z);
  o.mean_pr = 0.0;
  o.mean_pr2 = z * z * (1.0 - f.D);
  o.delta_r = std::sqrt(f.B - f.A * f.A);
  o.delta_pr = z * std::sqrt(1.0 - f.D);
  o.sigma_r = o.delta_r / o.mean_r;
  o.product = z * o.delta_r * std::sqrt(1.0 - f.D);
  return o;
}

double most_probable_radius_ground() { return 0.5; }

}  // namespace radunc::isw
