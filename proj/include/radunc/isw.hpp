#pragma once

// Particle in an infinite spherical well. The well radius is the length unit
// (R = 1); momenta are in hbar/R and energies in hbar^2/(2 m R^2).

#include <optional>

#include "radunc/observables.hpp"
#include "radunc/specfun.hpp"

namespace radunc::isw {

inline constexpr int kMaxOrder = 10;

/// Validated (n, l): n-th zero of j_l, 1 <= n <= 50, 0 <= l <= kMaxOrder.
struct IswSpec {
  int n;
  int l;

  IswSpec(int zero_index, int azimuthal);
};

specfun::BesselZero zero(const IswSpec& spec);

/// z_nl^2.
double energy(const IswSpec& spec);

/// C_nl = 1/|j_{l+1}(z_nl)|. The full constant is sqrt(2) C_nl for R = 1.
double normalization_constant(const IswSpec& spec);

/// R_nl(r) = sqrt(2) C_nl j_l(z_nl r). Throws std::domain_error off [0, 1].
double radial_wavefunction(const IswSpec& spec, double r);
double radial_wavefunction_deriv(const IswSpec& spec, double r);

struct ShapeFactors {
  double A;  // <r>
  double B;  // <r^2>
  double D;  // l(l+1) <1/r^2> / z^2
};

/// A, B, D from quadrature of rho^k j_l(rho)^2 over [0, z].
ShapeFactors shape_factors(const IswSpec& spec);

/// int_0^z rho^m j_l(rho)^2 drho as a 2F3 series. Carries its own digit
/// estimate; uncertified for large z.
specfun::SeriesResult bessel_square_moment_series(int l, int m, double z);

/// Same factors from the series; empty unless all three certify.
std::optional<ShapeFactors> shape_factors_series(const IswSpec& spec);

/// int_0^x t^2 j_l(t)^2 dt = x^3/2 (j_l^2 - j_{l-1} j_{l+1}).
double bessel_square_integral(int l, double x);

RadialObservables observables(const IswSpec& spec);

/// R/2, in units of R.
double most_probable_radius_ground();

}  // namespace radunc::isw
