#pragma once

// Isotropic three-dimensional harmonic oscillator. With alpha = m w / hbar = 1
// lengths are in sqrt(hbar/m w), momenta in sqrt(m hbar w), energies in hbar w.

#include <vector>

#include "radunc/observables.hpp"

namespace radunc::sho {

/// Validated (n, l) with n - l even and non-negative.
struct ShoSpec {
  int n;
  int l;

  ShoSpec(int principal, int azimuthal);

  /// Laguerre degree (n - l)/2.
  int radial() const { return (n - l) / 2; }
  /// Laguerre superscript l + 1/2.
  double superscript() const { return l + 0.5; }
};

/// n + 3/2.
double energy(const ShoSpec& spec);

/// sqrt(2 alpha^{3/2} q! / Gamma(p + 3/2)), q = (n-l)/2, p = (n+l)/2.
double normalization_constant(const ShoSpec& spec, double alpha = 1.0);

double radial_wavefunction(const ShoSpec& spec, double r, double alpha = 1.0);
double radial_wavefunction_deriv(const ShoSpec& spec, double r, double alpha = 1.0);

/// C = q!/Gamma(p+3/2), I1 = int eta^{l+1} e^-eta L^2, I7 = int eta^{l-1/2} e^-eta L^2
/// with L = L^{l+1/2}_q(eta).
struct ShoIntegrals {
  double C;
  double I1;
  double I7;
};

/// I1 and I7 by quadrature.
ShoIntegrals sho_integrals(const ShoSpec& spec);

/// int eta^s e^-eta [L^a_b]^2 by expanding L^a_b into monomials and summing
/// gamma moments. Exact up to rounding for small b; cancellation grows with b.
double laguerre_square_moment_exact(double a, int b, double s);

/// I1 from the gamma-moment expansion; offered for q <= 3 where the
/// expansion stays exact to rounding. Throws std::out_of_range beyond.
double i1_closed_form(const ShoSpec& spec);

/// The three pieces of <p_r> (up to -i hbar N^2): I4, I5, I6. They sum to 0.
struct MomentumIntegrals {
  double I4;
  double I5;
  double I6;
};
MomentumIntegrals momentum_integrals(const ShoSpec& spec);

RadialObservables observables(const ShoSpec& spec);

/// n, n-2, ..., down to 0 or 1.
std::vector<int> allowed_ell(int n);

struct DegeneracyParity {
  int degeneracy;  // sum of 2l+1 over allowed_ell(n)
  int parity;      // (-1)^n
};
DegeneracyParity degeneracy_parity(int n);

/// Number of Cartesian (nx, ny, nz) with nx + ny + nz = n.
int cartesian_degeneracy(int n);

/// 1/sqrt(alpha).
double most_probable_radius_ground(double alpha = 1.0);

}  // namespace radunc::sho
