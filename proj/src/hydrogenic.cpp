#include "radunc/hydrogenic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "radunc/constants.hpp"
#include "radunc/specfun.hpp"

namespace radunc::hydrogenic {

HydrogenicSpec::HydrogenicSpec(int atomic_number, int principal, int azimuthal)
    : Z(atomic_number), n(principal), l(azimuthal) {
  if (Z < 1) throw InvalidStateError("hydrogenic: Z must be >= 1, got " + std::to_string(Z));
  if (n < 1) throw InvalidStateError("hydrogenic: n must be >= 1, got " + std::to_string(n));
  if (l < 0 || l > n - 1) {
    throw InvalidStateError("hydrogenic: l must satisfy 0 <= l <= n-1, got n=" +
                            std::to_string(n) + " l=" + std::to_string(l));
  }
}

namespace {

constexpr std::array<ReducedMassEntry, 4> kReducedMasses = {{
    {"H", 1, 9.104878e-31},
    {"He+", 2, 9.108597e-31},
    {"Li2+", 3, 9.109010e-31},
    {"Be3+", 4, 9.109272e-31},
}};

// rho = 2 Z r / n, the Laguerre argument.
double scaled_radius(const HydrogenicSpec& s, double r) { return 2.0 * s.Z * r / s.n; }

}  // namespace

std::span<const ReducedMassEntry> reduced_mass_table() { return kReducedMasses; }

const ReducedMassEntry& reduced_mass_entry(int Z) {
  for (const auto& e : kReducedMasses) {
    if (e.Z == Z) return e;
  }
  throw std::out_of_range("no reduced-mass entry for Z=" + std::to_string(Z));
}

double normalization_constant(const HydrogenicSpec& s) {
  const double k = 2.0 * s.Z / s.n;
  const double ratio = specfun::gamma_fn(s.n - s.l) / specfun::gamma_fn(s.n + s.l + 1.0);
  return std::sqrt(k * k * k * ratio / (2.0 * s.n));
}

double radial_wavefunction(const HydrogenicSpec& s, double r) {
  if (r < 0.0) throw std::domain_error("hydrogenic: r must be >= 0");
  const double rho = scaled_radius(s, r);
  const specfun::LaguerreIndex idx(s.n - s.l - 1, 2.0 * s.l + 1.0);
  return normalization_constant(s) * std::exp(-0.5 * rho) * std::pow(rho, s.l) *
         specfun::assoc_laguerre(idx, rho);
}

double radial_wavefunction_deriv(const HydrogenicSpec& s, double r) {
  if (r < 0.0) throw std::domain_error("hydrogenic: r must be >= 0");
  const double rho = scaled_radius(s, r);
  const int b = s.n - s.l - 1;
  const double a = 2.0 * s.l + 1.0;
  const double lag = specfun::assoc_laguerre(specfun::LaguerreIndex(b, a), rho);
  // d/dx L^a_b = -L^{a+1}_{b-1}; regular at x = 0, unlike the 1/x form.
  const double dlag = b == 0 ? 0.0 : -specfun::assoc_laguerre(specfun::LaguerreIndex(b - 1, a + 1.0), rho);
  const double power = std::pow(rho, s.l);
  const double dpower = s.l == 0 ? 0.0 : s.l * std::pow(rho, s.l - 1);
  const double d_drho = std::exp(-0.5 * rho) * (dpower * lag - 0.5 * power * lag + power * dlag);
  return normalization_constant(s) * (2.0 * s.Z / s.n) * d_drho;
}

RadialObservables observables(const HydrogenicSpec& s) {
  const double n = s.n;
  const double ll = static_cast<double>(s.l) * (s.l + 1);
  const double spread = std::sqrt(n * n * (n * n + 2.0) - ll * ll);
  const double momentum_factor = 1.0 - 2.0 * ll / (n * (2.0 * s.l + 1.0));

  RadialObservables o;
  o.mean_r = 0.5 * (3.0 * n * n - ll);
  o.mean_r2 = n * n / 2.0 * (5.0 * n * n - 3.0 * ll + 1.0);
  o.mean_inv_r = 1.0 / (n * n);
  o.mean_inv_r2 = 2.0 / ((2.0 * s.l + 1.0) * n * n * n);
  o.delta_r = 0.5 * spread;
  o.mean_pr = 0.0;
  o.mean_pr2 = momentum_factor / (n * n);
  o.delta_pr = std::sqrt(momentum_factor) / n;
  o.sigma_r = spread / (3.0 * n * n - ll);
  o.product = spread * std::sqrt(momentum_factor) / (2.0 * n);
  return o;
}

Energy energy(const HydrogenicSpec& s, const ReducedMassEntry& mu) {
  if (mu.Z != s.Z) {
    throw MassMismatchError("hydrogenic: reduced mass for " + std::string(mu.label) +
                            " (Z=" + std::to_string(mu.Z) + ") used with Z=" +
                            std::to_string(s.Z));
  }
  using namespace constants;
  const double e2 = kCoulomb * kElementaryCharge * kElementaryCharge;
  const double a0 = kHbar * kHbar / (mu.mu_kg * e2);
  const double joules =
      -static_cast<double>(s.Z) * s.Z * kHbar * kHbar / (2.0 * mu.mu_kg * s.n * s.n * a0 * a0);
  return {joules, joules / kJoulePerEv, a0};
}

double most_probable_radius_ground(int Z) {
  if (Z < 1) throw InvalidStateError("hydrogenic: Z must be >= 1");
  return 1.0 / Z;
}

int degeneracy(int n) {
  if (n < 1) throw InvalidStateError("hydrogenic: n must be >= 1");
  int d = 0;
  for (int l = 0; l < n; ++l) d += 2 * l + 1;
  return d;
}

int degeneracy_with_spin(int n) { return 2 * degeneracy(n); }

}  // namespace radunc::hydrogenic
