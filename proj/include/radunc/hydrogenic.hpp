#pragma once

// One-electron atoms (H, He+, Li2+, Be3+). Lengths are in Bohr radii a0 for
// wavefunctions and in a0/Z for observables, momenta in Z hbar / a0.

#include <span>
#include <string_view>

#include "radunc/observables.hpp"

namespace radunc::hydrogenic {

/// Validated (Z, n, l) with Z >= 1, n >= 1 and 0 <= l <= n-1.
struct HydrogenicSpec {
  int Z;
  int n;
  int l;

  HydrogenicSpec(int atomic_number, int principal, int azimuthal);
};

struct ReducedMassEntry {
  std::string_view label;
  int Z;
  double mu_kg;
};

/// Reduced masses of the four one-electron systems.
std::span<const ReducedMassEntry> reduced_mass_table();
/// Throws std::out_of_range for Z outside 1..4.
const ReducedMassEntry& reduced_mass_entry(int Z);

/// sqrt[(2Z/n)^3 (n-l-1)! / (2n (n+l)!)] in a0^{-3/2}.
double normalization_constant(const HydrogenicSpec& spec);

/// R_nl(r) with r in a0.
double radial_wavefunction(const HydrogenicSpec& spec, double r);
/// dR_nl/dr, analytic.
double radial_wavefunction_deriv(const HydrogenicSpec& spec, double r);

/// Closed-form observables in a0/Z, Z hbar/a0 units.
RadialObservables observables(const HydrogenicSpec& spec);

struct Energy {
  double joules;
  double electron_volts;
  double bohr_radius_m;  // hbar^2 / (mu k e^2) for this mu
};

class MassMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// E_n = -Z^2 hbar^2 / (2 mu n^2 a0^2). Throws MassMismatchError when the
/// entry belongs to a different nucleus.
Energy energy(const HydrogenicSpec& spec, const ReducedMassEntry& mu);

/// Most probable radius of the 1s state, a0/Z, returned in a0.
double most_probable_radius_ground(int Z);

/// Number of (l, m) states in shell n: n^2.
int degeneracy(int n);
/// Including both spin projections: 2 n^2.
int degeneracy_with_spin(int n);

}  // namespace radunc::hydrogenic
