#pragma once

// SI constants, CODATA 2018 recommended values.

namespace radunc::constants {

inline constexpr double kHbar = 1.054571817e-34;             // J s (exact via h)
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C (exact)
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kCoulomb = 1.0 / (4.0 * kPi * kVacuumPermittivity);  // N m^2 / C^2
inline constexpr double kElectronMass = 9.1093837015e-31;    // kg
inline constexpr double kJoulePerEv = kElementaryCharge;

}  // namespace radunc::constants
