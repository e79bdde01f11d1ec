#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

namespace radunc {

enum class System { Hydrogen, Isw, Sho };

std::string_view to_string(System s);
/// Parses "hydrogen", "isw" or "sho"; throws std::invalid_argument otherwise.
System parse_system(std::string_view name);

/// Thrown when quantum numbers violate a system's selection rules.
class InvalidStateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Radial means, spreads and the uncertainty product of one bound state, in
/// the natural units of its system (a0/Z and Z hbar/a0 for hydrogen, R and
/// hbar/R for the well, sqrt(hbar/m w) and sqrt(m hbar w) for the oscillator).
struct RadialObservables {
  double mean_r = 0.0;
  double mean_r2 = 0.0;
  double mean_inv_r = 0.0;
  double mean_inv_r2 = 0.0;
  double delta_r = 0.0;
  double mean_pr = 0.0;
  double mean_pr2 = 0.0;
  double delta_pr = 0.0;
  double sigma_r = 0.0;
  double product = 0.0;
};

inline constexpr std::array<std::string_view, 10> kObservableFields = {
    "mean_r", "mean_r2", "mean_inv_r", "mean_inv_r2", "delta_r",
    "mean_pr", "mean_pr2", "delta_pr", "sigma_r", "product"};

/// Field access by position in kObservableFields.
double field(const RadialObservables& o, std::size_t index);
double& field(RadialObservables& o, std::size_t index);

/// Unit label of a field for the given system, as printed in table headers.
std::string_view unit_label(System s, std::string_view field_name);

/// Fills delta_r, delta_pr, sigma_r and product from the four moments.
void finish_observables(RadialObservables& o);

}  // namespace radunc
