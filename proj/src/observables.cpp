#include "radunc/observables.hpp"

#include <cmath>
#include <string>

namespace radunc {

std::string_view to_string(System s) {
  switch (s) {
    case System::Hydrogen: return "hydrogen";
    case System::Isw: return "isw";
    case System::Sho: return "sho";
  }
  return "unknown";
}

System parse_system(std::string_view name) {
  if (name == "hydrogen") return System::Hydrogen;
  if (name == "isw") return System::Isw;
  if (name == "sho") return System::Sho;
  throw std::invalid_argument("unknown system: " + std::string(name));
}

double field(const RadialObservables& o, std::size_t index) {
  return field(const_cast<RadialObservables&>(o), index);
}

double& field(RadialObservables& o, std::size_t index) {
  switch (index) {
    case 0: return o.mean_r;
    case 1: return o.mean_r2;
    case 2: return o.mean_inv_r;
    case 3: return o.mean_inv_r2;
    case 4: return o.delta_r;
    case 5: return o.mean_pr;
    case 6: return o.mean_pr2;
    case 7: return o.delta_pr;
    case 8: return o.sigma_r;
    case 9: return o.product;
    default: throw std::out_of_range("observable field index " + std::to_string(index));
  }
}

std::string_view unit_label(System s, std::string_view f) {
  if (f == "sigma_r") return "1";
  if (f == "product") return "hbar";
  switch (s) {
    case System::Hydrogen:
      if (f == "mean_r" || f == "delta_r") return "a0/Z";
      if (f == "mean_r2") return "(a0/Z)^2";
      if (f == "mean_inv_r") return "Z/a0";
      if (f == "mean_inv_r2") return "(Z/a0)^2";
      if (f == "mean_pr" || f == "delta_pr") return "Z*hbar/a0";
      if (f == "mean_pr2") return "(Z*hbar/a0)^2";
      break;
    case System::Isw:
      if (f == "mean_r" || f == "delta_r") return "R";
      if (f == "mean_r2") return "R^2";
      if (f == "mean_inv_r") return "1/R";
      if (f == "mean_inv_r2") return "1/R^2";
      if (f == "mean_pr" || f == "delta_pr") return "hbar/R";
      if (f == "mean_pr2") return "(hbar/R)^2";
      break;
    case System::Sho:
      if (f == "mean_r" || f == "delta_r") return "sqrt(hbar/m*w)";
      if (f == "mean_r2") return "hbar/m*w";
      if (f == "mean_inv_r") return "sqrt(m*w/hbar)";
      if (f == "mean_inv_r2") return "m*w/hbar";
      if (f == "mean_pr" || f == "delta_pr") return "sqrt(m*hbar*w)";
      if (f == "mean_pr2") return "m*hbar*w";
      break;
  }
  throw std::invalid_argument("unknown observable field: " + std::string(f));
}

void finish_observables(RadialObservables& o) {
  o.delta_r = std::sqrt(std::max(0.0, o.mean_r2 - o.mean_r * o.mean_r));
  o.delta_pr = std::sqrt(std::max(0.0, o.mean_pr2 - o.mean_pr * o.mean_pr));
  o.sigma_r = o.delta_r / o.mean_r;
  o.product = o.delta_r * o.delta_pr;
}

}  // namespace radunc
