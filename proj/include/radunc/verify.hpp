#pragma once

// Oracle harness. Every observable is recomputed from the wavefunction alone
// by quadrature and compared with the closed forms of the system modules.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radunc/observables.hpp"

namespace radunc::verify {

/// (system, n, l) plus Z for hydrogen. Validated on use by the system module.
struct QuantumState {
  System system;
  int n;
  int l;
  int Z = 1;

  bool operator==(const QuantumState&) const = default;
};

std::string describe(const QuantumState& s);

/// Radial wavefunction and its derivative on [0, upper] in the system's
/// observable units (lengths a0/Z, R or sqrt(hbar/m w)).
struct RadialFunction {
  std::function<double(double)> R;
  std::function<double(double)> dR;
  double upper;      // integration limit
  bool finite_edge;  // true when upper is a hard wall (the well)
};

RadialFunction radial_function(const QuantumState& s);

/// Closed-form observables from the system module.
RadialObservables closed_form_observables(const QuantumState& s);

/// Observables from quadrature of the wavefunction only. <p_r> and <p_r^2>
/// use the analytic derivative: <p_r> = int r^2 R (R' + R/r) (times -i hbar),
/// <p_r^2> = int (r R' + R)^2.
RadialObservables oracle_observables(const QuantumState& s);

/// <p_r^2> = -int r^2 R (R'' + 2R'/r) with R'' by finite differences of R'.
double oracle_mean_pr2_laplacian_form(const QuantumState& s);

/// Normalization integral int r^2 R^2.
double oracle_norm(const QuantumState& s);

/// 5-point central difference with h = eps^{1/5} * scale; switches to a
/// one-sided 5-point stencil within 2h of lo or hi.
double five_point_derivative(const std::function<double(double)>& f, double x, double scale,
                             double lo, double hi);

struct CommutatorResult {
  double max_deviation = 0.0;
  int samples_used = 0;
  int samples_rejected = 0;  // |R| below 1e-12
};

/// max |((r p_r - p_r r) R)(r) / (i hbar R(r)) - 1| over the radii, with
/// every derivative taken by finite differences.
CommutatorResult commutator_check(const QuantumState& s, const std::vector<double>& radii);

/// Maximizer of a unimodal f on [a, b] by golden-section search, polished
/// by bisection on df when df changes sign around the estimate.
double argmax(const std::function<double(double)>& f, const std::function<double(double)>& df,
              double a, double b);

/// argmax of P(r) = r^2 R(r)^2 for the state.
double most_probable_radius(const QuantumState& s);

struct VerificationReport {
  QuantumState state;
  std::string field;
  double closed_form;
  double oracle;
  double abs_diff;
  double rel_diff;
  bool pass;
};

struct SuiteConfig {
  std::vector<System> systems;
  int hydrogen_max_n = 6;
  std::vector<int> hydrogen_Z = {1};
  int isw_max_n = 5;
  int isw_max_l = 4;
  int sho_max_n = 6;
  /// A check passes when rel_diff < tol; <p_r> passes when abs_diff < tol/10.
  double tol = 1e-8;
  bool parallel = true;
};

/// Default scan: all three systems.
SuiteConfig default_config();

/// States visited by run_suite, in report order.
std::vector<QuantumState> scan_states(const SuiteConfig& config);

/// One report per (state, field). Order is deterministic.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

struct SuiteSummary {
  int states = 0;
  int checks = 0;
  int failures = 0;
};
SuiteSummary summarize(const std::vector<VerificationReport>& reports);

std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace radunc::verify
