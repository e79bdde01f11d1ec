#pragma once

// Adaptive Gauss-Kronrod quadrature over finite and semi-infinite intervals.
// This is the independent oracle every closed form is checked against, so it
// never looks at anything but the integrand.

#include <functional>
#include <optional>
#include <stdexcept>

namespace radunc::quadrature {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

class NonConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr double kAbsFloor = 1e-14;
inline constexpr long kDefaultMaxEvaluations = 1'000'000;

/// One 15-point Kronrod panel with its embedded 7-point Gauss rule.
struct PanelEstimate {
  double kronrod;
  double gauss;
};
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b);

/// Globally adaptive bisection of the worst panel until the summed
/// |K15 - G7| estimate drops below rel_tol*|I| + kAbsFloor.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  double rel_tol = kDefaultRelTol,
                                  long max_evaluations = kDefaultMaxEvaluations);

/// Integral over [0, inf) of an integrand decaying at least like
/// e^{-x/2} times a polynomial. Without a cutoff the domain is walked in
/// doubling segments until two consecutive segments fall below tolerance.
/// With a cutoff the integral stops there and the tail is bounded by
/// 2|f(cutoff)| assuming e^{-x/2} decay past it.
QuadratureResult integrate_semi_infinite(const Integrand& f, double rel_tol = kDefaultRelTol,
                                         std::optional<double> cutoff = std::nullopt,
                                         long max_evaluations = kDefaultMaxEvaluations);

/// Truncation point for Laguerre-weighted integrands x^a e^-x [L^a_b]^2.
double laguerre_cutoff(double a, int b);

}  // namespace radunc::quadrature
