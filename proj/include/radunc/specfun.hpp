#pragma once

// Special functions shared by the three radial systems: gamma, associated
// Laguerre polynomials, spherical Bessel functions with their zeros, and the
// generalized hypergeometric 2F3 series.

#include <stdexcept>
#include <vector>

namespace radunc::specfun {

/// Raised when a function is evaluated at one of its poles.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a root bracket does not straddle a sign change.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the certified 2F3 entry point when cancellation in the series
/// leaves fewer significant digits than requested.
class PrecisionLossError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Gamma function. Integer and half-integer arguments take exact product
/// paths; everything else goes through a Lanczos approximation.
double gamma_fn(double x);

/// 1/Gamma(x), zero at the poles.
double rgamma(double x);

/// (degree, superscript) of L^a_b. The superscript is an integer for the
/// hydrogenic states and a half-integer for the oscillator.
struct LaguerreIndex {
  int degree;
  double order;

  LaguerreIndex(int b, double a);
};

/// L^a_b(x) normalized so that
///   int_0^inf x^a e^-x L^a_b L^a_c dx = Gamma(a+b+1)/Gamma(b+1) delta_bc.
/// Evaluated with the three-term degree recurrence.
double assoc_laguerre(LaguerreIndex idx, double x);

/// dL^a_b/dx = (1/x) [b L^a_b(x) - (b+a) L^a_{b-1}(x)], x > 0.
double assoc_laguerre_deriv(LaguerreIndex idx, double x);

/// Largest order accepted by the spherical Bessel routines.
inline constexpr int kMaxBesselOrder = 25;
/// Largest zero index served by spherical_bessel_zero.
inline constexpr int kMaxBesselZeroIndex = 50;

/// j_l(z) for 0 <= l <= kMaxBesselOrder and z >= 0. Upward recurrence from
/// j_0, j_1 when z >= l, normalized downward recurrence otherwise.
double spherical_bessel_j(int l, double z);

/// j_0(z) .. j_lmax(z) in one pass.
std::vector<double> spherical_bessel_j_all(int lmax, double z);

/// j_{-1}(z) = cos(z)/z, the continuation used by the Bessel recurrences.
double spherical_bessel_j_minus1(double z);

/// dj_l/dz.
double spherical_bessel_j_deriv(int l, double z);

struct BesselZero {
  int order;
  int index;
  double value;
};

/// n-th positive zero of j_l. Zeros come from a table built once, seeded with
/// n*pi for l = 0 and extended order by order through interlacing.
BesselZero spherical_bessel_zero(int l, int n);

struct Hyp2F3Params {
  double a1;
  double a2;
  double b1;
  double b2;
  double b3;
  double z;
};

struct SeriesResult {
  double value = 0.0;
  /// Estimated number of correct decimal digits after cancellation.
  double significant_digits = 0.0;
  /// Number of series terms summed.
  int terms = 0;
  /// True when at least kCertifiedDigits digits survive.
  bool certified = false;
};

inline constexpr double kCertifiedDigits = 10.0;

/// 2F3(a1,a2; b1,b2,b3; z) by term-ratio series with compensated summation.
/// Denominator parameters must not be non-positive integers.
SeriesResult hyp2f3(const Hyp2F3Params& p);

/// 2F3 divided by Gamma(b1)Gamma(b2)Gamma(b3); defined for every b.
SeriesResult hyp2f3_regularized(const Hyp2F3Params& p);

/// Value of hyp2f3, or PrecisionLossError when the result is not certified.
double hyp2f3_certified(const Hyp2F3Params& p);

}  // namespace radunc::specfun
