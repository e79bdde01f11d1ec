#include "radunc/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace radunc::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_integer(double x) { return x == std::floor(x); }

bool is_half_integer(double x) { return is_integer(x - 0.5); }

// Lanczos approximation, g = 7, n = 9.
double gamma_lanczos(double x) {
  static constexpr std::array<double, 9> kCoeff = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_lanczos(1.0 - x));
  }
  x -= 1.0;
  double a = kCoeff[0];
  const double t = x + 7.5;
  for (std::size_t i = 1; i < kCoeff.size(); ++i) a += kCoeff[i] / (x + static_cast<double>(i));
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma_fn: pole at non-positive integer " + std::to_string(x));
  }
  if (x > 171.7) return std::numeric_limits<double>::infinity();

  if (is_integer(x)) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  if (is_half_integer(x)) {
    // Gamma(r + 1/2) = sqrt(pi) * prod_{k<r} (k + 1/2), extended downward for r < 0.
    double g = std::sqrt(std::numbers::pi);
    if (x > 0.0) {
      for (double k = 0.5; k < x; k += 1.0) g *= k;
    } else {
      for (double k = -0.5; k >= x; k -= 1.0) g /= k;
    }
    return g;
  }
  return gamma_lanczos(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

LaguerreIndex::LaguerreIndex(int b, double a) : degree(b), order(a) {
  if (b < 0) throw std::invalid_argument("LaguerreIndex: degree must be >= 0");
  if (!(a >= 0.0)) throw std::invalid_argument("LaguerreIndex: order must be >= 0");
}

double assoc_laguerre(LaguerreIndex idx, double x) {
  const double a = idx.order;
  if (idx.degree == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < idx.degree; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double assoc_laguerre_deriv(LaguerreIndex idx, double x) {
  if (!(x > 0.0)) throw std::domain_error("assoc_laguerre_deriv: requires x > 0");
  const int b = idx.degree;
  if (b == 0) return 0.0;
  const double lb = assoc_laguerre(idx, x);
  const double lbm1 = assoc_laguerre(LaguerreIndex(b - 1, idx.order), x);
  return (b * lb - (b + idx.order) * lbm1) / x;
}

namespace {

void check_order(int l) {
  if (l < 0 || l > kMaxBesselOrder) {
    throw std::domain_error("spherical Bessel order out of range: " + std::to_string(l));
  }
}

// Fills out[0..lmax] with j_0(z)..j_lmax(z).
void fill_bessel(int lmax, double z, double* out) {
  if (z == 0.0) {
    out[0] = 1.0;
    for (int l = 1; l <= lmax; ++l) out[l] = 0.0;
    return;
  }
  const double s = std::sin(z);
  const double c = std::cos(z);
  const double j0 = s / z;
  out[0] = j0;
  if (lmax == 0) return;

  if (z >= static_cast<double>(lmax)) {
    out[1] = (j0 - c) / z;
    for (int l = 1; l < lmax; ++l) out[l + 1] = (2.0 * l + 1.0) / z * out[l] - out[l - 1];
    return;
  }

  if (z < 1e-6) {
    // Two-term power series; the recurrences lose range at tiny z.
    double lead = 1.0;
    for (int l = 0; l <= lmax; ++l) {
      if (l > 0) lead *= z / (2.0 * l + 1.0);
      out[l] = lead * (1.0 - z * z / (2.0 * (2.0 * l + 3.0)));
    }
    return;
  }

  // Miller: recur downward from well above lmax, then normalize against
  // whichever of j_0, j_1 is larger in magnitude.
  const int start = lmax + 40 + static_cast<int>(z);
  std::array<double, 2 * kMaxBesselOrder + 48> f{};
  f[static_cast<std::size_t>(start) + 1] = 0.0;
  f[static_cast<std::size_t>(start)] = 1e-300;
  for (int l = start; l > 0; --l) {
    const auto i = static_cast<std::size_t>(l);
    f[i - 1] = (2.0 * l + 1.0) / z * f[i] - f[i + 1];
    if (std::abs(f[i - 1]) > 1e250) {
      for (std::size_t k = i - 1; k <= static_cast<std::size_t>(start) + 1; ++k) f[k] *= 1e-250;
    }
  }
  const double j1 = (j0 - c) / z;
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / f[0] : j1 / f[1];
  for (int l = 0; l <= lmax; ++l) out[l] = f[static_cast<std::size_t>(l)] * scale;
}

}  // namespace

double spherical_bessel_j(int l, double z) {
  check_order(l);
  if (z < 0.0) throw std::domain_error("spherical_bessel_j: requires z >= 0");
  std::array<double, kMaxBesselOrder + 1> buf{};
  fill_bessel(l, z, buf.data());
  return buf[static_cast<std::size_t>(l)];
}

std::vector<double> spherical_bessel_j_all(int lmax, double z) {
  check_order(lmax);
  if (z < 0.0) throw std::domain_error("spherical_bessel_j_all: requires z >= 0");
  std::vector<double> out(static_cast<std::size_t>(lmax) + 1);
  fill_bessel(lmax, z, out.data());
  return out;
}

double spherical_bessel_j_minus1(double z) {
  if (!(z > 0.0)) throw std::domain_error("spherical_bessel_j_minus1: requires z > 0");
  return std::cos(z) / z;
}

double spherical_bessel_j_deriv(int l, double z) {
  check_order(l);
  if (z < 0.0) throw std::domain_error("spherical_bessel_j_deriv: requires z >= 0");
  if (z == 0.0) return l == 1 ? 1.0 / 3.0 : 0.0;
  const int top = l == kMaxBesselOrder ? l : l + 1;
  std::array<double, kMaxBesselOrder + 1> j{};
  fill_bessel(top, z, j.data());
  if (l == 0) return -j[1];
  return j[static_cast<std::size_t>(l - 1)] - (l + 1.0) / z * j[static_cast<std::size_t>(l)];
}

namespace {

// Bisection down to a narrow bracket, then Illinois regula falsi.
double find_root(int l, double lo, double hi) {
  auto f = [l](double x) { return spherical_bessel_j(l, x); };
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("spherical_bessel_zero: bracket [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] has no sign change for l=" + std::to_string(l));
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  double best_f = std::min(std::abs(flo), std::abs(fhi));
  int side = 0;
  for (int it = 0; it < 200 && hi - lo > 4.0 * kEps * hi; ++it) {
    const double x = (lo * fhi - hi * flo) / (fhi - flo);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::abs(fx) < best_f) {
      best = x;
      best_f = std::abs(fx);
    }
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
  }
  return best;
}

struct ZeroTable {
  std::vector<std::vector<double>> zeros;  // zeros[l][n-1]

  ZeroTable() {
    const int base = kMaxBesselZeroIndex + kMaxBesselOrder;
    zeros.resize(kMaxBesselOrder + 1);
    auto& z0 = zeros[0];
    z0.resize(static_cast<std::size_t>(base));
    for (int n = 1; n <= base; ++n) z0[static_cast<std::size_t>(n - 1)] = n * std::numbers::pi;
    for (int l = 1; l <= kMaxBesselOrder; ++l) {
      const auto& below = zeros[static_cast<std::size_t>(l - 1)];
      auto& row = zeros[static_cast<std::size_t>(l)];
      const std::size_t count = below.size() - 1;
      row.resize(count);
      for (std::size_t i = 0; i < count; ++i) row[i] = find_root(l, below[i], below[i + 1]);
    }
  }
};

const ZeroTable& zero_table() {
  static const ZeroTable table;
  return table;
}

}  // namespace

BesselZero spherical_bessel_zero(int l, int n) {
  check_order(l);
  if (n < 1 || n > kMaxBesselZeroIndex) {
    throw std::domain_error("spherical_bessel_zero: index out of range: " + std::to_string(n));
  }
  if (l == 0) return {0, n, n * std::numbers::pi};
  return {l, n, zero_table().zeros[static_cast<std::size_t>(l)][static_cast<std::size_t>(n - 1)]};
}

namespace {

double pochhammer(double a, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

// Sums sum_{k >= k0} t_k starting from t_{k0} = first, with
// t_{k+1}/t_k = (a1+k)(a2+k) z / ((b1+k)(b2+k)(b3+k)(k+1)).
SeriesResult sum_2f3(const Hyp2F3Params& p, int k0, double first) {
  SeriesResult out;
  double sum = 0.0;
  double comp = 0.0;
  double weighted_abs = 0.0;
  double term = first;
  int k = k0;
  constexpr int kMaxTerms = 10000;
  for (int n = 0; n < kMaxTerms; ++n, ++k) {
    // Neumaier compensated summation.
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    weighted_abs += (n + 1.0) * std::abs(term);
    out.terms = n + 1;

    const double ratio = (p.a1 + k) * (p.a2 + k) * p.z /
                         ((p.b1 + k) * (p.b2 + k) * (p.b3 + k) * (k + 1.0));
    term *= ratio;
    if (term == 0.0) break;
    if (std::abs(ratio) < 0.5 && std::abs(term) <= kEps * std::abs(sum + comp) * 1e-3) break;
  }
  out.value = sum + comp;
  const double err = kEps * weighted_abs;
  if (out.value == 0.0) {
    out.significant_digits = err == 0.0 ? 16.0 : 0.0;
  } else if (err == 0.0) {
    out.significant_digits = 16.0;
  } else {
    out.significant_digits = std::min(16.0, -std::log10(err / std::abs(out.value)));
  }
  out.certified = out.significant_digits >= kCertifiedDigits;
  return out;
}

}  // namespace

SeriesResult hyp2f3(const Hyp2F3Params& p) {
  for (double b : {p.b1, p.b2, p.b3}) {
    if (is_nonpositive_integer(b)) {
      throw PoleError("hyp2f3: denominator parameter is a non-positive integer");
    }
  }
  return sum_2f3(p, 0, 1.0);
}

SeriesResult hyp2f3_regularized(const Hyp2F3Params& p) {
  // Terms with b_i + k a non-positive integer vanish; start past the last one.
  int k0 = 0;
  for (double b : {p.b1, p.b2, p.b3}) {
    if (is_nonpositive_integer(b)) k0 = std::max(k0, static_cast<int>(1.0 - b));
  }
  double first = pochhammer(p.a1, k0) * pochhammer(p.a2, k0) * rgamma(p.b1 + k0) *
                 rgamma(p.b2 + k0) * rgamma(p.b3 + k0) * std::pow(p.z, k0) / gamma_fn(k0 + 1.0);
  if (first == 0.0) {
    SeriesResult zero;
    zero.significant_digits = 16.0;
    zero.certified = true;
    return zero;
  }
  return sum_2f3(p, k0, first);
}

double hyp2f3_certified(const Hyp2F3Params& p) {
  const SeriesResult r = hyp2f3(p);
  if (!r.certified) {
    throw PrecisionLossError("hyp2f3: only " + std::to_string(r.significant_digits) +
                             " significant digits survive cancellation");
  }
  return r.value;
}

}  // namespace radunc::specfun
