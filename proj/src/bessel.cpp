#include "eqbif/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "eqbif/errors.hpp"

namespace eqbif {

namespace {

constexpr double kRescaleAt = 1e250;

void check_args(double nu, double x) {
  if (!(x >= 0.0)) throw DomainError("Bessel argument must be >= 0, got " + std::to_string(x));
  if (!is_supported_bessel_order(nu)) {
    throw DomainError("unsupported Bessel order " + std::to_string(nu));
  }
}

bool is_integer_order(double nu) { return nu == std::floor(nu); }

// Start index for the backward recurrence: comfortably above both the order
// and the argument so the seed's error has decayed by the time we reach them.
int miller_start(double top) {
  int m = static_cast<int>(top + 30.0 + 12.0 * std::cbrt(top + 1.0));
  return m + (m % 2);
}

double integer_order_recurrence(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const int start = miller_start(std::max<double>(n, x));
  const double two_over_x = 2.0 / x;
  double next = 0.0;  // j_{k+1}
  double cur = 1e-30; // j_k
  double result = 0.0;
  double norm = 0.0;  // j_0 + 2 (j_2 + j_4 + ...)
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * cur - next;  // j_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > kRescaleAt) {
      cur /= kRescaleAt;
      next /= kRescaleAt;
      result /= kRescaleAt;
      norm /= kRescaleAt;
    }
    const int idx = k - 1;
    if (idx == n) result = cur;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
  }
  norm += cur;
  return result / norm;
}

// Spherical Bessel j_n(x) for x > 0.
double spherical_bessel(int n, double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double j0 = s / x;
  if (n == 0) return j0;
  const double j1 = s / (x * x) - c / x;
  if (n == 1) return j1;
  if (x > n) {
    double a = j0;
    double b = j1;
    for (int k = 1; k < n; ++k) {
      const double t = (2.0 * k + 1.0) / x * b - a;
      a = b;
      b = t;
    }
    return b;
  }
  const int start = miller_start(std::max<double>(n, x));
  double next = 0.0;
  double cur = 1e-30;
  double at_n = 0.0;
  double at_1 = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k + 1.0) / x * cur - next;  // f_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > kRescaleAt) {
      cur /= kRescaleAt;
      next /= kRescaleAt;
      at_n /= kRescaleAt;
      at_1 /= kRescaleAt;
    }
    if (k - 1 == n) at_n = cur;
    if (k - 1 == 1) at_1 = cur;
  }
  // cur is f_0 now; pick the better-conditioned anchor.
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / cur : j1 / at_1;
  return at_n * scale;
}

double half_integer_order_recurrence(double nu, double x) {
  if (x == 0.0) return 0.0;
  const int n = static_cast<int>(std::lround(nu - 0.5));
  return std::sqrt(2.0 * x / std::numbers::pi) * spherical_bessel(n, x);
}

}  // namespace

bool is_supported_bessel_order(double nu) {
  if (!std::isfinite(nu) || nu < 0.0) return false;
  const double twice = 2.0 * nu;
  return twice == std::floor(twice) && twice < 1e6;
}

double bessel_j_series(double nu, double x) {
  check_args(nu, x);
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  using ld = long double;
  const ld half = static_cast<ld>(x) / 2.0L;
  const ld q = half * half;
  const ld ldnu = nu;
  ld term = std::exp(ldnu * std::log(half) - std::lgamma(ldnu + 1.0L));
  ld sum = term;
  const ld eps = std::numeric_limits<ld>::epsilon();
  for (int m = 1; m < 10000; ++m) {
    term *= -q / (static_cast<ld>(m) * (static_cast<ld>(m) + ldnu));
    sum += term;
    if (m > half && std::abs(term) <= eps * std::abs(sum)) break;
    if (term == 0.0L) break;
  }
  return static_cast<double>(sum);
}

double bessel_j_recurrence(double nu, double x) {
  check_args(nu, x);
  if (is_integer_order(nu)) return integer_order_recurrence(static_cast<int>(nu), x);
  return half_integer_order_recurrence(nu, x);
}

double bessel_j(double nu, double x) {
  check_args(nu, x);
  // The series terms shrink from the start once x^2/4 <= nu + 1; beyond that
  // they grow like e^x before cancelling, so only small x stays on the series.
  if (x <= 12.0 || 0.25 * x * x <= nu + 1.0) return bessel_j_series(nu, x);
  return bessel_j_recurrence(nu, x);
}

double bessel_j_prime(double nu, double x) {
  check_args(nu, x);
  if (nu == 0.0) return -bessel_j(1.0, x);
  if (nu >= 1.0) return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
  // nu == 1/2: J_{-1/2} is outside the supported orders.
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

}  // namespace eqbif
