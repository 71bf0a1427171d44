#include "pssent/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pssent {

namespace {

// x ln x with the x -> 0+ limit.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Terminating series: at least one of a, b is a nonpositive integer.
double hyp_terminating(int a, int b, int c, double x) {
  int jmax;
  if (a <= 0 && b <= 0) {
    jmax = std::min(-a, -b);
  } else {
    jmax = (a <= 0) ? -a : -b;
  }
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < jmax; ++j) {
    term *= (static_cast<double>(a) + j) * (static_cast<double>(b) + j) /
            ((static_cast<double>(c) + j) * (j + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace

double hyp2f1_int(int a, int b, int c, double x) {
  if (!(x >= 0.0) || x >= 1.0) {
    throw std::domain_error("hyp2f1_int: requires 0 <= x < 1");
  }
  if (c < 1) {
    throw std::domain_error("hyp2f1_int: requires integer c >= 1");
  }
  if (a <= 0 || b <= 0) {
    return hyp_terminating(a, b, c, x);
  }
  if (c - a <= 0 || c - b <= 0) {
    const double prefactor = std::pow(1.0 - x, static_cast<double>(c - a - b));
    return prefactor * hyp_terminating(c - a, c - b, c, x);
  }
  // a,b > 0 and c > min(a,b): neither the direct series nor the Euler
  // transform terminates. No call site in this library reaches here.
  throw std::domain_error("hyp2f1_int: non-terminating parameter class");
}

double binomial(long long n, long long k) {
  if (k < 0) throw std::domain_error("binomial: k < 0");
  if (k == 0) return 1.0;
  if (n < k) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (long long i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

double log_binomial(long long n, long long k) {
  if (k < 0 || n < k) throw std::domain_error("log_binomial: need n >= k >= 0");
  k = std::min(k, n - k);
  double result = 0.0;
  for (long long i = 1; i <= k; ++i) {
    result += std::log(static_cast<double>(n - k + i)) -
              std::log(static_cast<double>(i));
  }
  return result;
}

double g_ef(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("g_ef: requires x > 0");
  }
  const double plus = (1.0 + x) * (1.0 + x) / (4.0 * x);
  const double minus = (1.0 - x) * (1.0 - x) / (4.0 * x);
  return xlogx(plus) - xlogx(minus);
}

double entropy_kernel(double nu) {
  if (nu < 1.0 - 1e-12) {
    throw std::domain_error("entropy_kernel: symplectic eigenvalue < 1");
  }
  if (nu <= 1.0) return 0.0;
  return xlogx((nu + 1.0) / 2.0) - xlogx((nu - 1.0) / 2.0);
}

}  // namespace pssent
