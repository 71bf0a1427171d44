#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pssent {

namespace detail {

using bigint = boost::multiprecision::cpp_int;

/// Exact binomial with the conventions the S_l sums need:
/// C(n,0) = 1 for any integer n; C(n,l) = 0 when l > 0 and n < l.
bigint binom_exact(long long n, long long l);

/// Exact series coefficient f_m^(k), see f_coeff below.
bigint f_coeff_exact(int k, int m);

/// Exact S_l^(k) = sum_{m=1}^{2k+2} C(2k+l-m+1, l) f_m^(k).
bigint s_sum_exact(int k, int l);

}  // namespace detail

/// Coefficient of z^m in the power series of F^(k)(z):
///   f_m = [(1-(-1)^m)(2k+m+1/2)+1] C((-1+(-1)^m)/4 + k + m/2, k)^2
///         - C(2k+m+1, 2k+1).
/// The binomial's top argument is an integer for every parity of m
/// (k+(m-1)/2 odd, k+m/2 even), which the integer evaluation enforces by
/// construction. f_1 = 2k+2; f_2 = -(k+1)(k+2).
double f_coeff(int k, int m);

/// F^(k)(z) = 2F1(k+1,k+1;1;z^2) + 4z(k+1) 2F1(k+2,k+1;1;z^2)
///            - (1-z)^(-2k-2), for z in (0,1).
/// Computed with the common factor (1-z)^(-2k-2) extracted so the three
/// O((1-z)^(-2k-2)) terms cancel in an O(1) bracket.
double big_f(int k, double z);

/// Truncated series F~^(k)(z) = sum_{m=1}^{2k+2} f_m z^m.
double f_tilde(int k, double z);

/// S_l^(k), exact-integer internally, converted to double.
double s_sum(int k, int l);

/// Test hook: adds `offset` to f_m^(k) at one (k, m) in every check that
/// consumes the coefficients.
struct FaultInjection {
  int k = 0;
  int m = 1;
  long long offset = 0;
};

struct Violation {
  std::string check;
  int k = -1;
  long long m = -1;
  long long l = -1;
  double z = -1.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckSummary {
  std::string name;
  long long points = 0;
  long long violations = 0;
  double min_margin = 0.0;  // smallest lhs - rhs over the check's points
};

struct VerificationReport {
  std::vector<CheckSummary> checks;
  std::vector<Violation> violations;
  long long points_checked = 0;

  bool passed() const { return violations.empty(); }
};

/// Per-k verification on a z grid: (i) the bound inequality
/// E_up >= E_N for any k; for k >= 2 additionally (ii) F >= F~,
/// (iii) F~ >= S_0 z^(2k+2) > 0, (iv) the coefficient sign pattern
/// f_{2j-1} >= 0 >= f_{2j} for m <= 2k+2 and tail domination
/// f_{2j-1} >= -f_{2j} for k+1 < j <= k+1+tail_extra.
/// Violations are collected, not thrown.
VerificationReport verify_theorem1(
    int k, std::span<const double> z_grid, int tail_extra = 30,
    const std::optional<FaultInjection>& corrupt_f = std::nullopt);

struct VerifySpec {
  int k_max = 10;
  int l_max = 50;
  int grid_points = 99;  // z = i/(grid_points+1), i = 1..grid_points
  int tail_extra = 30;
  std::optional<FaultInjection> corrupt_f;
};

/// Full battery: verify_theorem1 for k = 0..k_max plus S_l^(k) > 0 for
/// k = 2..k_max, l = 0..l_max (exact integer signs).
VerificationReport run_verification(const VerifySpec& spec);

}  // namespace pssent
