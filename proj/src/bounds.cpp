#include "pssent/bounds.hpp"

#include "pssent/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace pssent {

namespace {

void require_kz(int k, double z, const char* op) {
  if (k < 0) throw std::domain_error(std::string(op) + ": k must be >= 0");
  if (!(z >= 0.0) || z >= 1.0) {
    throw std::domain_error(std::string(op) + ": z must lie in [0, 1)");
  }
}

}  // namespace

MixedPss::MixedPss(double z_, std::vector<std::pair<int, double>> weights_)
    : z(z_), weights(std::move(weights_)) {
  require_kz(0, z, "MixedPss");
  if (weights.empty()) throw std::invalid_argument("MixedPss: empty mixture");
  double sum = 0.0;
  for (const auto& [k, p] : weights) {
    if (k < 0) throw std::invalid_argument("MixedPss: k < 0");
    if (p < 0.0) throw std::invalid_argument("MixedPss: p_k < 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("MixedPss: weights must sum to 1");
  }
}

MixedPss MixedPss::binomial(int n, double p, double z) {
  if (n < 1) throw std::invalid_argument("MixedPss::binomial: n must be >= 1");
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("MixedPss::binomial: p must lie in (0, 1]");
  }
  std::vector<std::pair<int, double>> weights;
  weights.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    weights.emplace_back(k, binomial(n, k) * std::pow(p, k) *
                                std::pow(1.0 - p, n - k));
  }
  return MixedPss(z, std::move(weights));
}

double MixedPss::k_bar() const {
  double kb = 0.0;
  for (const auto& [k, p] : weights) kb += p * k;
  return kb;
}

double cm_diagonal_element(int k, double z) {
  require_kz(k, z, "cm_diagonal_element");
  if (z == 0.0) return 1.0;
  const double x = z * z;
  const double kp1 = k + 1.0;
  return 1.0 + 2.0 * kp1 * kp1 * (x / (1.0 - x)) *
                   hyp2f1_int(-k, -k, 2, x) / hyp2f1_int(-k, -k, 1, x);
}

double cm_cross_element(int k, double z) {
  require_kz(k, z, "cm_cross_element");
  if (z == 0.0) return 0.0;
  const double x = z * z;
  return 2.0 * z * (k + 1.0) * hyp2f1_int(-k, -k - 1, 1, x) /
         ((1.0 - x) * hyp2f1_int(-k, -k, 1, x));
}

CovarianceMatrix pss_cm(int k, double z) {
  const double a = cm_diagonal_element(k, z);
  const double g = cm_cross_element(k, z);
  return CovarianceMatrix::from_standard_form({a, a, g, -g});
}

double lower_bound(int k, double z) {
  const double a = cm_diagonal_element(k, z);
  const double g = cm_cross_element(k, z);
  return gaussian_ef_symmetric({a, a, g, -g});
}

double upper_bound(int k, double z) {
  return std::log1p(2.0 * cm_cross_element(k, z));
}

ErrorBand error_band(int k, double z) {
  const double lo = lower_bound(k, z);
  const double up = upper_bound(k, z);
  ErrorBand band;
  band.delta = (up - lo) / 2.0;
  const double denom = up + lo;
  band.delta_rel = denom > 0.0 ? (up - lo) / denom : 0.0;
  return band;
}

double delta_max(int k) {
  if (k < 0) throw std::domain_error("delta_max: k must be >= 0");
  return 0.5 * (std::log(4.0 + 8.0 * k) - 1.0);
}

double upsilon(int k, double z) {
  require_kz(k, z, "upsilon");
  return gaussian_entropy(pss_cm(k, z));
}

double upsilon_max(int k) {
  if (k < 0) throw std::domain_error("upsilon_max: k must be >= 0");
  if (k == 0) return 0.0;  // twin beam is Gaussian
  const double s = std::sqrt(2.0 * k + 1.0);
  return 0.5 * (std::log(k / 2.0) + s * std::log((k + s + 1.0) / k));
}

CovarianceMatrix mixed_cm(const MixedPss& mix) {
  double a = 0.0;
  double g = 0.0;
  for (const auto& [k, p] : mix.weights) {
    a += p * cm_diagonal_element(k, mix.z);
    g += p * cm_cross_element(k, mix.z);
  }
  return CovarianceMatrix::from_standard_form({a, a, g, -g});
}

BoundsReport pure_bounds(int k, double z) {
  BoundsReport report;
  report.e_low = lower_bound(k, z);
  report.e_up = upper_bound(k, z);
  const ErrorBand band = error_band(k, z);
  report.delta = band.delta;
  report.delta_rel = band.delta_rel;
  report.upsilon = upsilon(k, z);
  report.logneg = logneg_closed(PssPure(k, z));
  report.source = BoundsSource::closed_form;
  return report;
}

BoundsReport mixed_bounds(const MixedPss& mix) {
  const StandardFormCM sf = to_standard_form(mixed_cm(mix));
  BoundsReport report = bounds_from_standard_form(sf);
  report.source = BoundsSource::mixture;
  return report;
}

BoundsReport bounds_from_standard_form(const StandardFormCM& sf) {
  BoundsReport report;
  report.e_low = gaussian_ef_symmetric(sf);
  report.e_up = std::log1p(2.0 * sf.gamma_x);
  report.delta = (report.e_up - report.e_low) / 2.0;
  const double denom = report.e_up + report.e_low;
  report.delta_rel = denom > 0.0 ? (report.e_up - report.e_low) / denom : 0.0;
  report.source = BoundsSource::measured_cm;
  return report;
}

}  // namespace pssent
