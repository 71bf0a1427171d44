#pragma once

#include "pssent/gaussian.hpp"

#include <optional>
#include <vector>

namespace pssent {

/// A statistical mixture of pure photon-subtracted states at common z.
struct MixedPss {
  double z = 0.0;
  std::vector<std::pair<int, double>> weights;  // (k, p_k)

  MixedPss(double z_, std::vector<std::pair<int, double>> weights_);

  /// Binomial conditioning model: p_k = C(n,k) p^k (1-p)^(n-k), k = 0..n.
  static MixedPss binomial(int n, double p, double z);

  double k_bar() const;
};

enum class BoundsSource { closed_form, measured_cm, mixture };

/// Lower/upper entanglement bounds (nats) with error figures and, for
/// pure states, the closed-form log-negativity and non-Gaussianity.
struct BoundsReport {
  double e_low = 0.0;
  double e_up = 0.0;
  double delta = 0.0;      // (e_up - e_low)/2
  double delta_rel = 0.0;  // (e_up - e_low)/(e_up + e_low), 0 at 0/0
  std::optional<double> upsilon;
  std::optional<double> logneg;
  BoundsSource source = BoundsSource::closed_form;
};

/// Diagonal CM element a^(k) of the pure PSS, in the z-native form
///   a^(k) = 1 + 2(k+1)^2 (z^2/(1-z^2)) 2F1(-k,-k;2;z^2)/2F1(-k,-k;1;z^2),
/// algebraically identical to the (cosh r)^(2+4k)[...] closed form but
/// free of the huge cancelling prefactors near z -> 1.
double cm_diagonal_element(int k, double z);

/// Cross CM element gamma^(k) = 2z(k+1) 2F1(k+1,k+2;1;z^2)/2F1(k+1,k+1;1;z^2),
/// evaluated as 2z(k+1) 2F1(-k,-k-1;1;z^2) / [(1-z^2) 2F1(-k,-k;1;z^2)].
double cm_cross_element(int k, double z);

/// The PSS covariance matrix: symmetric standard form with
/// a1 = a2 = a^(k), gamma_x = -gamma_p = gamma^(k).
CovarianceMatrix pss_cm(int k, double z);

/// E_low = g_ef(a^(k) - gamma^(k)), the Gaussian-extremality lower bound.
double lower_bound(int k, double z);

/// E_up = ln(1 + 2 gamma^(k)), the second-moment upper bound.
double upper_bound(int k, double z);

struct ErrorBand {
  double delta = 0.0;
  double delta_rel = 0.0;
};

ErrorBand error_band(int k, double z);

/// Asymptotic (r -> infinity) absolute error: 1/2 [ln(4+8k) - 1].
double delta_max(int k);

/// Entropic non-Gaussianity of the pure PSS: the Von Neumann entropy of
/// the Gaussian state with CM pss_cm(k, z). Zero for k = 0 (twin beam).
double upsilon(int k, double z);

/// Asymptotic non-Gaussianity figure, as printed:
///   1/2 [ln(k/2) + sqrt(2k+1) ln((k + sqrt(2k+1) + 1)/k)], k >= 1,
/// equal to entropy_kernel(sqrt(2k+1)). By convention 0 at k = 0. Note
/// upsilon(k, z) -> 2 * upsilon_max(k) as z -> 1 (two degenerate
/// symplectic eigenvalues).
double upsilon_max(int k);

/// CM of the mixture: sigma_kbar = sum_k p_k sigma_k (linear in the CMs
/// since first moments vanish). Still symmetric standard form.
CovarianceMatrix mixed_cm(const MixedPss& mix);

/// Assembled report for a pure state (k, z).
BoundsReport pure_bounds(int k, double z);

/// e_low = EF of the Gaussian state with the mixed CM, e_up =
/// ln(1 + 2 gamma^(kbar)); both bound E_F(rho_kbar).
BoundsReport mixed_bounds(const MixedPss& mix);

/// Bounds evaluated on measured second moments already reduced to
/// standard form (source = measured_cm).
BoundsReport bounds_from_standard_form(const StandardFormCM& sf);

}  // namespace pssent
