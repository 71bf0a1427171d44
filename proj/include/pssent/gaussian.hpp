#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace pssent {

/// A symmetric two-mode CM was required (a1 = a2, gamma_p = -gamma_x);
/// the bounds are proven only for that class.
class asymmetric_cm_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Standard-form invariants of a two-mode CM: diagonal blocks
/// diag(a_i, a_i), off-diagonal block diag(gamma_x, gamma_p), ordered
/// gamma_x >= |gamma_p| >= 0.
struct StandardFormCM {
  double a1 = 1.0;
  double a2 = 1.0;
  double gamma_x = 0.0;
  double gamma_p = 0.0;
};

struct SymplecticSpectrum {
  double nu_minus = 1.0;
  double nu_plus = 1.0;
};

struct ValidationReport {
  double symmetry_defect = 0.0;  // max |sigma - sigma^T|
  double min_eigenvalue = 0.0;   // of the Hermitian matrix sigma + i Omega
  bool physical = false;         // min_eigenvalue >= -1e-9 and symmetric
};

/// 4x4 real covariance matrix over quadratures (q1, p1, q2, p2), with
/// q = a + a+, p = -i(a - a+), vacuum = identity.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(const Eigen::Matrix4d& entries) : m_(entries) {}

  static CovarianceMatrix from_standard_form(const StandardFormCM& sf);

  const Eigen::Matrix4d& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Eigen::Matrix4d m_;
};

/// Symmetry defect and minimum eigenvalue of sigma + i Omega; physical
/// iff symmetric within 1e-10 and min eigenvalue >= -1e-9.
ValidationReport validate(const CovarianceMatrix& cm);

/// Local-symplectic invariants (a1, a2, gamma_x, gamma_p): a_i =
/// sqrt(det alpha_i); gamma_x^2, gamma_p^2 solve
///   {gamma_x gamma_p = det gamma,
///    (a1 a2 - gamma_x^2)(a1 a2 - gamma_p^2) = det sigma},
/// with sign(gamma_p) = sign(det gamma). Throws std::domain_error on a
/// non-physical input or when the quadratic has no real solution.
StandardFormCM to_standard_form(const CovarianceMatrix& cm);

/// (nu_minus, nu_plus) from Delta = det a1 + det a2 + 2 det gamma,
/// nu^2 = [Delta -+ sqrt(Delta^2 - 4 det sigma)]/2. Discriminants above
/// -1e-10 (relative) are clamped to zero; nu in [1 - 1e-9, 1) is clamped
/// to 1.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

/// Entanglement of formation (nats) of the symmetric Gaussian state:
/// g_ef(a - gamma_x) with a = (a1+a2)/2, or 0 when a - gamma_x >= 1.
/// Throws asymmetric_cm_error unless a1 = a2 and gamma_p = -gamma_x
/// within 1e-8 (relative).
double gaussian_ef_symmetric(const StandardFormCM& sf);

/// Von Neumann entropy (nats) of the Gaussian state with this CM:
/// h(nu_minus) + h(nu_plus).
double gaussian_entropy(const CovarianceMatrix& cm);

}  // namespace pssent
