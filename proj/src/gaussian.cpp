#include "pssent/gaussian.hpp"

#include "pssent/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace pssent {

namespace {

constexpr double kPhysicalityTol = 1e-9;
constexpr double kSymmetryTol = 1e-10;

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

double det2(const Eigen::Matrix2d& m) { return m.determinant(); }

}  // namespace

CovarianceMatrix CovarianceMatrix::from_standard_form(const StandardFormCM& sf) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(1, 1) = sf.a1;
  m(2, 2) = m(3, 3) = sf.a2;
  m(0, 2) = m(2, 0) = sf.gamma_x;
  m(1, 3) = m(3, 1) = sf.gamma_p;
  return CovarianceMatrix(m);
}

ValidationReport validate(const CovarianceMatrix& cm) {
  const Eigen::Matrix4d& s = cm.matrix();
  ValidationReport report;
  report.symmetry_defect = (s - s.transpose()).cwiseAbs().maxCoeff();

  Eigen::Matrix4cd herm =
      s.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.physical = report.symmetry_defect <= kSymmetryTol &&
                    report.min_eigenvalue >= -kPhysicalityTol;
  return report;
}

StandardFormCM to_standard_form(const CovarianceMatrix& cm) {
  const ValidationReport rep = validate(cm);
  if (!rep.physical) {
    throw std::domain_error("to_standard_form: non-physical covariance matrix");
  }
  const Eigen::Matrix4d& s = cm.matrix();
  const double det_a1 = det2(s.block<2, 2>(0, 0));
  const double det_a2 = det2(s.block<2, 2>(2, 2));
  const double det_g = det2(s.block<2, 2>(0, 2));
  const double det_s = s.determinant();

  StandardFormCM sf;
  sf.a1 = std::sqrt(det_a1);
  sf.a2 = std::sqrt(det_a2);

  // gamma_x^2 and gamma_p^2 are the roots of t^2 - q t + det_g^2 with
  // q = (w^2 + det_g^2 - det_s)/w, w = a1 a2.
  const double w = sf.a1 * sf.a2;
  const double q = (w * w + det_g * det_g - det_s) / w;
  const double scale = std::max(1.0, q * q);
  double disc = q * q - 4.0 * det_g * det_g;
  if (disc < 0.0) {
    if (disc < -1e-10 * scale) {
      throw std::domain_error(
          "to_standard_form: no real solution (numerically non-physical)");
    }
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  double u = (q + root) / 2.0;  // gamma_x^2 (larger root)
  double v = (q - root) / 2.0;  // gamma_p^2
  const double clamp_tol = 1e-10 * std::max(1.0, std::abs(q));
  if (u < 0.0) {
    if (u < -clamp_tol) {
      throw std::domain_error("to_standard_form: negative gamma_x^2");
    }
    u = 0.0;
  }
  if (v < 0.0) {
    if (v < -clamp_tol) {
      throw std::domain_error("to_standard_form: negative gamma_p^2");
    }
    v = 0.0;
  }
  sf.gamma_x = std::sqrt(u);
  sf.gamma_p = (det_g < 0.0 ? -1.0 : 1.0) * std::sqrt(v);
  if (det_g == 0.0) sf.gamma_p = std::sqrt(v);
  return sf;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  const Eigen::Matrix4d& s = cm.matrix();
  const double delta = det2(s.block<2, 2>(0, 0)) + det2(s.block<2, 2>(2, 2)) +
                       2.0 * det2(s.block<2, 2>(0, 2));
  const double det_s = s.determinant();
  double disc = delta * delta - 4.0 * det_s;
  if (disc < 0.0) {
    if (disc < -1e-10 * std::max(1.0, delta * delta)) {
      throw std::domain_error("symplectic_spectrum: negative discriminant");
    }
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  auto clamp_nu = [](double nu2) {
    double nu = std::sqrt(std::max(nu2, 0.0));
    if (nu < 1.0 && nu >= 1.0 - 1e-9) nu = 1.0;
    return nu;
  };
  SymplecticSpectrum spec;
  spec.nu_minus = clamp_nu((delta - root) / 2.0);
  spec.nu_plus = clamp_nu((delta + root) / 2.0);
  return spec;
}

double gaussian_ef_symmetric(const StandardFormCM& sf) {
  const double a_scale = std::max(std::abs(sf.a1), std::abs(sf.a2));
  if (std::abs(sf.a1 - sf.a2) > 1e-8 * a_scale) {
    throw asymmetric_cm_error(
        "gaussian_ef_symmetric: a1 != a2 (no formula in scope for asymmetric "
        "states; see the CLI --symmetrize option)");
  }
  if (std::abs(sf.gamma_x + sf.gamma_p) >
      1e-8 * std::max(1.0, std::abs(sf.gamma_x))) {
    throw asymmetric_cm_error(
        "gaussian_ef_symmetric: gamma_p != -gamma_x (not a symmetric "
        "squeezed-thermal form)");
  }
  const double a = (sf.a1 + sf.a2) / 2.0;
  const double x = a - sf.gamma_x;
  if (x >= 1.0) return 0.0;  // separable
  if (!(x > 0.0)) {
    throw std::domain_error("gaussian_ef_symmetric: a - gamma_x <= 0");
  }
  return g_ef(x);
}

double gaussian_entropy(const CovarianceMatrix& cm) {
  const SymplecticSpectrum spec = symplectic_spectrum(cm);
  return entropy_kernel(spec.nu_minus) + entropy_kernel(spec.nu_plus);
}

}  // namespace pssent
