#include "pssent/fock.hpp"

#include "pssent/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace pssent {

namespace {

void require_not_degenerate(const PssPure& s, const char* op) {
  if (s.k > 0 && s.z == 0.0) {
    throw degenerate_state_error(std::string(op) +
                                 ": k > 0 at z = 0 has zero preparation "
                                 "probability (N_k = 0)");
  }
}

}  // namespace

PssPure::PssPure(int k_, double z_) : k(k_), z(z_) {
  if (k < 0) throw std::domain_error("PssPure: k must be >= 0");
  if (!(z >= 0.0) || z >= 1.0) {
    throw std::domain_error("PssPure: z must lie in [0, 1)");
  }
}

double PssPure::squeezing() const { return std::atanh(z); }

double SchmidtSpectrum::norm_sum() const {
  double s = 0.0;
  for (double c : coefficients) s += c * c;
  return s;
}

double schmidt_coefficient(const PssPure& state, long long n) {
  if (n < state.k) {
    throw std::domain_error("schmidt_coefficient: n < k");
  }
  if (state.z == 0.0) return n == state.k ? 1.0 : 0.0;
  const double x = state.z * state.z;
  const double log_prefactor =
      0.5 * ((2.0 * state.k + 1.0) * std::log1p(-x) -
             std::log(hyp2f1_int(-state.k, -state.k, 1, x)));
  const double log_c = (n - state.k) * std::log(state.z) +
                       log_binomial(n, state.k) + log_prefactor;
  return std::exp(log_c);
}

SchmidtSpectrum schmidt_spectrum(const PssPure& state, double tail_tol,
                                 std::size_t hard_cap) {
  if (!(tail_tol > 0.0) || tail_tol >= 1.0) {
    throw std::domain_error("schmidt_spectrum: tail_tol must be in (0, 1)");
  }
  require_not_degenerate(state, "schmidt_spectrum");

  SchmidtSpectrum out;
  out.k = state.k;
  if (state.z == 0.0) {  // vacuum twin beam, single coefficient
    out.coefficients = {1.0};
    out.truncation_bound = 0.0;
    return out;
  }

  const double zz = state.z * state.z;
  for (long long n = state.k;; ++n) {
    if (out.coefficients.size() >= hard_cap) {
      throw std::runtime_error("schmidt_spectrum: truncation cap exceeded");
    }
    const double c = schmidt_coefficient(state, n);
    out.coefficients.push_back(c);
    // Ratio c_{m+1}^2/c_m^2 = z^2 ((m+1)/(m+1-k))^2 decreases in m, so
    // rho_n majorises every later ratio and bounds the tail geometrically.
    const double growth = (n + 1.0) / (n + 1.0 - state.k);
    const double rho = zz * growth * growth;
    if (rho < 1.0) {
      const double tail = c * c * rho / (1.0 - rho);
      if (tail <= tail_tol) {
        out.truncation_bound = tail;
        break;
      }
    }
  }
  return out;
}

double normalization(const PssPure& state) {
  require_not_degenerate(state, "normalization");
  const double x = state.z * state.z;
  double kfact = 1.0;
  for (int i = 2; i <= state.k; ++i) kfact *= i;
  return kfact * kfact * hyp2f1_int(state.k + 1, state.k + 1, 1, x) *
         (1.0 - x) * std::pow(x, state.k);
}

double exact_entanglement(const PssPure& state, double tail_tol) {
  const SchmidtSpectrum spec = schmidt_spectrum(state, tail_tol);
  double e = 0.0;
  for (double c : spec.coefficients) {
    const double p = c * c;
    if (p > 0.0) e -= p * std::log(p);
  }
  return e;
}

double logneg_closed(const PssPure& state) {
  const double x = state.z * state.z;
  return -std::log1p(-state.z) + (2.0 * state.k + 1.0) * std::log1p(state.z) -
         std::log(hyp2f1_int(-state.k, -state.k, 1, x));
}

double moment_normally_ordered(double r, int i, int j, int l, int m,
                               int order_cap) {
  if (i < 0 || j < 0 || l < 0 || m < 0) {
    throw std::domain_error("moment_normally_ordered: negative power");
  }
  if (i + j + l + m > order_cap) {
    throw std::domain_error("moment_normally_ordered: order cap exceeded");
  }
  const double s = std::sinh(r);
  const double c = std::cosh(r);
  const double A = s * c;   // x1 x2 and y1 y2 weight
  const double B = -s * s;  // x1 y1 and x2 y2 weight

  // chi = exp(A(x1 x2 + y1 y2) + B(x1 y1 + x2 y2)); the monomial
  // x1^i y1^j x2^l y2^m picks up (t1,t2,t3,t4) with t1+t3 = i, t2+t3 = j,
  // t1+t4 = l, t2+t4 = m.
  double total = 0.0;
  for (int t3 = 0; t3 <= std::min(i, j); ++t3) {
    const int t1 = i - t3;
    const int t2 = j - t3;
    const int t4 = l - t1;
    if (t4 < 0 || m - t2 != t4) continue;
    double term = std::pow(A, t1 + t2) * std::pow(B, t3 + t4);
    for (int v : {t1, t2, t3, t4}) {
      for (int q = 2; q <= v; ++q) term /= q;
    }
    total += term;
  }
  double factorials = 1.0;
  for (int v : {i, j, l, m}) {
    for (int q = 2; q <= v; ++q) factorials *= q;
  }
  const double sign = ((j + m) % 2 == 0) ? 1.0 : -1.0;
  return sign * factorials * total;
}

TruncatedBipartiteState::TruncatedBipartiteState(Eigen::MatrixXd block)
    : block_(std::move(block)) {
  if (block_.rows() != block_.cols() || block_.rows() < 1) {
    throw std::invalid_argument("TruncatedBipartiteState: block not square");
  }
  const double defect = (block_ - block_.transpose()).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("TruncatedBipartiteState: block not symmetric");
  }
  if (std::abs(trace() - 1.0) > 1e-6) {
    throw std::invalid_argument("TruncatedBipartiteState: trace deficit");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      block_, Eigen::EigenvaluesOnly);
  min_eig_ = solver.eigenvalues().minCoeff();
  if (min_eig_ < -1e-10) {
    throw std::invalid_argument(
        "TruncatedBipartiteState: not positive semidefinite");
  }
}

double TruncatedBipartiteState::trace() const { return block_.trace(); }

double TruncatedBipartiteState::purity() const {
  return block_.squaredNorm();  // sum D_{dd'}^2 = tr rho^2 on this support
}

TruncatedBipartiteState build_mixed_density(
    std::span<const std::pair<double, PssPure>> components, int dim) {
  if (components.empty()) {
    throw std::invalid_argument("build_mixed_density: empty mixture");
  }
  if (dim < 1) throw std::invalid_argument("build_mixed_density: dim < 1");

  const double z = components.front().second.z;
  double weight_sum = 0.0;
  for (const auto& [p, state] : components) {
    if (p < 0.0) throw std::invalid_argument("build_mixed_density: p_k < 0");
    if (state.z != z) {
      throw std::invalid_argument(
          "build_mixed_density: components must share z");
    }
    weight_sum += p;
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("build_mixed_density: weights must sum to 1");
  }
  for (const auto& [p, state] : components) {
    if (p > 0.0) require_not_degenerate(state, "build_mixed_density");
  }

  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [p, state] : components) {
    if (p == 0.0) continue;
    Eigen::VectorXd c(dim);
    for (int d = 0; d < dim; ++d) {
      c(d) = schmidt_coefficient(state, state.k + d);
    }
    block.noalias() += p * (c * c.transpose());
  }
  if (std::abs(block.trace() - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "build_mixed_density: truncation too small (trace deficit > 1e-6)");
  }
  return TruncatedBipartiteState(std::move(block));
}

double logneg_mixed_oracle(const TruncatedBipartiteState& rho) {
  if (rho.min_eigenvalue() < -1e-10) {
    throw std::domain_error("logneg_mixed_oracle: non-physical state");
  }
  // Partial transpose on mode 2 sends |d,d><d',d'| to |d,d'><d',d|. Each
  // off-diagonal pair {(d,d'),(d',d)} carries the 2x2 block
  // [[0, D(d,d')], [D(d,d'), 0]] with eigenvalues +-D(d,d'); diagonal
  // entries D(d,d) stay put. Hence tr|rho^T2| = sum_{d,d'} |D(d,d')|.
  return std::log(rho.correlated_block().cwiseAbs().sum());
}

}  // namespace pssent
