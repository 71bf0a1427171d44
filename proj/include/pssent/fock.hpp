#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pssent {

/// Signals operations on a k>0 state at z = 0: the conditional
/// preparation has zero success probability (N_k = 0).
class degenerate_state_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A pure k-photon-subtracted state, identified by the number of photons
/// subtracted per beam and the effective squeezing z = T*lambda = tanh r.
struct PssPure {
  int k;
  double z;

  PssPure(int k_, double z_);

  /// r = artanh(z).
  double squeezing() const;
};

/// Schmidt coefficients c_n for n = k .. k + size - 1, with a certified
/// upper bound on the discarded tail probability sum_{n > last} c_n^2.
struct SchmidtSpectrum {
  int k = 0;
  std::vector<double> coefficients;
  double truncation_bound = 0.0;

  double norm_sum() const;
};

/// Two-mode density matrix restricted to the photon-number-correlated
/// support span{|d,d>}: rho = sum_{d,d'} D(d,d') |d,d><d',d'|.
/// All states handled here live entirely on this support, so only the
/// dim x dim block D is stored.
class TruncatedBipartiteState {
 public:
  explicit TruncatedBipartiteState(Eigen::MatrixXd correlated_block);

  int dimension() const { return static_cast<int>(block_.rows()); }
  const Eigen::MatrixXd& correlated_block() const { return block_; }
  double trace() const;
  double purity() const;  // tr rho^2
  double min_eigenvalue() const { return min_eig_; }

 private:
  Eigen::MatrixXd block_;
  double min_eig_;
};

/// c_n = z^(n-k) C(n,k) sqrt[(1-z^2)^(2k+1) / 2F1(-k,-k;1;z^2)], n >= k.
/// Evaluated in log space so large n underflows to 0 instead of NaN.
double schmidt_coefficient(const PssPure& state, long long n);

/// Coefficients up to the n* at which the geometric tail majorant
/// certifies sum_{n > n*} c_n^2 <= tail_tol. The term ratio
/// c_{n+1}^2/c_n^2 = z^2 ((n+1)/(n+1-k))^2 decreases in n, so once it
/// drops below 1 the remaining tail is bounded by a geometric series.
SchmidtSpectrum schmidt_spectrum(const PssPure& state, double tail_tol,
                                 std::size_t hard_cap = 1'000'000);

/// N_k = k!^2 2F1(k+1,k+1;1;z^2) (1-z^2) z^(2k).
/// Throws degenerate_state_error when k > 0 and z = 0.
double normalization(const PssPure& state);

/// Entropy of entanglement -sum c_n^2 ln c_n^2 (nats) from the certified
/// Schmidt spectrum.
double exact_entanglement(const PssPure& state, double tail_tol = 1e-12);

/// Logarithmic negativity, Eq.-(2)-style closed form (nats):
///   E_N = -ln[(1-z)^(2k+2) 2F1(k+1,k+1;1;z^2)]
/// computed in the equivalent cancellation-free form
///   -ln(1-z) + (2k+1) ln(1+z) - ln 2F1(-k,-k;1;z^2).
double logneg_closed(const PssPure& state);

/// Normally ordered twin-beam moment
///   M_il^jm = <(a1+)^j a1^i (a2+)^m a2^l> on |psi0(r)>,
/// by exact coefficient extraction from the normally ordered
/// characteristic function exp{s c (x1 x2 + y1 y2) - s^2 (x1 y1 + x2 y2)},
/// s = sinh r, c = cosh r. Vanishes unless i - j = l - m.
double moment_normally_ordered(double r, int i, int j, int l, int m,
                               int order_cap = 12);

/// rho = sum_k p_k |psi_k><psi_k| on the correlated support, truncated to
/// indices d = n-k < dim. Requires p_k >= 0, sum p_k = 1 within 1e-12,
/// all states at a common z. Errors if the truncated trace deficit
/// exceeds 1e-6 or any k > 0 component sits at z = 0.
TruncatedBipartiteState build_mixed_density(
    std::span<const std::pair<double, PssPure>> components, int dim);

/// ln tr|rho^T2| (nats). The partial transpose maps the correlated
/// support block onto 1x1 and 2x2 blocks: |d,d><d',d'| -> |d,d'><d',d|
/// couples only the pair {(d,d'),(d',d)}, with eigenvalues +-|D(d,d')|,
/// so tr|rho^T2| = sum_{d,d'} |D(d,d')| exactly.
double logneg_mixed_oracle(const TruncatedBipartiteState& rho);

}  // namespace pssent
