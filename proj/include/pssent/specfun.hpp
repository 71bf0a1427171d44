#pragma once

namespace pssent {

/// Gauss hypergeometric function 2F1(a,b;c;x) for integer parameters,
/// c >= 1, 0 <= x < 1.
///
/// Nonpositive a or b terminates the series directly. Positive a,b are
/// evaluated through the Euler transformation
///   2F1(a,b;c;x) = (1-x)^(c-a-b) 2F1(c-a,c-b;c;x),
/// which terminates whenever c <= min(a,b); this keeps the evaluation a
/// finite polynomial and avoids the slowly converging direct series as
/// x -> 1. Parameter combinations where neither route terminates are
/// rejected (none occur in this library).
double hyp2f1_int(int a, int b, int c, double x);

/// Binomial coefficient C(n,k) as a double, by iterative product.
/// C(n,0) = 1 for any integer n; 0 when 0 <= n < k or n < 0 < k.
double binomial(long long n, long long k);

/// ln C(n,k) for n >= k >= 0; avoids overflow for large n.
double log_binomial(long long n, long long k);

/// Entanglement-of-formation kernel for symmetric Gaussian states:
///   g(x) = ((1+x)^2/4x) ln((1+x)^2/4x) - ((1-x)^2/4x) ln((1-x)^2/4x),
/// in nats, with the (1-x)^2 term -> 0 at x = 1. Symmetric under
/// x <-> 1/x, zero at x = 1, diverges like -ln x as x -> 0+.
double g_ef(double x);

/// Von Neumann entropy contribution of one symplectic eigenvalue:
///   h(nu) = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2), h(1) = 0.
/// Values in [1 - 1e-12, 1] are clamped to 1; smaller values are a
/// domain error.
double entropy_kernel(double nu);

}  // namespace pssent
