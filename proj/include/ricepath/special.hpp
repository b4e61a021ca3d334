#pragma once

#include "ricepath/complex.hpp"

#include <vector>

namespace ricepath {

/// Principal branch of log Gamma(s): Stirling series after an upward shift
/// of the argument. Throws PoleError at nonpositive integers.
Complex log_gamma(Complex s);

Complex gamma(Complex s);

/// 1/Gamma(s), entire; exactly 0 at the poles of Gamma.
Complex rgamma(Complex s);

/// Polygamma function psi^(order)(s), order >= 0 (order 0 is the digamma).
Complex polygamma(int order, Complex s);

/// Gamma^(k)(s) for k = 0..max_order.
std::vector<Complex> gamma_derivatives(Complex s, int max_order);

/// (1/Gamma)^(k)(s) for k = 0..max_order; defined everywhere.
std::vector<Complex> rgamma_derivatives(Complex s, int max_order);

Complex log_beta(Complex a, Complex b);

/// Bernoulli number B_{2k}, k = 0..20.
double bernoulli_even(int k);

/// Riemann zeta at an integer k >= 2 (used for special values only).
double zeta_int(int k);

}  // namespace ricepath
