#pragma once

#include "ricepath/complex.hpp"

#include <functional>
#include <vector>

namespace ricepath {

using ComplexFn = std::function<Complex(Complex)>;

struct CircleOptions {
  int initial_points = 32;
  int max_points = 1 << 15;
  double tol = 1e-10;
};

/// Coefficients c_k, k = k_min..k_max, of the Laurent expansion of g around
/// center, from the trapezoid rule on |s - center| = radius with the number
/// of nodes doubled until the scaled coefficients c_k r^k stabilize.
/// Throws ConvergenceError if doubling stalls.
std::vector<Complex> circle_coefficients(const ComplexFn& g, Complex center, double radius, int k_min,
                                         int k_max, const CircleOptions& opt = {});

}  // namespace ricepath
