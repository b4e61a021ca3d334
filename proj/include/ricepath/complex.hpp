#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace ricepath {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

/// exp of a log-domain value; the real part carries the magnitude, the
/// imaginary part the phase. Values below the double range flush to 0.
inline Complex exp_log(Complex log_value) {
  if (log_value.real() < -745.0) return {0.0, 0.0};
  return std::exp(log_value);
}

/// log|z|, with -inf for z == 0.
inline double log_abs(Complex z) { return std::log(std::abs(z)); }

inline bool is_nonpositive_integer(Complex z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(r));
}

/// Product z (z-1) ... (z-k+1).
inline Complex falling_factorial(Complex z, int k) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < k; ++i) out *= z - static_cast<double>(i);
  return out;
}

/// Product (z+1) (z+2) ... (z+k).
inline Complex rising_from_one(Complex z, int k) {
  Complex out{1.0, 0.0};
  for (int i = 1; i <= k; ++i) out *= z + static_cast<double>(i);
  return out;
}

/// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if constexpr (std::is_same_v<T, double>) {
      comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    } else {
      comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace ricepath
