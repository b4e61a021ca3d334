#include "ricepath/special.hpp"

#include "ricepath/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ricepath {

namespace {

constexpr std::array<double, 21> kBernoulliEven = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

constexpr double kShiftThreshold = 16.0;

void check_pole(Complex s, const char* where) {
  if (is_nonpositive_integer(s)) {
    throw PoleError(std::string(where) + ": pole at s = " + std::to_string(s.real()));
  }
}

Complex stirling_log_gamma(Complex z) {
  static const double half_log_two_pi = 0.5 * std::log(2.0 * pi);
  Complex out = (z - 0.5) * std::log(z) - z + half_log_two_pi;
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (int k = 1; k <= 10; ++k) {
    out += kBernoulliEven[k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return out;
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Asymptotic polygamma for large |w|.
Complex polygamma_asymptotic(int m, Complex w) {
  const Complex inv = 1.0 / w;
  if (m == 0) {
    Complex out = std::log(w) - 0.5 * inv;
    const Complex inv2 = inv * inv;
    Complex power = inv2;
    for (int k = 1; k <= 10; ++k) {
      out -= kBernoulliEven[k] / (2.0 * k) * power;
      power *= inv2;
    }
    return out;
  }
  // (-1)^{m+1} [ (m-1)!/w^m + m!/(2 w^{m+1}) + sum B_2k (2k+m-1)!/((2k)! w^{2k+m}) ]
  Complex wm = std::pow(inv, m);
  Complex out = factorial(m - 1) * wm + 0.5 * factorial(m) * wm * inv;
  Complex power = wm * inv * inv;
  double ratio = factorial(m + 1) / 2.0;  // (2k+m-1)!/(2k)! at k=1
  for (int k = 1; k <= 10; ++k) {
    out += kBernoulliEven[k] * ratio * power;
    power *= inv * inv;
    // advance (2k+m-1)!/(2k)! to k+1
    ratio *= (2.0 * k + m) * (2.0 * k + m + 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return (m % 2 == 0 ? -1.0 : 1.0) * out;
}

}  // namespace

double bernoulli_even(int k) { return kBernoulliEven.at(static_cast<std::size_t>(k)); }

double zeta_int(int k) {
  // zeta(2k) = (-1)^{k+1} B_2k (2 pi)^2k / (2 (2k)!) for even arguments;
  // odd arguments by direct summation with an Euler-Maclaurin tail.
  if (k < 2) throw DomainError("zeta_int: k >= 2 required");
  if (k % 2 == 0 && k / 2 <= 20) {
    const int h = k / 2;
    return std::abs(kBernoulliEven[h]) * std::pow(2.0 * pi, k) / (2.0 * factorial(k));
  }
  const int n = 20;
  double s = 0.0;
  for (int i = n - 1; i >= 1; --i) s += std::pow(static_cast<double>(i), -k);
  const double nn = n;
  s += std::pow(nn, 1 - k) / (k - 1) + 0.5 * std::pow(nn, -k) + k / 12.0 * std::pow(nn, -k - 1);
  return s;
}

Complex log_gamma(Complex s) {
  check_pole(s, "log_gamma");
  Complex z = s;
  CompensatedSum<Complex> shift;
  while (z.real() < kShiftThreshold) {
    shift.add(std::log(z));
    z += 1.0;
  }
  return stirling_log_gamma(z) - shift.value();
}

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s, 0.0)) return {0.0, 0.0};
  if (is_nonpositive_integer(s)) {
    // 1/Gamma is entire; near a pole use the reflection form.
    return std::sin(pi * s) / pi * gamma(1.0 - s);
  }
  return exp_log(-log_gamma(s));
}

Complex polygamma(int order, Complex s) {
  if (order < 0) throw DomainError("polygamma: negative order");
  check_pole(s, "polygamma");
  const double threshold = 20.0 + order;
  Complex z = s;
  CompensatedSum<Complex> shift;
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  const double mfact = factorial(order);
  while (z.real() < threshold) {
    shift.add(sign * mfact * std::pow(z, -(order + 1)));
    z += 1.0;
  }
  return polygamma_asymptotic(order, z) - shift.value();
}

std::vector<Complex> gamma_derivatives(Complex s, int max_order) {
  std::vector<Complex> psi(static_cast<std::size_t>(max_order));
  for (int k = 0; k < max_order; ++k) psi[k] = polygamma(k, s);
  // D_{k+1} = sum_i C(k,i) psi^(i) D_{k-i}, Gamma^(k) = Gamma D_k
  std::vector<Complex> d(static_cast<std::size_t>(max_order) + 1);
  d[0] = 1.0;
  for (int k = 0; k < max_order; ++k) {
    Complex acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      acc += binom * psi[i] * d[k - i];
      binom = binom * (k - i) / (i + 1);
    }
    d[k + 1] = acc;
  }
  const Complex g = gamma(s);
  for (auto& v : d) v *= g;
  return d;
}

std::vector<Complex> rgamma_derivatives(Complex s, int max_order) {
  if (s.real() < 0.5) {
    // 1/Gamma(s) = sin(pi s)/pi * Gamma(1-s); valid through the poles of Gamma.
    const auto g = gamma_derivatives(1.0 - s, max_order);
    std::vector<Complex> out(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
      Complex acc = 0.0;
      double binom = 1.0;
      for (int i = 0; i <= k; ++i) {
        const Complex sine = std::pow(pi, i - 1) * std::sin(pi * s + 0.5 * pi * i);
        const double sign = (k - i) % 2 == 0 ? 1.0 : -1.0;
        acc += binom * sine * sign * g[k - i];
        binom = binom * (k - i) / (i + 1);
      }
      out[k] = acc;
    }
    return out;
  }
  std::vector<Complex> psi(static_cast<std::size_t>(max_order));
  for (int k = 0; k < max_order; ++k) psi[k] = polygamma(k, s);
  // E_{k+1} = -sum_i C(k,i) psi^(i) E_{k-i}, (1/Gamma)^(k) = E_k / Gamma
  std::vector<Complex> e(static_cast<std::size_t>(max_order) + 1);
  e[0] = 1.0;
  for (int k = 0; k < max_order; ++k) {
    Complex acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      acc -= binom * psi[i] * e[k - i];
      binom = binom * (k - i) / (i + 1);
    }
    e[k + 1] = acc;
  }
  const Complex r = rgamma(s);
  for (auto& v : e) v *= r;
  return e;
}

Complex log_beta(Complex a, Complex b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

}  // namespace ricepath
