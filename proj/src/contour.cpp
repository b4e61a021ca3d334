#include "ricepath/contour.hpp"

#include "ricepath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ricepath {

std::vector<Complex> circle_coefficients(const ComplexFn& g, Complex center, double radius, int k_min,
                                         int k_max, const CircleOptions& opt) {
  if (radius <= 0.0) throw DomainError("circle_coefficients: radius must be positive");
  if (k_max < k_min) return {};
  const int span = k_max - k_min + 1;
  int m = opt.initial_points;
  while (m < 4 * span) m *= 2;

  // samples[j] = g(center + r e^{2 pi i j / m}); doubling reuses old nodes
  std::vector<Complex> samples(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) samples[j] = g(center + std::polar(radius, 2.0 * pi * j / m));

  auto scaled = [&](const std::vector<Complex>& f) {
    const int n = static_cast<int>(f.size());
    std::vector<Complex> c(static_cast<std::size_t>(span));
    for (int k = k_min; k <= k_max; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j) acc += f[j] * std::polar(1.0, -2.0 * pi * static_cast<double>(k) * j / n);
      c[k - k_min] = acc / static_cast<double>(n);
    }
    return c;
  };

  auto prev = scaled(samples);
  while (true) {
    const int next_m = 2 * m;
    if (next_m > opt.max_points) {
      throw ConvergenceError("circle_coefficients: no stable coefficients with " + std::to_string(m) +
                             " nodes (radius " + std::to_string(radius) + ")");
    }
    std::vector<Complex> refined(static_cast<std::size_t>(next_m));
    for (int j = 0; j < m; ++j) refined[2 * j] = samples[j];
    for (int j = 0; j < m; ++j) {
      refined[2 * j + 1] = g(center + std::polar(radius, 2.0 * pi * (2 * j + 1) / next_m));
    }
    samples = std::move(refined);
    m = next_m;
    auto cur = scaled(samples);
    double scale = 0.0;
    for (const auto& v : samples) scale = std::max(scale, std::abs(v));
    double change = 0.0;
    for (int i = 0; i < span; ++i) change = std::max(change, std::abs(cur[i] - prev[i]));
    prev = std::move(cur);
    if (!std::isfinite(scale)) throw ConvergenceError("circle_coefficients: non-finite samples");
    if (change <= opt.tol * scale) break;
  }
  std::vector<Complex> out(static_cast<std::size_t>(span));
  for (int k = k_min; k <= k_max; ++k) out[k - k_min] = prev[k - k_min] * std::pow(radius, -k);
  return out;
}

}  // namespace ricepath
