#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

namespace ricepath::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * wgk[7];
  T gauss = fc * wg[3];
  double abs_kronrod = magnitude(fc) * wgk[7];
  std::array<T, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    kronrod += (f1[j] + f2[j]) * wgk[j];
    abs_kronrod += (magnitude(f1[j]) + magnitude(f2[j])) * wgk[j];
    if (j % 2 == 1) gauss += (f1[j] + f2[j]) * wg[j / 2];
  }
  const T mean = kronrod * 0.5;
  double asc = wgk[7] * magnitude(fc - mean);
  for (int j = 0; j < 7; ++j) asc += wgk[j] * (magnitude(f1[j] - mean) + magnitude(f2[j] - mean));
  asc *= std::abs(half);
  double err = magnitude((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double resabs = abs_kronrod * std::abs(half);
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  if (!std::isfinite(magnitude(kronrod))) err = std::numeric_limits<double>::infinity();
  return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// T may be double or Complex.
template <class T, class F>
Result<T> integrate(F&& f, double a, double b, const Options& opt = {}) {
  using detail::Segment;
  Result<T> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment<T>> heap;
  auto first = detail::gk15<T>(f, a, b);
  T total = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  while (error > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
    if (intervals >= opt.max_intervals) break;
    Segment<T> worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
    heap.pop();
    auto left = detail::gk15<T>(f, worst.a, mid);
    auto right = detail::gk15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    heap.push(left);
    heap.push(right);
    ++intervals;
    // Recompute the error sum from the heap occasionally to avoid drift.
    error += left.error + right.error - worst.error;
    if (intervals % 64 == 0) {
      auto copy = heap;
      error = 0.0;
      T fresh{};
      while (!copy.empty()) {
        error += copy.top().error;
        fresh += copy.top().value;
        copy.pop();
      }
      total = fresh;
    }
  }
  // Final resummation.
  error = 0.0;
  T fresh{};
  while (!heap.empty()) {
    error += heap.top().error;
    fresh += heap.top().value;
    heap.pop();
  }
  out.value = fresh;
  out.error = error;
  out.intervals = intervals;
  out.converged = error <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(fresh));
  return out;
}

/// Integral over [a, +inf) through x = a + t/(1-t).
template <class T, class F>
Result<T> integrate_to_infinity(F&& f, double a, const Options& opt = {}) {
  auto mapped = [&](double t) -> T {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    const T v = f(x);
    if (detail::magnitude(v) == 0.0) return T{};
    return v / (one_minus * one_minus);
  };
  return integrate<T>(mapped, 0.0, 1.0, opt);
}

/// Wynn epsilon extrapolation of a sequence of partial sums; returns the
/// estimate and the difference between the last two estimates.
inline std::pair<double, double> wynn_epsilon(const std::vector<double>& partial) {
  const std::size_t n = partial.size();
  if (n < 3) return {partial.empty() ? 0.0 : partial.back(), std::numeric_limits<double>::infinity()};
  // eps[k][i]: column k, row i. Only even columns are estimates.
  std::vector<double> prev(n + 1, 0.0), cur(partial.begin(), partial.end());
  std::vector<double> estimates;
  estimates.push_back(partial.back());
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    bool degenerate = false;
    for (std::size_t i = 0; i + k < n; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) {
        degenerate = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (degenerate) {
      if (k % 2 == 1) return {cur.back(), 0.0};
      break;
    }
    prev = cur;
    cur = next;
    if (k % 2 == 0) estimates.push_back(cur.back());
  }
  const double best = estimates.back();
  const double delta = estimates.size() >= 2 ? std::abs(best - estimates[estimates.size() - 2])
                                             : std::numeric_limits<double>::infinity();
  return {best, delta};
}

/// Integral over [a, +inf) of a decaying oscillatory real function whose sign
/// changes are roughly period/2 apart: half-period pieces are integrated
/// adaptively and the partial sums extrapolated with the epsilon algorithm.
template <class F>
Result<double> integrate_oscillatory(F&& f, double a, double half_period, const Options& opt = {},
                                     int max_pieces = 400) {
  Result<double> out;
  std::vector<double> partial;
  double sum = 0.0;
  double quad_error = 0.0;
  double last_estimate = std::numeric_limits<double>::quiet_NaN();
  int stable = 0;
  Options piece_opt = opt;
  piece_opt.abs_tol = opt.abs_tol / 10.0;
  for (int k = 0; k < max_pieces; ++k) {
    const double lo = a + k * half_period;
    auto piece = integrate<double>(f, lo, lo + half_period, piece_opt);
    sum += piece.value;
    quad_error += piece.error;
    out.intervals += piece.intervals;
    partial.push_back(sum);
    if (std::abs(piece.value) <= piece_opt.abs_tol && k > 4) {
      out.value = sum;
      out.error = quad_error + std::abs(piece.value);
      out.converged = true;
      return out;
    }
    if (partial.size() < 6) continue;
    // keep the extrapolation window modest to limit roundoff growth
    std::vector<double> window(partial.end() - std::min<std::size_t>(partial.size(), 30), partial.end());
    const auto [estimate, delta] = wynn_epsilon(window);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(estimate));
    if (std::isfinite(last_estimate) && std::abs(estimate - last_estimate) <= tol && delta <= 10.0 * tol) {
      if (++stable >= 2) {
        out.value = estimate;
        out.error = quad_error + std::abs(estimate - last_estimate);
        out.converged = true;
        return out;
      }
    } else {
      stable = 0;
    }
    last_estimate = estimate;
  }
  out.value = std::isfinite(last_estimate) ? last_estimate : sum;
  out.error = std::numeric_limits<double>::infinity();
  out.converged = false;
  return out;
}

}  // namespace ricepath::quad
