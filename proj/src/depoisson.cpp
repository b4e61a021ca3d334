#include "ricepath/depoisson.hpp"

#include "ricepath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace ricepath {

Integer charlier_tau(int j, long n) {
  if (j < 0 || n < 0) throw DomainError("charlier_tau: j and n must be nonnegative");
  Integer sum = 0;
  Integer falling = 1;  // n!/(n-l)!
  for (int l = 0; l <= j && l <= n; ++l) {
    if (l > 0) falling *= n - l + 1;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j - l));
    Integer term = binomial(j, l) * power * falling;
    if ((j - l) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Integer CharlierTable::operator()(long n) const {
  Integer acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * n + coeffs[i];
  return acc;
}

int CharlierTable::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

CharlierTable charlier_table(int j) {
  if (j < 0) throw DomainError("charlier_table: j must be nonnegative");
  // sum_l C(j,l) (-1)^{j-l} n^{j-l} n(n-1)...(n-l+1)
  std::vector<Integer> total(static_cast<std::size_t>(j) + 1, 0);
  std::vector<Integer> falling{1};  // coefficients of n(n-1)...(n-l+1)
  for (int l = 0; l <= j; ++l) {
    if (l > 0) {
      std::vector<Integer> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (l - 1);
      }
      falling = std::move(next);
    }
    Integer scale = binomial(j, l);
    if ((j - l) % 2 == 1) scale = -scale;
    for (std::size_t i = 0; i < falling.size(); ++i) total[i + (j - l)] += scale * falling[i];
  }
  CharlierTable table;
  table.j = j;
  table.coeffs = std::move(total);
  while (table.coeffs.size() > 1 && table.coeffs.back() == 0) table.coeffs.pop_back();
  return table;
}

double default_derivative_radius(double n) {
  if (!(n > 0.0)) throw DomainError("poisson_derivatives: n must be positive");
  return std::min(std::sqrt(n), n / 2.0);
}

std::vector<Complex> poisson_derivatives(const ComplexFn& P, double n, int j_max, double radius) {
  if (j_max < 0) throw DomainError("poisson_derivatives: j_max must be nonnegative");
  const double r = radius > 0.0 ? radius : default_derivative_radius(n);
  CircleOptions opt;
  opt.tol = 1e-13;
  auto coeffs = circle_coefficients(P, Complex(n, 0.0), r, 0, j_max, opt);
  double fact = 1.0;
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) fact *= j;
    coeffs[j] *= fact;
  }
  return coeffs;
}

double charlier_truncated_estimate(const ComplexFn& P, long n, int k, double radius) {
  if (k < 1) throw DomainError("charlier_truncated_estimate: k must be positive");
  if (n < 1) throw DomainError("charlier_truncated_estimate: n must be positive");
  const int j_max = 2 * k - 1;
  const auto derivs = poisson_derivatives(P, static_cast<double>(n), j_max, radius);
  CompensatedSum<double> sum;
  double fact = 1.0;
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) fact *= j;
    sum.add(derivs[j].real() * charlier_tau(j, n).get_d() / fact);
  }
  return sum.value();
}

namespace {

// Least squares y ~ X beta with at most three columns.
std::vector<double> least_squares(const std::vector<std::vector<double>>& X, const std::vector<double>& y) {
  const std::size_t p = X.empty() ? 0 : X[0].size();
  std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) a[r][c] += X[i][r] * X[i][c];
      a[r][p] += X[i][r] * y[i];
    }
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < p; ++r) if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    if (std::abs(a[col][col]) < 1e-300) return std::vector<double>(p, 0.0);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= p; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> beta(p);
  for (std::size_t r = 0; r < p; ++r) beta[r] = a[r][p] / a[r][r];
  return beta;
}

}  // namespace

JsReport js_admissibility_scan(const ComplexFn& log_P, double theta, const std::vector<double>& radii, int angles) {
  if (!(theta > 0.0 && theta < 0.5 * pi)) throw DomainError("js_admissibility_scan: theta must lie in (0, pi/2)");
  if (radii.empty()) throw DomainError("js_admissibility_scan: no radii");
  JsReport report;
  report.theta = theta;
  for (double r : radii) {
    if (!(r > 0.0)) throw DomainError("js_admissibility_scan: radii must be positive");
    JsRow row;
    row.radius = r;
    row.log_inside = -std::numeric_limits<double>::infinity();
    row.log_outside = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= angles; ++i) {
      const double phi = -theta + 2.0 * theta * i / angles;
      row.log_inside = std::max(row.log_inside, log_P(std::polar(r, phi)).real());
    }
    for (int i = 1; i <= angles; ++i) {
      const double phi = theta + (pi - theta) * i / angles;
      for (double sgn : {1.0, -1.0}) {
        const Complex z = std::polar(r, sgn * phi);
        row.log_outside = std::max(row.log_outside, log_P(z).real() + z.real());
      }
    }
    report.rows.push_back(row);
  }
  std::vector<std::vector<double>> Xin, Xout;
  std::vector<double> yin, yout;
  const bool with_loglog = radii.size() >= 4 && *std::min_element(radii.begin(), radii.end()) > std::exp(1.0);
  for (const auto& row : report.rows) {
    const double lr = std::log(row.radius);
    if (with_loglog) {
      Xin.push_back({1.0, lr, std::log(lr)});
    } else {
      Xin.push_back({1.0, lr});
    }
    yin.push_back(row.log_inside);
    if (radii.size() >= 3) {
      Xout.push_back({1.0, lr, row.radius});
    } else {
      Xout.push_back({1.0, row.radius});
    }
    yout.push_back(row.log_outside);
  }
  if (report.rows.size() >= Xin[0].size()) {
    const auto b = least_squares(Xin, yin);
    report.alpha = b[1];
    report.beta = with_loglog ? b[2] : 0.0;
  }
  if (report.rows.size() >= Xout[0].size()) {
    const auto b = least_squares(Xout, yout);
    report.delta = b.back();
  } else {
    report.delta = report.rows[0].log_outside / report.rows[0].radius;
  }
  report.delta_below_one = report.delta < 1.0;
  return report;
}

std::string JsReport::to_string() const {
  std::ostringstream os;
  os.precision(8);
  os << "theta: " << theta << "\n"
     << "alpha: " << alpha << "\n"
     << "beta: " << beta << "\n"
     << "delta: " << delta << "\n"
     << "delta_below_one: " << (delta_below_one ? "true" : "false") << "\n";
  return os.str();
}

void JsReport::write_csv(std::ostream& os) const {
  os << "radius,log_inside,log_outside\n";
  os.precision(12);
  for (const auto& r : rows) os << r.radius << ',' << r.log_inside << ',' << r.log_outside << '\n';
}

}  // namespace ricepath
