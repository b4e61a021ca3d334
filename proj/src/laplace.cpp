#include "ricepath/laplace.hpp"

#include "ricepath/errors.hpp"
#include "ricepath/quadrature.hpp"
#include "ricepath/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace ricepath {

namespace {

Complex cexpm1(Complex z) {
  if (std::abs(z) < 0.05) {
    Complex term = z, sum = z;
    for (int k = 2; k <= 10; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return std::exp(z) - 1.0;
}

// log((1 - e^{-u}) / u)
double log_ratio(double u) {
  if (u < 0.1) {
    const double u2 = u * u;
    return -0.5 * u + u2 / 24.0 - u2 * u2 / 2880.0 + u2 * u2 * u2 / 181440.0 - u2 * u2 * u2 * u2 / 9676800.0;
  }
  return std::log(-std::expm1(-u)) - std::log(u);
}

double binom_real(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// E_k(x) = Gamma(x) (1/Gamma)^(k)(x), k = 0..b, for real x > 0.
std::vector<double> rgamma_ratio_at(double x, int b) {
  std::vector<double> psi(static_cast<std::size_t>(b));
  for (int k = 0; k < b; ++k) psi[k] = polygamma(k, x).real();
  std::vector<double> e(static_cast<std::size_t>(b) + 1);
  e[0] = 1.0;
  for (int k = 0; k < b; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc -= binom_real(k, i) * psi[i] * e[k - i];
    e[k + 1] = acc;
  }
  return e;
}

// Integral of g over (0, inf), split at u = 1 with u = e^{-v} on (0, 1].
template <class T, class G>
T integrate_half_line(G&& g, double tol, double scale_hint = 1.0) {
  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = tol * 1e-3 * scale_hint;
  opt.max_intervals = 6000;
  auto near = quad::integrate_to_infinity<T>(
      [&](double v) -> T {
        const double u = std::exp(-v);
        if (u == 0.0) return T{};
        return g(u) * u;
      },
      0.0, opt);
  auto far = quad::integrate_to_infinity<T>(g, 1.0, opt);
  return near.value + far.value;
}

}  // namespace

double bromwich_inverse(const AnalyticFunction& phi, double u, double b_abscissa, double tol) {
  if (!(u > 0.0)) throw DomainError("bromwich_inverse: u must be positive");
  if (!(b_abscissa > phi.domain_abscissa)) throw DomainError("bromwich_inverse: abscissa left of the domain");
  auto integrand = [&](double t) {
    const Complex s(b_abscissa, t);
    return (phi(s) * std::exp(Complex(0.0, t * u))).real();
  };
  quad::Options opt;
  opt.abs_tol = tol * pi * std::exp(-b_abscissa * u);
  opt.rel_tol = tol;
  auto r = quad::integrate_oscillatory(integrand, 0.0, pi / u, opt, 2000);
  if (!r.converged) throw ConvergenceError("bromwich_inverse: oscillatory tail did not converge");
  return std::exp(b_abscissa * u) / pi * r.value;
}

HatPhiForm make_hat_phi_form(int ell, double c, int b, const std::vector<double>& coeffs, int truncation_J) {
  if (ell < 1) throw DomainError("hat_phi form: ell must be positive");
  if (!(c < -1.0)) throw DomainError("hat_phi form: c must be below -1");
  if (b < 0) throw DomainError("hat_phi form: b must be nonnegative");
  HatPhiForm form;
  form.ell = ell;
  form.c = c;
  form.b = b;
  form.truncation_J = truncation_J;
  form.coeff_scale = ell >= 2 ? static_cast<double>(ell - 1) : 1.0;
  const std::size_t n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(truncation_J) + 1);
  form.series_coeffs.resize(n);
  for (std::size_t j = 0; j < n; ++j) form.series_coeffs[j] = coeffs[j] / std::pow(form.coeff_scale, static_cast<double>(j));
  form.log_rgamma.resize(n);
  form.rgamma_ratio.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = static_cast<double>(j) - c;
    form.log_rgamma[j] = -std::lgamma(x);
    form.rgamma_ratio[j] = rgamma_ratio_at(x, b);
  }
  return form;
}

HatPhiForm make_hat_phi_form(const BasicPair& pair, int truncation_J) {
  const int ell = sigma(pair.d);
  const double c = pair.d - ell;
  // enough terms for the series to settle wherever the density exceeds e^{-300}
  const double reach = 310.0 * (ell >= 2 ? ell - 1 : 1);
  truncation_J = std::max(truncation_J, static_cast<int>(reach + 12.0 * std::sqrt(reach) + 50.0));
  // Taylor coefficients of U(v) = prod_{i<ell} (1 - i v)^{-1}, scaled by (ell-1)^j
  std::size_t n = ell >= 2 ? static_cast<std::size_t>(truncation_J) + 1 : 1;
  std::vector<double> scaled(n, 0.0);
  scaled[0] = 1.0;
  if (pair.d >= 0.0) {
    for (int i = 1; i < ell; ++i) {
      const double ratio = static_cast<double>(i) / (ell - 1);
      for (std::size_t j = 1; j < n; ++j) scaled[j] += ratio * scaled[j - 1];
    }
  } else {
    n = 1;
    scaled.resize(1);
  }
  // make_hat_phi_form rescales, so undo the scaling here
  std::vector<double> coeffs(n);
  const double base = ell >= 2 ? static_cast<double>(ell - 1) : 1.0;
  for (std::size_t j = 0; j < n; ++j) coeffs[j] = scaled[j] * std::pow(base, static_cast<double>(j));
  HatPhiForm form = make_hat_phi_form(ell, c, pair.b, coeffs, truncation_J);
  // keep the well-scaled values (avoids overflow in the round trip)
  for (std::size_t j = 0; j < n && j < form.series_coeffs.size(); ++j) form.series_coeffs[j] = scaled[j];
  return form;
}

std::pair<double, double> hat_phi_parts(const HatPhiForm& form, double u) {
  if (!(u > 0.0)) throw DomainError("hat_phi: u must be positive");
  const double L = std::log(u);
  const int b = form.b;
  auto bracket = [&](std::size_t j) {
    // (-1)^b sum_k C(b,k) L^{b-k} E_k
    double acc = 0.0;
    for (int k = 0; k <= b; ++k) acc += binom_real(b, k) * std::pow(L, b - k) * form.rgamma_ratio[j][k];
    return (b % 2 == 0 ? 1.0 : -1.0) * acc * form.series_coeffs[j];
  };
  const double log_prefix = -form.ell * u + (-form.c - 1.0) * L;
  const double main = std::exp(log_prefix + form.log_rgamma[0]) * bracket(0);
  const std::size_t n = form.series_coeffs.size();
  if (n <= 1) return {main, 0.0};
  // the series is at most e^{scale u} times a power of u and log u; densities
  // below e^{-300} are flushed to zero
  if (log_prefix + form.coeff_scale * u + (std::abs(form.c) + form.b + 2.0) * std::log(2.0 + u) < -300.0) {
    return {main, 0.0};
  }
  const double log_step = std::log(form.coeff_scale * u);
  double scale = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  const double peak = form.coeff_scale * u;
  for (std::size_t j = 1; j < n; ++j) {
    const double lm = static_cast<double>(j) * log_step + form.log_rgamma[j];
    if (lm > scale) {
      sum *= std::exp(scale - lm);
      scale = lm;
    }
    sum += bracket(j) * std::exp(lm - scale);
    if (static_cast<double>(j) > peak + 10.0 && lm < scale - 42.0) {
      return {main, std::exp(log_prefix + scale) * sum};
    }
  }
  // an explicit coefficient list shorter than the truncation is a finite series
  if (n < static_cast<std::size_t>(form.truncation_J) + 1) return {main, std::exp(log_prefix + scale) * sum};
  if (log_prefix + scale + std::log(static_cast<double>(n) * (peak + 1.0)) < -300.0) return {main, 0.0};
  throw ToleranceUnreachable("hat_phi: series needs more than " + std::to_string(n) + " terms at u = " +
                             std::to_string(u));
}

namespace {

// b = 0 evaluation with the exponent c replaced by c_shift; Gamma recomputed.
double hat_phi_b0_shifted(const HatPhiForm& form, double c_shift, double u) {
  const double L = std::log(u);
  const double log_prefix = -form.ell * u + (-c_shift - 1.0) * L;
  const std::size_t n = form.series_coeffs.size();
  const double log_step = n > 1 ? std::log(form.coeff_scale * u) : 0.0;
  const double peak = form.coeff_scale * u;
  double scale = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lm = static_cast<double>(j) * log_step - std::lgamma(static_cast<double>(j) - c_shift);
    if (lm > scale) {
      sum *= std::exp(scale - lm);
      scale = lm;
    }
    sum += form.series_coeffs[j] * std::exp(lm - scale);
    if (j > 0 && static_cast<double>(j) > peak + 10.0 && lm < scale - 42.0) break;
    if (j + 1 == n && n == static_cast<std::size_t>(form.truncation_J) + 1) {
      throw ToleranceUnreachable("hat_phi: series truncation reached");
    }
  }
  return std::exp(log_prefix + scale) * sum;
}

double central_difference(const HatPhiForm& form, double u, double h) {
  const int b = form.b;
  double acc = 0.0;
  for (int i = 0; i <= b; ++i) {
    const double offset = (0.5 * b - i) * h;
    acc += (i % 2 == 0 ? 1.0 : -1.0) * binom_real(b, i) * hat_phi_b0_shifted(form, form.c + offset, u);
  }
  return acc / std::pow(h, b);
}

}  // namespace

double hat_phi_closed_form(const HatPhiForm& form, double u, DerivativeScheme scheme) {
  if (!(u > 0.0)) throw DomainError("hat_phi: u must be positive");
  if (scheme == DerivativeScheme::analytic || form.b == 0) {
    const auto [main, rest] = hat_phi_parts(form, u);
    return main + rest;
  }
  // b-fold t-derivative of the b = 0 form at c + t, two Richardson levels
  const double h = 1e-2;
  const double coarse = central_difference(form, u, h);
  const double fine = central_difference(form, u, h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

double G_ratio(int j, double c) {
  if (j < 1) throw DomainError("G_ratio: j must be positive");
  if (!(c < -1.0)) throw DomainError("G_ratio: c must be below -1");
  double out = 1.0;
  for (int i = 0; i < j; ++i) out /= (static_cast<double>(i) - c);
  return out;
}

Complex psi_via_laplace(const RealFn& hat_phi, Complex s, double tol) {
  auto g = [&](double u) -> Complex {
    const double h = hat_phi(u);
    if (h == 0.0) return 0.0;
    return h * std::exp(s * std::log(-std::expm1(-u)));
  };
  return integrate_half_line<Complex>(g, tol);
}

Complex twisted_gamma_closed_form(const TwistedGammaSpec& spec, Complex s) {
  if (spec.ell < 1 || spec.m < 0) throw DomainError("twisted_gamma: ell >= 1 and m >= 0 required");
  const auto g = gamma_derivatives(s, spec.m);
  const double log_ell = std::log(static_cast<double>(spec.ell));
  Complex acc = 0.0;
  for (int k = 0; k <= spec.m; ++k) acc += binom_real(spec.m, k) * std::pow(-log_ell, spec.m - k) * g[k];
  return std::exp(-s * log_ell) * acc;
}

Complex twisted_gamma(const TwistedGammaSpec& spec, Complex s, double tol) {
  if (!(s.real() > 0.0)) throw DomainError("twisted_gamma: requires Re s > 0");
  if (spec.ell < 1 || spec.m < 0) throw DomainError("twisted_gamma: ell >= 1 and m >= 0 required");
  const double ell = spec.ell;
  const double w0 = -std::log(ell);
  // int over w in R of exp(-ell e^w + s w) w^m, split at w0
  auto integrand = [&](double w) -> Complex {
    const double e = ell * std::exp(w);
    if (e > 745.0) return 0.0;
    return std::exp(-e + s * w) * std::pow(w, spec.m);
  };
  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = 1e-300;
  opt.max_intervals = 8000;
  auto right = quad::integrate_to_infinity<Complex>(integrand, w0, opt);
  auto left = quad::integrate_to_infinity<Complex>([&](double v) { return integrand(w0 - v); }, 0.0, opt);
  return right.value + left.value;
}

CanonicalPsi::CanonicalPsi(const BasicPair& pair, double tol)
    : pair_(pair), form_(make_hat_phi_form(pair)), tol_(tol) {
  const int b = form_.b;
  kappa_.resize(static_cast<std::size_t>(b) + 1);
  const double rg = std::exp(form_.log_rgamma[0]);
  for (int m = 0; m <= b; ++m) {
    kappa_[m] = (b % 2 == 0 ? 1.0 : -1.0) * binom_real(b, b - m) * form_.rgamma_ratio[0][b - m] * rg;
  }
  // (k+ell)^d / ((k+1)...(k+ell)) = sum_j A_j/(k+j), and Pi[1/(k+j)] lifts to (j-1)!/((s+1)...(s+j))
  const int ell = form_.ell;
  if (pair.b == 0 && pair.d >= 0.0 && pair.d == std::floor(pair.d) && pair.d < ell) {
    partial_.resize(static_cast<std::size_t>(ell) + 1, 0.0);
    for (int j = 1; j <= ell; ++j) {
      double a = std::pow(static_cast<double>(ell - j), pair.d);
      for (int i = 1; i <= ell; ++i) {
        if (i != j) a /= static_cast<double>(i - j);
      }
      for (int i = 1; i < j; ++i) a *= static_cast<double>(i);
      partial_[j] = a;
    }
  }
}

Complex CanonicalPsi::main(Complex s) const {
  Complex acc = 0.0;
  for (int m = 0; m <= form_.b; ++m) acc += kappa_[m] * twisted_gamma_closed_form({form_.ell, m}, s - form_.c);
  return acc;
}

Complex CanonicalPsi::regular(Complex s) const {
  if (!(s.real() > form_.c - 1.0)) throw DomainError("canonical psi: requires Re s > c - 1");
  auto g = [&](double u) -> Complex {
    const auto [main_part, rest] = hat_phi_parts(form_, u);
    const double lr = log_ratio(u);
    const double L = std::log(u);
    Complex out = 0.0;
    // a u^s with a tiny and u^s huge, kept in the log domain
    auto scaled = [](double a, Complex z) { return exp_log(std::log(Complex(a, 0.0)) + z); };
    if (main_part != 0.0) {
      const Complex em1 = cexpm1(s * lr);
      if (em1 != Complex(0.0, 0.0)) out += scaled(main_part, s * L + std::log(em1));
    }
    if (rest != 0.0) out += scaled(rest, s * (L + lr));
    return out;
  };
  return integrate_half_line<Complex>(g, tol_);
}

Complex CanonicalPsi::psi(Complex s) const {
  if (!partial_.empty()) {
    if (!(s.real() > form_.c - 1.0)) throw DomainError("canonical psi: requires Re s > c - 1");
    auto sum = [this](Complex z) {
      Complex acc = 0.0, denom = 1.0;
      for (std::size_t j = 1; j < partial_.size(); ++j) {
        denom *= z + static_cast<double>(j);
        acc += partial_[j] / denom;
      }
      return acc;
    };
    Complex v = sum(s);
    // -1, -3, ..., -ell are removable: mean over a small circle
    for (int m = 1; m <= form_.ell; ++m) {
      if (m == static_cast<int>(-form_.c) || std::abs(s + static_cast<double>(m)) >= 1e-3) continue;
      v = 0.0;
      for (int i = 0; i < 16; ++i) v += sum(s + 0.01 * std::polar(1.0, 2.0 * pi * i / 16.0)) / 16.0;
    }
    return s.imag() == 0.0 ? Complex(v.real(), 0.0) : v;
  }
  const Complex v = main(s) + regular(s);
  return s.imag() == 0.0 ? Complex(v.real(), 0.0) : v;
}

Complex CanonicalPsi::Psi(Complex s) const {
  const double sign = form_.ell % 2 == 0 ? 1.0 : -1.0;
  return sign * falling_factorial(s, form_.ell) * psi(s - static_cast<double>(form_.ell));
}

Complex CanonicalPsi::Psi_main(Complex s) const {
  const double sign = form_.ell % 2 == 0 ? 1.0 : -1.0;
  return sign * falling_factorial(s, form_.ell) * main(s - static_cast<double>(form_.ell));
}

AnalyticFunction SingularExpansion::psi_handle() const {
  auto p = psi;
  AnalyticFunction h;
  h.eval = [p](Complex s) { return p->psi(s); };
  h.domain_abscissa = c - 1.0;
  h.growth = 0.0;
  h.name = "canonical_psi";
  return h;
}

AnalyticFunction SingularExpansion::Psi_handle() const {
  auto p = psi;
  AnalyticFunction h;
  h.eval = [p](Complex s) { return p->Psi(s); };
  h.domain_abscissa = c + ell - 1.0;
  h.growth = static_cast<double>(ell);
  h.name = "lifted_psi";
  return h;
}

Complex SingularExpansion::remainder(Complex s) const { return psi->Psi(s) - psi->Psi_main(s); }

SingularExpansion psi_singular_expansion(double d, int b) {
  SingularExpansion out;
  auto p = std::make_shared<const CanonicalPsi>(BasicPair{d, b});
  out.psi = p;
  out.ell = p->ell();
  out.c = p->c();
  out.b = b;
  out.kappa = p->kappa();
  const double sign = out.ell % 2 == 0 ? 1.0 : -1.0;
  for (double k : out.kappa) out.a.push_back(sign * k);
  out.canonical_pole = {Complex(out.c, 0.0), b + 1, PoleShape::S};
  // s(s-1)...(s-ell+1) vanishes at s = d when d is one of 0..ell-1
  const bool cancels = d == std::floor(d) && d >= 0.0 && d <= out.ell - 1;
  const int order = b + 1 - (cancels ? 1 : 0);
  out.lifted_pole = {Complex(d, 0.0), order, PoleShape::S};
  // numeric confirmation from the Laurent coefficients of Psi around d
  auto Psi = [p](Complex s) { return p->Psi(s); };
  const auto coeffs = laurent_coefficients(Psi, Complex(d, 0.0), b + 2, 0.25);
  double scale = 0.0;
  for (const auto& v : coeffs) scale = std::max(scale, std::abs(v));
  out.lifted_order_numeric = 0;
  for (int k = b + 2; k >= 1; --k) {
    if (std::abs(coeffs[b + 2 - k]) > 1e-7 * std::max(1.0, scale)) {
      out.lifted_order_numeric = k;
      break;
    }
  }
  return out;
}

std::string to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::exponential_decay: return "exponential_decay";
    case GrowthClass::polynomial: return "polynomial";
    case GrowthClass::exponential_growth: return "exponential_growth";
  }
  return "unknown";
}

namespace {

// Least squares y ~ x0 + x1 log t + x2 t; falls back to fewer columns.
std::array<double, 3> fit_growth(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  std::array<double, 3> coef{0.0, 0.0, 0.0};
  if (n == 0) return coef;
  if (n < 3) {
    coef[0] = y[0];
    return coef;
  }
  double a[3][4] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const double row[3] = {1.0, std::log(t[i]), t[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += row[r] * row[c];
      a[r][3] += row[r] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[piv][c]);
    if (std::abs(a[col][col]) < 1e-300) return coef;
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  for (int r = 0; r < 3; ++r) coef[r] = a[r][3] / a[r][r];
  return coef;
}

}  // namespace

TamenessReport tameness_probe(const AnalyticFunction& Psi, double c, double strip_width,
                              const std::vector<double>& t_samples) {
  TamenessReport report;
  const std::array<double, 5> sigmas = {c - strip_width, c - 0.5 * strip_width, c, c + 0.5, c + 1.0};
  double rate_sum = 0.0, exp_sum = 0.0;
  int used = 0;
  for (double sigma : sigmas) {
    std::vector<double> ts, ys;
    double max_abs = 0.0;
    for (double t : t_samples) {
      if (!(t > 0.0)) continue;
      try {
        const double v = std::abs(Psi(Complex(sigma, t)));
        if (!(v > 0.0) || !std::isfinite(v)) continue;
        ts.push_back(t);
        ys.push_back(std::log(v));
        max_abs = std::max(max_abs, v);
      } catch (const Error&) {
        continue;
      }
    }
    if (ts.size() < 3) continue;
    const auto coef = fit_growth(ts, ys);
    report.lines.push_back({sigma, coef[1], coef[2], max_abs});
    rate_sum += coef[2];
    exp_sum += coef[1];
    ++used;
  }
  if (used > 0) {
    report.exp_rate = rate_sum / used;
    report.poly_exponent = exp_sum / used;
  }
  if (report.exp_rate > 0.2) {
    report.classification = GrowthClass::exponential_growth;
  } else if (report.exp_rate < -0.2) {
    report.classification = GrowthClass::exponential_decay;
  } else {
    report.classification = GrowthClass::polynomial;
  }
  report.tame = report.classification != GrowthClass::exponential_growth;
  return report;
}

std::string TamenessReport::to_string() const {
  std::ostringstream os;
  os.precision(6);
  os << "classification: " << ricepath::to_string(classification) << "\n";
  os << "exp_rate: " << exp_rate << "\n";
  os << "poly_exponent: " << poly_exponent << "\n";
  os << "tame: " << (tame ? "true" : "false") << "\n";
  for (const auto& l : lines) {
    os << "line sigma=" << l.sigma << " exp_rate=" << l.exp_rate << " poly_exponent=" << l.poly_exponent
       << " max_abs=" << l.max_abs << "\n";
  }
  return os.str();
}

Complex poisson_via_laplace(const RealFn& hat_phi, Complex x, double tol) {
  auto g = [&](double u) -> Complex {
    const double h = hat_phi(u);
    if (h == 0.0) return 0.0;
    return h * std::exp(x * std::expm1(-u));
  };
  return integrate_half_line<Complex>(g, tol);
}

Complex poisson_exp_via_laplace(const RealFn& hat_phi, Complex x, double tol) {
  auto g = [&](double u) -> Complex {
    const double h = hat_phi(u);
    if (h == 0.0) return 0.0;
    return h * std::exp(x * std::exp(-u));
  };
  return integrate_half_line<Complex>(g, tol);
}

}  // namespace ricepath
