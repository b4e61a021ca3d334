#include "ricepath/lifting.hpp"

#include "ricepath/errors.hpp"
#include "ricepath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ricepath {

namespace {

constexpr int kHeadCache = 512;
constexpr int kEulerMaclaurinTerms = 6;

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

Complex AsymptoticTerm::evaluate(double n) const {
  const double ln = std::log(n);
  return coefficient * std::exp(Complex(exponent, frequency) * ln) * std::pow(ln, log_power);
}

std::string AsymptoticTerm::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << "(" << coefficient.real() << (coefficient.imag() < 0 ? "-" : "+") << std::abs(coefficient.imag())
     << "i) n^" << exponent;
  if (frequency != 0.0) os << " n^(" << frequency << "i)";
  if (log_power > 0) os << " log^" << log_power << " n";
  return os.str();
}

NewtonPsi::NewtonPsi(SequenceSpec f, double tol)
    : f_(std::move(f)), tol_(tol), degree_(f_.degree()), lifting_(f_.lifting()) {
  finite_ = f_.is_tabulated();
  if (finite_) {
    head_ = f_.table(static_cast<long>(f_.as_tabulated()->values.size()) - 1);
    return;
  }
  if (lifting_ && !(degree_ < -1.0)) {
    throw DomainError("newton_psi: sequence must be reduced (degree < -1), got degree " + std::to_string(degree_));
  }
  head_ = f_.table(kHeadCache - 1);
}

Complex NewtonPsi::operator()(Complex s) const {
  if (finite_) return finite_sum(s);
  if (!(s.real() > degree_)) {
    throw DomainError("newton_psi: requires Re s > " + std::to_string(degree_));
  }
  if (lifting_) return lifted_sum(s);
  return plain_sum(s);
}

Complex NewtonPsi::finite_sum(Complex s) const {
  CompensatedSum<Complex> sum;
  Complex coeff = 1.0;  // (-1)^k C(s,k)
  for (std::size_t k = 0; k < head_.size(); ++k) {
    if (k > 0) coeff *= (static_cast<double>(k) - 1.0 - s) / static_cast<double>(k);
    sum.add(head_[k] * coeff);
  }
  return sum.value();
}

Complex NewtonPsi::lifted_sum(Complex s) const {
  const long k_tail =
      std::max<long>({40L, static_cast<long>(std::ceil(4.0 * std::abs(s) + 20.0)), lifting_->valid_from});
  CompensatedSum<Complex> head;
  double max_term = 0.0;
  Complex coeff = 1.0;
  for (long k = 0; k < k_tail; ++k) {
    if (k > 0) coeff *= (static_cast<double>(k) - 1.0 - s) / static_cast<double>(k);
    const double fk = k < kHeadCache ? head_[k] : f_.value(k);
    const Complex term = fk * coeff;
    max_term = std::max(max_term, std::abs(term));
    head.add(term);
  }
  coeff *= (static_cast<double>(k_tail) - 1.0 - s) / static_cast<double>(k_tail);  // now at k_tail
  Complex tail = 0.0;
  if (coeff != Complex(0.0, 0.0)) {
    const double kk = static_cast<double>(k_tail);
    const Complex log_base = -log_gamma(kk - s) + log_gamma(Complex(kk + 1.0));
    const auto& phi = lifting_->eval;
    auto term = [&](Complex x) -> Complex {
      return phi(x) * coeff * std::exp(log_gamma(x - s) - log_gamma(x + 1.0) + log_base);
    };
    const Complex t_k = term(kk);
    quad::Options qopt;
    qopt.rel_tol = 1e-13;
    qopt.abs_tol = std::max(1e-300, 1e-3 * tol_ * std::abs(t_k) * kk);
    auto integral = quad::integrate_to_infinity<Complex>(
        [&](double v) -> Complex {
          if (v > 700.0) return 0.0;
          const double x = kk * std::exp(v);
          return term(x) * x;
        },
        0.0, qopt);
    CircleOptions copt;
    copt.tol = 1e-12;
    const auto taylor = circle_coefficients(term, kk, kk / 4.0, 0, 2 * kEulerMaclaurinTerms - 1, copt);
    Complex correction = 0.5 * t_k;
    for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
      const int order = 2 * j - 1;
      const Complex derivative = taylor[order] * factorial(order);
      correction -= bernoulli_even(j) / factorial(2 * j) * derivative;
    }
    tail = integral.value + correction;
    max_term = std::max(max_term, std::abs(t_k));
  }
  const Complex total = head.value() + tail;
  const double loss = max_term * 4e-16 * static_cast<double>(k_tail);
  if (loss > 1e4 * tol_ * std::max(1.0, std::abs(total))) {
    throw ToleranceUnreachable("newton_psi: cancellation in the Newton series at s = (" +
                               std::to_string(s.real()) + "," + std::to_string(s.imag()) + ")");
  }
  return total;
}

Complex NewtonPsi::plain_sum(Complex s) const {
  constexpr long cap = 2000000;
  CompensatedSum<Complex> sum;
  Complex coeff = 1.0;
  int quiet = 0;
  for (long k = 0; k < cap; ++k) {
    if (k > 0) coeff *= (static_cast<double>(k) - 1.0 - s) / static_cast<double>(k);
    const double fk = k < kHeadCache ? head_[k] : f_.value(k);
    const Complex term = fk * coeff;
    sum.add(term);
    if (std::abs(term) < tol_ * std::abs(sum.value())) {
      if (++quiet >= 20) return sum.value();
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("newton_psi: tail criterion unmet within term cap");
}

AnalyticFunction NewtonPsi::handle() const {
  auto self = std::make_shared<NewtonPsi>(*this);
  AnalyticFunction h;
  h.eval = [self](Complex s) { return (*self)(s); };
  h.domain_abscissa = finite_ ? -std::numeric_limits<double>::infinity() : degree_;
  h.growth = finite_ ? static_cast<double>(head_.size()) : 0.0;
  h.name = "newton_psi[" + f_.to_string() + "]";
  return h;
}

Complex newton_psi(const SequenceSpec& f, Complex s, double tol) { return NewtonPsi(f, tol)(s); }

Complex log_rice_kernel(long n, Complex s) {
  if (n < 0) throw DomainError("rice_kernel: n must be nonnegative");
  const double r = std::round(s.real());
  const bool near_integer = std::abs(s.imag()) < 1e-9 && std::abs(s.real() - r) < 1e-9;
  if (near_integer && r >= 0.0 && r <= static_cast<double>(n) && std::abs(s.real() - r) < 1e-13 &&
      std::abs(s.imag()) < 1e-13) {
    throw PoleError("rice_kernel: pole at s = " + std::to_string(static_cast<long>(r)));
  }
  if (near_integer && r > static_cast<double>(n)) {
    // (-1)^{n+1} n! / (s (s-1) ... (s-n))
    CompensatedSum<Complex> acc;
    for (long i = 0; i <= n; ++i) acc.add(std::log(s - static_cast<double>(i)));
    const Complex sign = (n + 1) % 2 == 0 ? Complex(0.0, 0.0) : Complex(0.0, pi);
    return std::lgamma(static_cast<double>(n) + 1.0) + sign - acc.value();
  }
  return std::lgamma(static_cast<double>(n) + 1.0) + log_gamma(-s) - log_gamma(static_cast<double>(n) + 1.0 - s);
}

Complex rice_kernel(long n, Complex s) { return exp_log(log_rice_kernel(n, s)); }

double rice_integral(const AnalyticFunction& psi, long n, double a, const RiceOptions& opt) {
  if (!(a > psi.domain_abscissa)) {
    throw DomainError("rice_integral: abscissa must exceed the domain boundary of psi");
  }
  const double r = std::round(a);
  if (std::abs(a - r) < 1e-12 && r >= 0.0 && r <= static_cast<double>(n)) {
    throw DomainError("rice_integral: abscissa crosses a kernel pole");
  }
  const Complex log_l0 = log_rice_kernel(n, a);
  const double log_scale = log_l0.real() + std::log(std::max(std::abs(psi(a)), 1e-300));
  const double growth = std::max(psi.growth, 0.0);
  // integrand on t >= 0; contributions below e^{-60} of the scale are dropped
  // without evaluating psi, which may be expensive far up the line
  auto integrand = [&](double t) -> double {
    const Complex s(a, t);
    const Complex log_l = log_rice_kernel(n, s);
    if (log_l.real() + growth * std::log1p(std::abs(s)) < log_scale - 60.0 - std::log(1.0 / opt.tol)) return 0.0;
    return (exp_log(log_l) * psi(s)).real() / pi;
  };
  quad::Options qopt;
  qopt.rel_tol = opt.tol / 10.0;
  qopt.abs_tol = opt.tol * 1e-3 * std::exp(log_scale);
  qopt.max_intervals = opt.max_intervals;
  const double h = opt.core_height;
  auto core = quad::integrate<double>(integrand, 0.0, h, qopt);
  auto tail = quad::integrate_to_infinity<double>(integrand, h, qopt);
  const double value = core.value + tail.value;
  if (!core.converged || !tail.converged) {
    const double err = core.error + tail.error;
    if (err > opt.tol * std::max(std::abs(value), std::exp(log_scale))) {
      throw ConvergenceError("rice_integral: quadrature did not converge (error " + std::to_string(err) + ")");
    }
  }
  return value;
}

double rice_recover_f(const AnalyticFunction& psi, long n, double a, double tol) {
  if (!(a < 0.0)) throw DomainError("rice_recover_f: abscissa must be negative");
  RiceOptions opt;
  opt.tol = tol;
  return rice_integral(psi, n, a, opt);
}

std::vector<Complex> laurent_coefficients(const ComplexFn& g, Complex center, int max_order, double radius) {
  if (max_order < 0) throw DomainError("laurent_coefficients: max_order must be nonnegative");
  return circle_coefficients(g, center, radius, -max_order, 0);
}

namespace {

double pole_gap(const std::vector<PoleSpec>& poles, long n) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = i + 1; j < poles.size(); ++j) gap = std::min(gap, std::abs(poles[i].location - poles[j].location));
    // kernel poles 0..n that are not themselves listed
    const Complex z = poles[i].location;
    const double r = std::round(z.real());
    for (double k = std::max(0.0, r - 1.0); k <= std::min<double>(n, r + 1.0); k += 1.0) {
      const double dist = std::abs(z - Complex(k, 0.0));
      if (dist > 1e-9) gap = std::min(gap, dist);
    }
  }
  return gap;
}

}  // namespace

std::vector<AsymptoticTerm> pole_terms(const AnalyticFunction& psi, const PoleSpec& pole, double radius) {
  const Complex s0 = pole.location;
  auto h = [&](Complex s) { return gamma(-s) * psi(s); };
  const auto coeffs = circle_coefficients(h, s0, radius, -pole.order, -1);
  std::vector<AsymptoticTerm> terms;
  double fact = 1.0;
  for (int i = 0; i < pole.order; ++i) {
    if (i > 0) fact *= i;
    // h_{-1-i} sits at index order-1-i
    const Complex c = coeffs[pole.order - 1 - i] / fact;
    terms.push_back({s0.real(), i, c, s0.imag()});
  }
  return terms;
}

ShiftLeftResult shift_left_asymptotics(const AnalyticFunction& psi, const std::vector<PoleSpec>& poles, long n,
                                       double left_abscissa, const ShiftLeftOptions& opt) {
  ShiftLeftResult out;
  double radius = opt.radius;
  const double gap = pole_gap(poles, n);
  int halvings = 0;
  while (gap < 2.0 * radius) {
    if (++halvings > opt.max_halvings) {
      throw DomainError("shift_left_asymptotics: poles overlap (gap " + std::to_string(gap) + ")");
    }
    radius *= 0.5;
  }
  for (const auto& p : poles) {
    if (std::abs(p.location.real() - left_abscissa) <= radius) {
      throw DomainError("shift_left_asymptotics: a pole sits on the left line");
    }
  }
  out.radius = radius;
  CompensatedSum<Complex> total;
  for (const auto& p : poles) {
    auto g = [&](Complex s) { return rice_kernel(n, s) * psi(s); };
    CircleOptions copt;
    copt.tol = 1e-12;
    const auto res = circle_coefficients(g, p.location, radius, -1, -1, copt);
    out.residues.push_back(res[0]);
    total.add(res[0]);
    auto terms = pole_terms(psi, p, radius);
    out.terms.insert(out.terms.end(), terms.begin(), terms.end());
  }
  out.residue_sum = total.value().real();
  AnalyticFunction left = psi;
  left.domain_abscissa = -std::numeric_limits<double>::infinity();
  RiceOptions ropt;
  ropt.tol = opt.tol;
  ropt.core_height = opt.core_height;
  out.remainder = rice_integral(left, n, left_abscissa, ropt);
  out.total = out.residue_sum + out.remainder;
  return out;
}

}  // namespace ricepath
