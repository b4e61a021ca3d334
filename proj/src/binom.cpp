#include "ricepath/binom.hpp"

#include "ricepath/errors.hpp"

#include <cmath>
#include <ostream>

namespace ricepath {

ExactTable pi_transform(const ExactTable& f) {
  const std::size_t n = f.size();
  if (n == 0) return {};
  // Bring f to a common denominator so the inner sums stay integral.
  Integer denom = 1;
  for (const auto& v : f) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> num(n);
  for (std::size_t k = 0; k < n; ++k) {
    num[k] = f[k].get_num() * (denom / f[k].get_den());
    if (k % 2 == 1) num[k] = -num[k];
  }
  ExactTable out(n);
  std::vector<Integer> row(n);
  row[0] = 1;
  Integer acc;
  for (std::size_t m = 0; m < n; ++m) {
    if (m > 0) {
      for (std::size_t k = m; k >= 1; --k) row[k] += row[k - 1];
    }
    acc = 0;
    for (std::size_t k = 0; k <= m; ++k) mpz_addmul(acc.get_mpz_t(), row[k].get_mpz_t(), num[k].get_mpz_t());
    out[m] = Rational(acc, denom);
    out[m].canonicalize();
  }
  return out;
}

bool pi_involution_check(const ExactTable& f) { return pi_transform(pi_transform(f)) == f; }

ExactTable shift_table(const ExactTable& f, int m) {
  if (m < 0) throw DomainError("shift_table: m must be nonnegative");
  if (static_cast<std::size_t>(m) >= f.size()) return {};
  ExactTable out(f.size() - m);
  for (std::size_t n = 0; n < out.size(); ++n) {
    Integer denom = 1;
    for (int i = 1; i <= m; ++i) denom *= static_cast<unsigned long>(n + i);
    out[n] = f[n + m] / Rational(denom);
  }
  return out;
}

PoissonResult poisson_transform(const SequenceSpec& f, Complex z, double tol) {
  if (!(tol > 0.0)) throw DomainError("poisson_transform: tol must be positive");
  PoissonResult out;
  const double r = std::abs(z);
  if (r == 0.0) {
    out.value = f.value(0);
    out.terms = 1;
    return out;
  }
  const double deg = std::max(0.0, f.degree());
  // polynomial growth exponent for the envelope (logarithms absorbed)
  const double growth = std::ceil(deg) + f.log_power() + 1.0;
  const long cap = static_cast<long>(16.0 * (r + 10.0)) + static_cast<long>(20.0 * (growth + 1.0));
  const double log_r = std::log(r);
  const Complex log_z = std::log(z);
  CompensatedSum<Complex> sum;
  double envelope = 0.0;  // polynomially growing majorant of |f(k)|
  for (long k = 0; k <= cap; ++k) {
    const double fk = f.value(k);
    if (k > 0) envelope *= std::pow(static_cast<double>(k) / std::max<double>(k - 1, 1), growth);
    envelope = std::max(envelope, std::abs(fk));
    const double log_fact = std::lgamma(static_cast<double>(k) + 1.0);
    if (fk != 0.0) sum.add(fk * exp_log(static_cast<double>(k) * log_z - log_fact - z));
    // tail after index k, geometric with ratio rho once k + 1 > |z|
    const double kk = static_cast<double>(k) + 1.0;
    const double rho = r / kk * std::pow(1.0 + 1.0 / kk, growth);
    if (rho < 1.0 && envelope > 0.0) {
      const double log_term = std::log(envelope) + k * log_r - log_fact - z.real();
      const double bound = std::exp(log_term) * rho / (1.0 - rho);
      if (bound < tol) {
        out.value = sum.value();
        out.terms = k + 1;
        out.tail_bound = bound;
        return out;
      }
    } else if (envelope == 0.0 && f.is_tabulated() &&
               static_cast<std::size_t>(k) + 1 >= f.as_tabulated()->values.size()) {
      out.terms = k + 1;
      return out;
    }
  }
  throw ToleranceUnreachable("poisson_transform: tail bound above tolerance at term cap " + std::to_string(cap));
}

Complex poisson_transform_eval(const SequenceSpec& f, Complex z, double tol) {
  return poisson_transform(f, z, tol).value;
}

void write_transform_csv(std::ostream& os, const ExactTable& f, const ExactTable& p, const ExactTable* p2) {
  os << (p2 ? "n,f,pi,pi2\n" : "n,f,pi\n");
  for (std::size_t n = 0; n < f.size(); ++n) {
    os << n << ',' << to_string(f[n]) << ',' << to_string(p[n]);
    if (p2) os << ',' << to_string((*p2)[n]);
    os << '\n';
  }
}

}  // namespace ricepath
