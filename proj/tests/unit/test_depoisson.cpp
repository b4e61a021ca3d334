#include <doctest.h>

#include "ricepath/binom.hpp"
#include "ricepath/depoisson.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/trie.hpp"

#include <cmath>
#include <sstream>

using namespace ricepath;

namespace {

// tau_j(n) from the defining alternating sum
Integer tau_oracle(int j, long n) {
  Integer acc = 0;
  for (int l = 0; l <= j && l <= n; ++l) {
    Integer falling = 1;
    for (int i = 0; i < l; ++i) falling *= Integer(n - i);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(j - l));
    const Integer term = binomial(j, l) * power * falling;
    acc += (j - l) % 2 ? Integer(-term) : term;
  }
  return acc;
}

Complex golden_P(Complex z) {
  if (std::abs(z) < 1e-3) return 0.5 - z / 3.0 + z * z / 8.0;
  return (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
}

}  // namespace

TEST_SUITE("depoisson") {

TEST_CASE("charlier tau examples") {
  for (long n = 0; n < 10; ++n) {
    CHECK(charlier_tau(0, n) == 1);
    CHECK(charlier_tau(1, n) == 0);
  }
  CHECK(charlier_tau(2, 7) == -7);
  CHECK(charlier_tau(3, 5) == 10);
}

TEST_CASE("charlier table matches the sum and has degree j/2") {
  for (int j = 0; j <= 8; ++j) {
    const auto t = charlier_table(j);
    // tau_1 is the zero polynomial
    CHECK(t.degree() == (j == 1 ? -1 : j / 2));
    for (long n = 0; n <= 15; ++n) {
      CHECK(t(n) == tau_oracle(j, n));
      CHECK(charlier_tau(j, n) == tau_oracle(j, n));
    }
  }
}

TEST_CASE("derivatives on a circle") {
  const auto d1 = poisson_derivatives([](Complex z) { return z; }, 10.0, 4);
  CHECK(std::abs(d1[0] - 10.0) < 1e-12);
  CHECK(std::abs(d1[1] - 1.0) < 1e-12);
  CHECK(std::abs(d1[2]) < 1e-12);
  const auto d2 = poisson_derivatives([](Complex z) { return z * z; }, 4.0, 3);
  CHECK(std::abs(d2[0] - 16.0) < 1e-12);
  CHECK(std::abs(d2[1] - 8.0) < 1e-12);
  CHECK(std::abs(d2[2] - 2.0) < 1e-12);
  CHECK(std::abs(d2[3]) < 1e-12);
  const auto golden = SequenceSpec::golden();
  const auto d3 = poisson_derivatives([&](Complex z) { return poisson_transform_eval(golden, z, 1e-15); }, 50.0, 2);
  CHECK(std::abs(d3[0] - poisson_transform_eval(golden, 50.0)) < 1e-10);
}

TEST_CASE("charlier estimate examples") {
  const ComplexFn lin = [](Complex z) { return z; };
  CHECK(charlier_truncated_estimate(lin, 37, 1) == doctest::Approx(37.0).epsilon(1e-12));
  const ComplexFn sq = [](Complex z) { return z * z + z; };
  CHECK(std::abs(charlier_truncated_estimate(sq, 20, 2) - 400.0) < 1e-9);
  const double exact = 1.0 / (101.0 * 102.0);
  const double e1 = std::abs(charlier_truncated_estimate(golden_P, 100, 1) - exact);
  const double e2 = std::abs(charlier_truncated_estimate(golden_P, 100, 2) - exact);
  CHECK(e2 < e1);
}

TEST_CASE("full Charlier expansion converges for tabulated f") {
  // P = e^{-z} E(z) with E(z) = sum f(k) z^k / k!; derivatives of E exactly
  const std::vector<Rational> f{0, 3, Rational(1, 2), -2, 5, 0, Rational(7, 3), 1, 4, -1, 2};
  auto E_derivative = [&](int i, long n) {
    Rational acc = 0;
    for (std::size_t k = static_cast<std::size_t>(i); k < f.size(); ++k) {
      Rational term = f[k];
      for (std::size_t m = 0; m < k - i; ++m) term = term * n / static_cast<long>(m + 1);
      acc += term;  // f(k) n^{k-i} / (k-i)!
    }
    return acc;
  };
  for (long n : {4L, 9L, 20L, 30L}) {
    // e^n sum_j P^(j)(n) tau_j(n) / j!, exact up to J
    Rational total = 0, j_fact = 1;
    const int J = static_cast<int>(4 * n + 60);
    for (int j = 0; j <= J; ++j) {
      if (j > 0) j_fact *= j;
      Rational d = 0;
      for (int i = 0; i <= j && i < static_cast<int>(f.size()); ++i) {
        const Rational term = Rational(binomial(j, i)) * E_derivative(i, n);
        d += (j - i) % 2 ? Rational(-term) : term;
      }
      total += d * Rational(charlier_tau(j, n)) / j_fact;
    }
    const double value = total.get_d() * std::exp(-static_cast<double>(n));
    const double expect = static_cast<std::size_t>(n) < f.size() ? f[n].get_d() : 0.0;
    CHECK(std::abs(value - expect) < 1e-9);
  }
}

TEST_CASE("polynomial f is exact once 2k exceeds the degree") {
  const ComplexFn cube = [](Complex z) { return z * z * z + 3.0 * z * z + z; };  // f(k) = k^3
  for (long n : {10L, 50L}) {
    CHECK(std::abs(charlier_truncated_estimate(cube, n, 2) - std::pow(n, 3)) < 1e-9 * std::pow(n, 3));
  }
}

TEST_CASE("JS scan") {
  std::vector<double> radii;
  for (double r = 10.0; r <= 1000.0; r *= 1.6) radii.push_back(r);
  const auto lin = js_admissibility_scan([](Complex z) { return std::log(z); }, pi / 4.0, radii);
  CHECK(lin.alpha == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(lin.beta) < 0.1);
  CHECK(lin.delta < 1.0);
  CHECK(lin.delta == doctest::Approx(std::cos(pi / 4.0)).epsilon(0.1));
  CHECK(lin.delta_below_one);

  const auto one = js_admissibility_scan([](Complex) { return Complex(0.0, 0.0); }, pi / 4.0, radii);
  CHECK(std::abs(one.alpha) < 0.05);
  CHECK(one.delta == doctest::Approx(std::cos(pi / 4.0)).epsilon(0.1));
  std::ostringstream os;
  one.write_csv(os);
  CHECK(os.str().find("radius") != std::string::npos);
}

TEST_CASE("JS scan of the symmetric trie with sorting toll") {
  const auto source = MemorylessSource::parse("1/2,1/2");
  const TollPoisson tp(SequenceSpec::toll(TollKind::sorting));
  std::vector<double> radii{10.0, 30.0, 100.0, 300.0, 1000.0};
  const auto rep =
      js_admissibility_scan([&](Complex z) { return trie_log_poisson_mean(source, tp, z, 1e-10); }, pi / 4.0, radii, 32);
  CHECK(rep.delta < 1.0);
  CHECK(rep.alpha == doctest::Approx(1.0).epsilon(0.15));
}

}
