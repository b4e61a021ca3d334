#include <doctest.h>

#include "ricepath/binom.hpp"
#include "ricepath/errors.hpp"
#include "ricepath/seqcore.hpp"

#include <cmath>
#include <random>

using namespace ricepath;

namespace {

// independent oracle: binomials from the multiplicative formula
ExactTable pi_oracle(const ExactTable& f) {
  ExactTable p(f.size(), Rational(0));
  for (std::size_t n = 0; n < f.size(); ++n) {
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) c = c * Integer(static_cast<unsigned long>(n - k + 1)) / Integer(static_cast<unsigned long>(k));
      p[n] += (k % 2 ? -1 : 1) * Rational(c) * f[k];
    }
  }
  return p;
}

}  // namespace

TEST_SUITE("binom") {

TEST_CASE("pi_transform examples") {
  const ExactTable ones(12, Rational(1));
  const auto p1 = pi_transform(ones);
  CHECK(p1[0] == 1);
  for (int n = 1; n < 12; ++n) CHECK(p1[n] == 0);

  const auto golden = SequenceSpec::golden().exact_table(20);
  const auto pg = pi_transform(golden);
  for (int n = 0; n <= 20; ++n) CHECK(pg[n] == Rational(1, n + 2));

  const auto size = SequenceSpec::toll(TollKind::size).exact_table(6);
  const auto ps = pi_transform(size);
  CHECK(ps[2] == 1);
  CHECK(ps[3] == 2);
}

TEST_CASE("pi_transform matches the multiplicative oracle") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  ExactTable f(40);
  for (auto& v : f) {
    v = Rational(num(gen), den(gen));
    v.canonicalize();
  }
  CHECK(pi_transform(f) == pi_oracle(f));
}

TEST_CASE("involution") {
  CHECK(pi_involution_check(ExactTable{Rational(1)}));
  ExactTable sq(33);
  for (int k = 0; k <= 32; ++k) sq[k] = k * k;
  CHECK(pi_involution_check(sq));
}

TEST_CASE("commutation with T needs valuation m") {
  ExactTable f{0, 0, 0, Rational(2, 3), -5, Rational(1, 7), 4, 9, Rational(-3, 2), 1, 0, 2};
  for (int m = 1; m <= 3; ++m) {
    const auto lhs = pi_transform(shift_table(f, m));
    const auto rhs = shift_table(pi_transform(f), m);
    for (std::size_t n = 0; n < lhs.size(); ++n) CHECK(lhs[n] == (m % 2 ? Rational(-rhs[n]) : rhs[n]));
  }
  // with f(0) != 0 the identity picks up f(0)/(n+1)
  ExactTable g = f;
  g[0] = 5;
  const auto lhs = pi_transform(shift_table(g, 1));
  const auto rhs = shift_table(pi_transform(g), 1);
  for (std::size_t n = 0; n < lhs.size(); ++n) CHECK(lhs[n] == -rhs[n] + Rational(5, static_cast<long>(n) + 1));
}

TEST_CASE("pi preserves valuation") {
  ExactTable f{0, 0, 0, 3, Rational(1, 2), 7, 1};
  const auto p = pi_transform(f);
  CHECK(p[0] == 0);
  CHECK(p[1] == 0);
  CHECK(p[2] == 0);
  CHECK(p[3] != 0);
}

TEST_CASE("poisson transform") {
  const auto one = SequenceSpec::parse("basic d=0 b=0");
  // basic(0,0) vanishes at 0 and 1: P = 1 - e^{-z}(1 + z)
  const double z = 5.0;
  CHECK(poisson_transform_eval(one, z).real() == doctest::Approx(1.0 - std::exp(-z) * (1.0 + z)).epsilon(1e-13));

  const auto lin = SequenceSpec::parse("basic d=1 b=0");
  const Complex w(3.0, 4.0);
  // k for k >= 2: P = z - z e^{-z}
  CHECK(std::abs(poisson_transform_eval(lin, w) - (w - w * std::exp(-w))) < 1e-12);

  const auto golden = SequenceSpec::golden();
  // exact partial sum of e^{-10} sum f(k) 10^k / k! in rationals
  Rational acc = 0, power = 1;
  for (long k = 0; k < 120; ++k) {
    if (k > 0) power = power * 10 / k;
    acc += golden.exact_value(k) * power;
  }
  const double expect = acc.get_d() * std::exp(-10.0);
  const auto r = poisson_transform(golden, 10.0, 1e-12);
  CHECK(std::abs(r.value.real() - expect) < 1e-12);
  CHECK(r.tail_bound < 1e-12);
  CHECK(std::abs(r.value.real() - (1.0 - std::exp(-10.0) * 11.0) / 100.0) < 1e-14);
}

TEST_CASE("poisson transform truncation stays below the cap") {
  const auto f = SequenceSpec::basic(3.0, 2);
  for (double r : {0.5, 20.0, 300.0}) {
    const auto res = poisson_transform(f, Complex(0.6 * r, 0.8 * r), 1e-12);
    CHECK(res.terms <= static_cast<long>(16.0 * (r + 10.0)) + 20 * 7);
    CHECK(res.tail_bound < 1e-12);
  }
  CHECK_THROWS_AS(poisson_transform(f, 1.0, 0.0), DomainError);
}

}
