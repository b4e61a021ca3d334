#include <doctest.h>

#include "ricepath/binom.hpp"
#include "ricepath/errors.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/trie.hpp"

#include <array>
#include <cmath>
#include <functional>

using namespace ricepath;

namespace {

// sum over |w| <= depth of pi_w^s by walking every prefix
double lambda_prefix_oracle(const std::vector<double>& p, double s, int depth) {
  double total = 0.0;
  std::function<void(int, double)> walk = [&](int d, double pw) {
    total += std::pow(pw, s);
    if (d == depth) return;
    for (double q : p) walk(d + 1, pw * q);
  };
  walk(0, 1.0);
  double r = 0.0;
  for (double q : p) r += std::pow(q, s);
  return total + std::pow(r, depth + 1) / (1.0 - r);  // geometric tail beyond depth
}


double poisson_of_table(const std::vector<double>& r, double z) {
  double acc = 0.0, term = std::exp(-z);
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (n > 0) term *= z / static_cast<double>(n);
    acc += r[n] * term;
  }
  return acc;
}

}  // namespace

TEST_SUITE("trie") {

TEST_CASE("source validation") {
  CHECK_THROWS_AS(MemorylessSource::parse("1,0"), DomainError);
  CHECK_THROWS_AS(MemorylessSource::parse("1/2,1/3"), DomainError);
  CHECK_THROWS_AS(MemorylessSource::parse("1"), DomainError);
  CHECK(MemorylessSource::parse("1/3,1/3,1/3").symmetric());
  CHECK(!MemorylessSource::parse("1/3,2/3").symmetric());
}

TEST_CASE("Lambda") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  CHECK(lambda_exact(half, 2) == 2);
  CHECK(std::abs(lambda_series(half, 2.0) - 2.0) < 1e-15);
  const auto third = MemorylessSource::parse("1/3,2/3");
  CHECK(lambda_exact(third, 3) == Rational(3, 2));
  CHECK_THROWS_AS(lambda_series(half, 1.0), PoleError);
  CHECK_THROWS_AS(lambda_series(half, 0.5), DomainError);
  // residue 1/h at s = 1
  const double eps = 1e-7;
  CHECK((eps * lambda_series(half, 1.0 + eps)).real() == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-6));
  for (const char* spec : {"1/2,1/2", "1/3,2/3", "1/5,3/10,1/2"}) {
    const auto src = MemorylessSource::parse(spec);
    for (double s : {2.0, 3.0, 4.0}) {
      const double oracle = lambda_prefix_oracle(src.probs_double(), s, src.size() == 2 ? 22 : 14);
      CHECK(std::abs(lambda_series(src, s).real() - oracle) < 1e-10 * oracle);
    }
  }
}

TEST_CASE("entropy") {
  CHECK(entropy(MemorylessSource::parse("1/2,1/2")) == doctest::Approx(std::log(2.0)));
  CHECK(entropy(MemorylessSource::parse("1/3,2/3")) == doctest::Approx(0.636514).epsilon(1e-6));
}

TEST_CASE("recurrence spot values and base cases") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  for (auto kind : {TollKind::size, TollKind::pathlength, TollKind::sorting}) {
    const auto toll = SequenceSpec::toll(kind);
    const auto r = exact_mean_recurrence(half, toll, 5, MeanMode::floating);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
  }
  CHECK(exact_mean_recurrence_exact(half, SequenceSpec::toll(TollKind::size), 2)[2] == 2);
  CHECK(exact_mean_recurrence_exact(half, SequenceSpec::toll(TollKind::pathlength), 2)[2] == 4);
  CHECK(mean_via_rice_pair_exact(half, SequenceSpec::toll(TollKind::size), 2) == 2);
  CHECK(mean_via_rice_pair_exact(half, SequenceSpec::toll(TollKind::pathlength), 2) == 4);
  CHECK_THROWS_AS(exact_mean_recurrence_exact(MemorylessSource::parse("1/3,1/3,1/3"), SequenceSpec::toll(TollKind::size), 4),
                  DomainError);
}

TEST_CASE("dual route for tabulated tolls and ternary sources") {
  const auto third = MemorylessSource::parse("1/3,2/3");
  const auto custom = SequenceSpec::parse("tab 0 0 3 1/2 7 2 0 5 1/3 4 1 1 2 9 1/5 3 3 2 1 8 6");
  const auto r = exact_mean_recurrence_exact(third, custom, 20);
  for (long n = 0; n <= 20; ++n) CHECK(r[n] == mean_via_rice_pair_exact(third, custom, n));
  // float routes
  const auto rf = exact_mean_recurrence_float(third, custom, 20);
  for (long n = 2; n <= 20; ++n) CHECK(rf[n] == doctest::Approx(r[n].get_d()).epsilon(1e-13));
  // a ternary source through the Rice pair only: r(2) = Lambda(2) f(2)
  const auto tern = MemorylessSource::parse("1/3,1/3,1/3");
  CHECK(mean_via_rice_pair_exact(tern, SequenceSpec::toll(TollKind::size), 2) == Rational(3, 2));
}

TEST_CASE("float Rice pair with a logarithmic toll") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  const auto toll = SequenceSpec::toll(TollKind::sorting);
  const auto r = exact_mean_recurrence_float(half, toll, 40);
  for (long n : {2L, 10L, 25L, 40L}) CHECK(mean_via_rice_pair_float(half, toll, n) == doctest::Approx(r[n]).epsilon(1e-12));
  CHECK_THROWS_AS(mean_via_rice_pair_float(half, toll, 41), RangeError);
}

TEST_CASE("monotone means") {
  const auto third = MemorylessSource::parse("1/3,2/3");
  for (auto kind : {TollKind::size, TollKind::pathlength, TollKind::sorting}) {
    const auto r = exact_mean_recurrence_float(third, SequenceSpec::toll(kind), 300);
    for (std::size_t n = 1; n < r.size(); ++n) CHECK(r[n] >= r[n - 1]);
  }
}

TEST_CASE("harmonic sum matches the Poisson transform of the recurrence") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  const auto size = SequenceSpec::toll(TollKind::size);
  const auto rs = exact_mean_recurrence_float(half, size, 200);
  CHECK(poisson_mean_harmonic(half, size, 1.0).value == doctest::Approx(poisson_of_table(rs, 1.0)).epsilon(1e-8));
  const auto path = SequenceSpec::toll(TollKind::pathlength);
  const auto rp = exact_mean_recurrence_float(half, path, 200);
  CHECK(poisson_mean_harmonic(half, path, 8.0).value == doctest::Approx(poisson_of_table(rp, 8.0)).epsilon(1e-7));
  const auto third = MemorylessSource::parse("1/3,2/3");
  const auto sort = SequenceSpec::toll(TollKind::sorting);
  const auto rt = exact_mean_recurrence_float(third, sort, 300);
  CHECK(poisson_mean_harmonic(third, sort, 20.0).value == doctest::Approx(poisson_of_table(rt, 20.0)).epsilon(1e-7));
  // O(z^2) near 0
  const double small = poisson_mean_harmonic(half, size, 1e-3).value;
  CHECK(small / 1e-6 == doctest::Approx(poisson_mean_harmonic(half, size, 2e-3).value / 4e-6).epsilon(0.01));
}

TEST_CASE("toll Poisson transform") {
  for (auto kind : {TollKind::size, TollKind::pathlength, TollKind::sorting}) {
    const auto toll = SequenceSpec::toll(kind);
    const TollPoisson tp(toll);
    for (const Complex x : {Complex(0.5, 0.2), Complex(3.0, 0.0), Complex(12.0, 9.0), Complex(60.0, -20.0)}) {
      const Complex ref = poisson_transform_eval(toll, x, 1e-14);
      CHECK(std::abs(tp.P(x) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
  // sum f(k) x^k / k! at x = -4+i and -15+6i, mpmath at 40 digits
  const std::vector<std::pair<TollKind, std::array<Complex, 2>>> frozen = {
      {TollKind::size, {Complex(3.00989598192503125, -0.984587921306911042),
                        Complex(14.0000002937183188, -6.00000008547384928)}},
      {TollKind::pathlength, {Complex(3.94500399360678604, -1.05175233284732458),
                              Complex(14.9999961070683143, -5.99999695558234817)}},
      {TollKind::sorting, {Complex(0.717229807794862446, 0.0551076317502000076),
                           Complex(0.333756151319602449, 0.0500203856136542873)}}};
  for (const auto& [kind, ref] : frozen) {
    const TollPoisson tp(SequenceSpec::toll(kind));
    CHECK(std::abs(tp.E(Complex(-4.0, 1.0)) - ref[0]) < 1e-10 * std::abs(ref[0]));
    CHECK(std::abs(tp.E(Complex(-15.0, 6.0)) - ref[1]) < 1e-10 * std::abs(ref[1]));
  }
}

TEST_CASE("log Poisson mean agrees with the harmonic sum") {
  const auto third = MemorylessSource::parse("1/3,2/3");
  const auto toll = SequenceSpec::toll(TollKind::sorting);
  const TollPoisson tp(toll);
  for (double z : {2.0, 15.0}) {
    const double ref = poisson_mean_harmonic(third, toll, z).value;
    CHECK(std::exp(trie_log_poisson_mean(third, tp, z).real()) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("simulation") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  const auto size = SequenceSpec::toll(TollKind::size);
  const auto zero = simulate_trie(half, size, 1, 50, 42);
  CHECK(zero.mean == 0.0);
  CHECK(zero.std_error == 0.0);
  const auto a = simulate_trie(half, size, 2, 100000, 42);
  CHECK(std::abs(a.mean - 2.0) < 3.0 * a.std_error);
  // threads do not change the result
  const auto b = simulate_trie(half, size, 40, 2000, 9, 1);
  const auto c = simulate_trie(half, size, 40, 2000, 9, 4);
  CHECK(b.mean == c.mean);
  CHECK(b.std_error == c.std_error);
  const auto sort = SequenceSpec::toll(TollKind::sorting);
  const auto exact = exact_mean_recurrence_float(half, sort, 256);
  const auto s = simulate_trie(half, sort, 256, 10000, 42, 4);
  CHECK(std::abs(s.mean - exact[256]) < 3.0 * s.std_error);
}

TEST_CASE("fit sanity") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  std::vector<long> grid;
  for (long n = 256; n <= 4096; n += 16) grid.push_back(n);
  const auto path = asymptotic_constant_fit(half, SequenceSpec::toll(TollKind::pathlength), grid);
  CHECK(std::abs(path.c_fit) < 0.02);
  CHECK_THROWS_AS(asymptotic_constant_fit(half, SequenceSpec::toll(TollKind::sorting), {100, 50, 200}), DomainError);
}

TEST_CASE("toll liftings") {
  const auto size = toll_pi_lifting(SequenceSpec::toll(TollKind::size));
  const auto path = toll_pi_lifting(SequenceSpec::toll(TollKind::pathlength));
  for (const Complex s : {Complex(0.5, 2.0), Complex(2.5, -1.0), Complex(7.0, 0.0)}) {
    CHECK(std::abs(size(s) - (s - 1.0)) < 1e-10 * std::abs(s));
    CHECK(std::abs(path(s) - s) < 1e-10 * std::abs(s));
  }
  const auto sort = SequenceSpec::toll(TollKind::sorting);
  const auto lift = toll_pi_lifting(sort);
  const auto exact = pi_transform(SequenceSpec::tabulated(std::vector<Rational>{0, 0, 1}).exact_table(2));
  CHECK(exact.size() == 3);
  for (long k = 2; k <= 12; ++k) {
    double p = 0.0, c = 1.0;
    for (long j = 0; j <= k; ++j) {
      p += (j % 2 ? -c : c) * sort.value(j);
      c = c * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    CHECK(lift(static_cast<double>(k)).real() == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("trie Rice integral reproduces the mean") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  const auto toll = SequenceSpec::toll(TollKind::sorting);
  const auto q = trie_rice_integrand(half, toll);
  const auto r = exact_mean_recurrence_float(half, toll, 30);
  for (long n : {5L, 12L, 30L}) CHECK(rice_integral(q, n, 1.5) == doctest::Approx(r[n]).epsilon(1e-8));
}

TEST_CASE("trie poles") {
  const auto half = MemorylessSource::parse("1/2,1/2");
  const auto poles = trie_poles(half, SequenceSpec::toll(TollKind::sorting), 2);
  REQUIRE(poles.size() == 5);
  CHECK(poles[0].order == 3);
  CHECK(poles[1].location.imag() == doctest::Approx(2.0 * M_PI / std::log(2.0)));
  CHECK(trie_poles(half, SequenceSpec::toll(TollKind::pathlength), 1)[0].order == 2);
  CHECK(trie_poles(half, SequenceSpec::toll(TollKind::size), 1)[0].order == 1);
  CHECK_THROWS_AS(trie_poles(MemorylessSource::parse("1/3,2/3"), SequenceSpec::toll(TollKind::size)), DomainError);
}

}
