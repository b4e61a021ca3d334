#include <doctest.h>

#include "ricepath/errors.hpp"
#include "ricepath/laplace.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/special.hpp"

#include <cmath>

using namespace ricepath;

namespace {

AnalyticFunction handle(ComplexFn f, double domain) {
  AnalyticFunction h;
  h.eval = std::move(f);
  h.domain_abscissa = domain;
  return h;
}

std::vector<double> t_grid() {
  std::vector<double> t;
  for (double x = 4.0; x <= 40.0; x += 2.0) t.push_back(x);
  return t;
}

}  // namespace

TEST_SUITE("laplace") {

TEST_CASE("bromwich inverse") {
  const auto a = handle([](Complex s) { return 1.0 / ((s + 1.0) * (s + 2.0)); }, -1.0);
  CHECK(bromwich_inverse(a, 1.0, -0.5) == doctest::Approx(std::exp(-1.0) - std::exp(-2.0)).epsilon(1e-8));
  const auto b = handle([](Complex s) { return 1.0 / ((s + 2.0) * (s + 2.0)); }, -2.0);
  CHECK(bromwich_inverse(b, 1.0, -0.5) == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
  const auto c = handle([](Complex s) { return 1.0 / ((s + 1.0) * (s + 1.0) * (s + 1.0)); }, -1.0);
  CHECK(bromwich_inverse(c, 2.0, -0.5) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-8));
  CHECK_THROWS_AS(bromwich_inverse(a, 0.0, -0.5), DomainError);
}

TEST_CASE("hat_phi closed form") {
  const auto f1 = make_hat_phi_form(1, -2.0, 0, {1.0});
  CHECK(hat_phi_closed_form(f1, 0.7) == doctest::Approx(std::exp(-0.7) * 0.7).epsilon(1e-14));

  const auto golden = make_hat_phi_form(BasicPair{0.0, 0});
  for (double u = 0.05; u < 3.0; u += 0.1) {
    CHECK(hat_phi_closed_form(golden, u) == doctest::Approx(std::exp(-u) - std::exp(-2.0 * u)).epsilon(1e-13));
  }
  const auto phi = handle([](Complex s) { return 1.0 / ((s + 2.0) * (s + 1.0)); }, -1.0);
  CHECK(hat_phi_closed_form(golden, 0.5) == doctest::Approx(bromwich_inverse(phi, 0.5, -0.5)).epsilon(1e-8));
}

TEST_CASE("hat_phi agrees with Bromwich inversion of the canonical lifting") {
  for (const BasicPair pair : {BasicPair{1.0, 0}, BasicPair{1.0, 1}, BasicPair{0.5, 2}}) {
    const auto form = make_hat_phi_form(pair);
    const auto phi = handle([pair](Complex s) { return lifting_phi(pair, s); }, -1.0);
    for (double u : {0.3, 1.0, 2.5}) {
      CHECK(hat_phi_closed_form(form, u) == doctest::Approx(bromwich_inverse(phi, u, -0.5, 1e-11)).epsilon(1e-7));
    }
  }
}

TEST_CASE("analytic and Richardson derivative schemes agree") {
  for (int b : {1, 2, 3}) {
    const auto form = make_hat_phi_form(BasicPair{1.0, b});
    for (double u : {0.2, 1.0, 3.0}) {
      const double a = hat_phi_closed_form(form, u, DerivativeScheme::analytic);
      const double r = hat_phi_closed_form(form, u, DerivativeScheme::richardson);
      CHECK(std::abs(a - r) <= 1e-7 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("V_c correction bound") {
  for (const BasicPair pair : {BasicPair{0.0, 0}, BasicPair{1.0, 0}, BasicPair{1.5, 0}}) {
    const auto form = make_hat_phi_form(pair);
    double worst = 0.0;
    for (double u = 0.05; u <= 5.0; u += 0.05) {
      const auto [main, rest] = hat_phi_parts(form, u);
      worst = std::max(worst, std::abs(rest / main) / (u * std::exp((form.ell - 1) * u)));
    }
    CHECK(worst < 10.0);
  }
}

TEST_CASE("G_ratio") {
  CHECK(G_ratio(1, -2.0) == doctest::Approx(0.5));
  CHECK(G_ratio(3, -2.0) == doctest::Approx(1.0 / 24.0));
  double fact = 1.0;
  for (int j = 1; j <= 12; ++j) {
    fact *= j;
    for (double c : {-1.01, -1.5, -2.0, -3.7}) {
      CHECK(G_ratio(j, c) > 0.0);
      CHECK(G_ratio(j, c) <= 1.0 / fact * (1.0 + 1e-14));
    }
  }
}

TEST_CASE("psi_via_laplace") {
  const RealFn e1 = [](double u) { return std::exp(-u); };
  CHECK(std::abs(psi_via_laplace(e1, 3.0) - 0.25) < 1e-12);
  const RealFn g = [](double u) { return std::exp(-u) - std::exp(-2.0 * u); };
  CHECK(std::abs(psi_via_laplace(g, 5.0) - 1.0 / 7.0) < 1e-12);
  CHECK(std::abs(psi_via_laplace(g, 0.0) - 0.5) < 1e-12);
}

TEST_CASE("N_s and M_s near 0 and infinity") {
  for (const Complex s : {Complex(0.5, 0.0), Complex(2.0, 3.0), Complex(-0.5, 1.0)}) {
    for (double u : {1e-6, 1e-4, 1e-2}) {
      const Complex N = std::pow((1.0 - std::exp(-u)) / u, s);
      CHECK(std::abs(N) == doctest::Approx(1.0).epsilon(0.1));
      CHECK(std::abs(N - 1.0) / u == doctest::Approx(std::abs(s) / 2.0).epsilon(0.1));
    }
    for (double u : {10.0, 100.0, 1000.0}) {
      const Complex N = std::pow((1.0 - std::exp(-u)) / u, s);
      CHECK(std::abs(N) <= 2.0 * std::pow(u, -s.real()));
    }
  }
}

TEST_CASE("twisted gamma") {
  CHECK(std::abs(twisted_gamma({2, 0}, 1.0) - 0.5) < 1e-13);
  CHECK(std::abs(twisted_gamma({1, 1}, 1.0) + euler_gamma) < 1e-12);
  CHECK(std::abs(twisted_gamma({1, 2}, 1.0) - 1.9781119906559452) < 1e-12);
  CHECK(std::abs(twisted_gamma({1, 0}, Complex(2.5, 1.0)) - gamma(Complex(2.5, 1.0))) < 1e-12);
  const Complex oracle(0.0232578996380254873, -0.0111951807429087930);
  CHECK(std::abs(twisted_gamma({2, 1}, Complex(0.5, 3.0)) - oracle) < 1e-12);
  CHECK(std::abs(twisted_gamma_closed_form({2, 1}, Complex(0.5, 3.0)) - oracle) < 1e-12);
  CHECK_THROWS_AS(twisted_gamma({1, 0}, Complex(-0.5, 0.0)), DomainError);
}

TEST_CASE("rational canonical psi agrees with the integral route") {
  for (double d : {0.0, 2.0, 3.0}) {
    const CanonicalPsi psi(BasicPair{d, 0});
    for (const Complex s : {Complex(0.3, 0.0), Complex(-0.5, 2.0), Complex(2.5, 7.0), Complex(4.0, 0.0), Complex(-1.0, 0.0),
                            Complex(-1.0004, 0.0002)}) {
      const Complex slow = psi.main(s) + psi.regular(s);
      CHECK(std::abs(psi.psi(s) - slow) < 1e-12 * std::abs(slow));
    }
  }
  // golden: 1/(s+2)
  const CanonicalPsi golden(BasicPair{0.0, 0});
  CHECK(std::abs(golden.psi(Complex(-0.5, 1e4)) - 1.0 / Complex(1.5, 1e4)) < 1e-18);
}

TEST_CASE("canonical psi matches the Newton series") {
  for (const BasicPair pair : {BasicPair{0.0, 0}, BasicPair{1.0, 0}, BasicPair{1.0, 1}}) {
    const CanonicalPsi cp(pair);
    const auto canonical = canonicalize(SequenceSpec::basic(pair.d, pair.b));
    const NewtonPsi newton(canonical.sequence);
    // the tabulated canonical sequence carries the sentinel at index 0
    const double delta = canonical.sequence.value(0) - lifting_phi(pair, 0.0).real();
    const auto form = cp.form();
    const RealFn hat = [&form](double u) { return hat_phi_closed_form(form, u); };
    double worst = 0.0;
    for (int j = 0; j < 40; ++j) {
      const Complex s(-1.0 + 4.0 * (j + 1) / 40.0, (j % 5) * 0.5);
      const Complex lap = psi_via_laplace(hat, s);
      worst = std::max({worst, std::abs(newton(s) - delta - lap), std::abs(cp.psi(s) - lap)});
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("canonical psi continues left of the Laplace domain") {
  const CanonicalPsi golden(BasicPair{0.0, 0});
  for (const Complex s : {Complex(-1.5, 0.0), Complex(-2.5, 1.0), Complex(-2.9, -4.0)}) {
    CHECK(std::abs(golden.psi(s) - 1.0 / (s + 2.0)) < 1e-10);
  }
}

TEST_CASE("singular expansion") {
  const auto e00 = psi_singular_expansion(0.0, 0);
  CHECK(e00.canonical_pole.order == 1);
  CHECK(e00.canonical_pole.location.real() == doctest::Approx(-2.0));
  CHECK(e00.lifted_pole.order == 0);
  CHECK(e00.lifted_order_numeric == 0);
  // Gamma_2(s + 2) has residue 1 at s = -2
  CHECK(std::abs(e00.kappa[0] - 1.0) < 1e-12);

  const auto e10 = psi_singular_expansion(1.0, 0);
  CHECK(e10.lifted_order_numeric == 0);
  CHECK(e10.lifted_pole.order == 0);

  const auto e11 = psi_singular_expansion(1.0, 1);
  CHECK(e11.lifted_pole.order == 1);
  CHECK(e11.lifted_order_numeric == 1);
  CHECK(e11.a.size() == 2);

  const auto e05 = psi_singular_expansion(0.5, 2);
  CHECK(e05.lifted_pole.order == 3);
  CHECK(e05.lifted_order_numeric == 3);

  // Laurent data of Psi at s = 1 come from the main part alone
  const auto full = laurent_coefficients([&](Complex s) { return e11.psi->Psi(s); }, 1.0, 2, 0.25);
  const auto main = laurent_coefficients([&](Complex s) { return e11.psi->Psi_main(s); }, 1.0, 2, 0.25);
  CHECK(std::abs(full[0] - main[0]) < 1e-9);
  CHECK(std::abs(full[1] - main[1]) < 1e-9);
  CHECK(std::abs(e11.remainder(Complex(1.3, 0.4))) < 1e3);
}

TEST_CASE("tameness probe") {
  const auto t = t_grid();
  const auto g2 = handle([](Complex s) { return twisted_gamma_closed_form({2, 0}, s); }, 0.0);
  const auto r1 = tameness_probe(g2, 0.5, 0.4, t);
  CHECK(r1.classification == GrowthClass::exponential_decay);
  CHECK(r1.exp_rate == doctest::Approx(-pi / 2.0).epsilon(0.05));

  const auto inv = handle([](Complex s) { return 1.0 / (s + 2.0); }, -2.0);
  // |2.5 + it|^-1 only looks like t^-1 once t >> 2.5
  std::vector<double> far;
  for (double x = 200.0; x <= 2000.0; x += 100.0) far.push_back(x);
  const auto r2 = tameness_probe(inv, 0.5, 0.4, far);
  CHECK(r2.classification == GrowthClass::polynomial);
  CHECK(r2.poly_exponent == doctest::Approx(-1.0).epsilon(0.05));

  const auto rg = handle([](Complex s) { return rgamma(-s); }, -INFINITY);
  const auto r3 = tameness_probe(rg, 0.5, 0.4, t);
  CHECK(r3.classification == GrowthClass::exponential_growth);
  CHECK(!r3.tame);
  CHECK(r3.exp_rate == doctest::Approx(pi / 2.0).epsilon(0.05));
}

TEST_CASE("Poisson transform through the Laplace density") {
  const RealFn g = [](double u) { return std::exp(-u) - std::exp(-2.0 * u); };
  for (const Complex x : {Complex(3.0, 0.0), Complex(10.0, 5.0), Complex(40.0, -30.0)}) {
    const Complex expect = (1.0 - std::exp(-x) * (1.0 + x)) / (x * x);
    CHECK(std::abs(poisson_via_laplace(g, x) - expect) < 1e-11);
  }
  for (const Complex x : {Complex(-6.0, 2.0), Complex(-20.0, -10.0)}) {
    const Complex expect = (std::exp(x) - (1.0 + x)) / (x * x);
    CHECK(std::abs(poisson_exp_via_laplace(g, x) - expect) < 1e-11 * std::max(1.0, std::abs(expect)));
  }
}

}
