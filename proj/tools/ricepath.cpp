#include "ricepath/binom.hpp"
#include "ricepath/csv.hpp"
#include "ricepath/depoisson.hpp"
#include "ricepath/errors.hpp"
#include "ricepath/laplace.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/special.hpp"
#include "ricepath/trie.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ricepath;

namespace {

constexpr int exit_numeric = 1;
constexpr int exit_usage = 2;

// Bad flag values surface as this; numeric trouble as any other Error.
struct UsageError : Error {
  using Error::Error;
};

struct Common {
  double tol = 0.0;
  std::string out;
  std::uint64_t seed = 1;
  int threads = 1;
};

void add_common(CLI::App* sub, Common& c, double default_tol) {
  c.tol = default_tol;
  sub->add_option("--tol", c.tol, "numeric tolerance")->capture_default_str();
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

csv::Flags common_flags(const Common& c) {
  return {{"tol", csv::fmt(c.tol)}, {"out", c.out.empty() ? "-" : c.out}, {"seed", std::to_string(c.seed)},
          {"threads", std::to_string(c.threads)}};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

double to_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad number in " + what + ": '" + text + "'");
}

long to_integer(const std::string& text, const std::string& what) {
  const double v = to_number(text, what);
  if (v != std::floor(v)) throw UsageError(what + " expects integers");
  return static_cast<long>(v);
}

// "a:b", inclusive
std::pair<long, long> parse_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError(what + " expects lo:hi");
  const long lo = to_integer(parts[0], what), hi = to_integer(parts[1], what);
  if (lo < 0 || hi < lo) throw UsageError(what + " needs 0 <= lo <= hi");
  return {lo, hi};
}

// "lo:hi:step"; points are lo + i*step so no drift accumulates
std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(what + " expects lo:hi:step");
  const double lo = to_number(parts[0], what), hi = to_number(parts[1], what), step = to_number(parts[2], what);
  if (!(step > 0.0) || hi < lo) throw UsageError(what + " needs step > 0 and lo <= hi");
  const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError(what + " has too many points");
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(to_number(p, what));
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

SequenceSpec parse_spec(const std::string& text) {
  try {
    return SequenceSpec::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// "size", "pathlength", "sorting [b=2]" or any sequence spec such as "tab 0 0 1 3"
SequenceSpec parse_toll(const std::string& text) {
  const auto head = text.substr(0, text.find(' '));
  const bool named = head == "size" || head == "pathlength" || head == "sorting";
  const auto toll = parse_spec(named ? "toll " + text : text);
  try {
    check_toll(toll);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return toll;
}

MemorylessSource parse_source(const std::string& text) {
  try {
    return MemorylessSource::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
  Common common;
  std::string spec;
  long N = 20;
  bool canonical = false;
};

int run_transform(const TransformArgs& a, std::ostream& os) {
  auto f = parse_spec(a.spec);
  if (a.N < 0) throw UsageError("--N must be nonnegative");
  if (a.canonical) f = canonicalize(f).sequence;
  if (!f.exact()) throw DomainError("transform needs exact values; " + f.to_string() + " is not exact");
  const auto table = f.exact_table(a.N);
  const auto p = pi_transform(table);
  const auto p2 = pi_transform(p);
  const bool ok = p2 == table;
  auto flags = csv::Flags{{"spec", a.spec}, {"N", std::to_string(a.N)}, {"canonical", a.canonical ? "1" : "0"}};
  for (auto& kv : common_flags(a.common)) flags.push_back(kv);
  csv::write_header(os, "transform", flags);
  os << "# sequence: " << f.to_string() << "\n# involution: " << (ok ? "ok" : "FAILED") << '\n';
  write_transform_csv(os, table, p, &p2);
  return ok ? 0 : exit_numeric;
}

// --------------------------------------------------------------------- rice

struct RiceArgs {
  Common common;
  std::string spec;
  std::string n_range = "0:30";
  double abscissa = -0.5;
};

int run_rice(const RiceArgs& a, std::ostream& os) {
  const auto f = parse_spec(a.spec);
  const auto [lo, hi] = parse_range(a.n_range, "--n");
  if (!(a.abscissa < 0.0) || a.abscissa == std::round(a.abscissa)) {
    throw UsageError("--abscissa must be negative and not an integer");
  }
  const double quad_tol = std::min(1e-10, a.common.tol * 1e-2);
  AnalyticFunction psi;
  double delta = 0.0;  // Newton part left out of psi, added back at n = 0
  long first = lo;
  std::string route;
  if (const auto pair = canonical_pair(f)) {
    // the closed-form lifting differs from the table only at k = 0
    auto cp = std::make_shared<const CanonicalPsi>(*pair, quad_tol);
    delta = f.value(0) - cp->psi(0.0).real();
    psi.eval = [cp](Complex s) { return cp->psi(s); };
    psi.domain_abscissa = cp->c();
    psi.growth = 0.0;
    route = "canonical";
  } else {
    const NewtonPsi newton(f, quad_tol);
    psi = newton.handle();
    route = "newton";
    if (f.is_tabulated()) {
      // a polynomial psi of degree m only has a convergent line integral for n > m
      const long m = static_cast<long>(f.as_tabulated()->values.size()) - 1;
      first = std::max(lo, m + 1);
      route = "newton-polynomial";
    }
  }
  if (!(a.abscissa > psi.domain_abscissa)) throw UsageError("--abscissa lies left of the lifting's domain");
  std::vector<csv::RiceRow> rows;
  double worst = 0.0;
  for (long n = first; n <= hi; ++n) {
    const double v = rice_recover_f(psi, n, a.abscissa, quad_tol) + (n == 0 ? delta : 0.0);
    const double exact = f.value(n);
    rows.push_back({n, v, exact});
    const double err = std::abs(v - exact);
    if (!(err <= worst)) worst = err;
  }
  const bool ok = worst <= a.common.tol;
  auto flags = csv::Flags{{"spec", a.spec}, {"n", a.n_range}, {"abscissa", csv::fmt(a.abscissa)}};
  for (auto& kv : common_flags(a.common)) flags.push_back(kv);
  csv::write_header(os, "rice", flags);
  os << "# sequence: " << f.to_string() << "\n# lifting: " << route << '\n';
  if (first > lo) os << "# rows below n=" << first << " skipped: the line integral diverges there\n";
  os << "# max_abs_err: " << csv::fmt(worst) << (ok ? "" : " (above --tol)") << '\n';
  csv::write_rice(os, rows);
  return ok ? 0 : exit_numeric;
}

// ------------------------------------------------------------------ laplace

struct LaplaceArgs {
  Common common;
  std::string pair;
  std::string grid = "-0.5:3:0.25";
  double im = 0.0;
  std::string table = "psi";
};

BasicPair parse_pair(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--pair expects d,b");
  const BasicPair p{to_number(parts[0], "--pair"), static_cast<int>(to_integer(parts[1], "--pair"))};
  if (p.b < 0) throw UsageError("--pair needs b >= 0");
  return p;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

int laplace_psi(const LaplaceArgs& a, const BasicPair& pair, const std::vector<double>& grid, std::ostream& body,
                std::ostream& notes) {
  const auto canon = canonicalize(SequenceSpec::basic(pair.d, pair.b));
  const int ell = sigma(pair.d);
  // the Newton series of the table carries f(0) - phi(0) as an extra constant
  const double phi0 = std::pow(ell, pair.d) * std::pow(std::log(static_cast<double>(ell)), pair.b) / factorial(ell);
  const double delta = canon.sequence.value(0) - phi0;
  const NewtonPsi newton(canon.sequence);
  const auto form = make_hat_phi_form(pair);
  const RealFn hat = [&form](double u) { return hat_phi_closed_form(form, u); };
  std::vector<csv::LaplaceRow> rows;
  double worst = 0.0;
  for (double x : grid) {
    const Complex s(x, a.im);
    const Complex pn = newton(s) - delta;
    const Complex pl = psi_via_laplace(hat, s);
    rows.push_back({s, pn, pl});
    const double d = std::abs(pn - pl);
    if (!(d <= worst)) worst = d;
  }
  const bool ok = worst <= a.common.tol;
  notes << "# max_abs_diff: " << csv::fmt(worst) << (ok ? "" : " (above --tol)") << '\n';
  csv::write_laplace(body, rows);
  return ok ? 0 : exit_numeric;
}

int laplace_twisted(const std::vector<double>& grid, double im, std::ostream& body, std::ostream& notes) {
  body << "ell,m,s_re,s_im,quad_re,quad_im,closed_re,closed_im,rel_err\n";
  double worst = 0.0;
  for (int ell = 1; ell <= 3; ++ell) {
    for (int m = 0; m <= 2; ++m) {
      for (double x : grid) {
        if (!(x > 0.0)) continue;
        const Complex s(x, im);
        const Complex q = twisted_gamma({ell, m}, s);
        const Complex c = twisted_gamma_closed_form({ell, m}, s);
        const double rel = std::abs(q - c) / std::abs(c);
        if (!(rel <= worst)) worst = rel;
        body << ell << ',' << m << ',' << csv::fmt(x) << ',' << csv::fmt(im) << ',' << csv::fmt(q.real()) << ','
             << csv::fmt(q.imag()) << ',' << csv::fmt(c.real()) << ',' << csv::fmt(c.imag()) << ',' << csv::fmt(rel)
             << '\n';
      }
    }
  }
  notes << "# rows with Re s <= 0 omitted (quadrature needs Re s > 0)\n# max_rel_err: " << csv::fmt(worst) << '\n';
  return 0;
}

int laplace_tameness(const BasicPair& pair, std::ostream& body, std::ostream& notes) {
  const auto ex = psi_singular_expansion(pair.d, pair.b);
  std::vector<double> t;
  for (double x = 4.0; x <= 40.0; x += 2.0) t.push_back(x);
  const auto lifted = ex.Psi_handle();
  AnalyticFunction main_part;
  main_part.eval = [p = ex.psi](Complex s) { return p->Psi_main(s); };
  main_part.domain_abscissa = -INFINITY;
  AnalyticFunction rg;
  rg.eval = [](Complex s) { return rgamma(-s); };
  rg.domain_abscissa = -INFINITY;
  const double c = pair.d + 0.5;
  body << "function,sigma,poly_exponent,exp_rate,max_abs,class\n";
  for (const auto& [name, fn] : {std::pair<std::string, const AnalyticFunction*>{"Psi", &lifted},
                                 {"Psi_main", &main_part}, {"rgamma(-s)", &rg}}) {
    const auto rep = tameness_probe(*fn, c, 0.4, t);
    for (const auto& l : rep.lines) {
      body << name << ',' << csv::fmt(l.sigma) << ',' << csv::fmt(l.poly_exponent) << ',' << csv::fmt(l.exp_rate) << ','
           << csv::fmt(l.max_abs) << ',' << to_string(rep.classification) << '\n';
    }
    notes << "# " << name << ": " << to_string(rep.classification) << '\n';
  }
  return 0;
}

int run_laplace(const LaplaceArgs& a, std::ostream& os) {
  const auto pair = parse_pair(a.pair);
  const auto grid = parse_grid(a.grid, "--grid");
  std::ostringstream body, notes;
  int code = 0;
  if (a.table == "psi") {
    code = laplace_psi(a, pair, grid, body, notes);
  } else if (a.table == "twisted") {
    code = laplace_twisted(grid, a.im, body, notes);
  } else {
    code = laplace_tameness(pair, body, notes);
  }
  auto flags = csv::Flags{{"pair", a.pair}, {"grid", a.grid}, {"im", csv::fmt(a.im)}, {"table", a.table}};
  for (auto& kv : common_flags(a.common)) flags.push_back(kv);
  csv::write_header(os, "laplace", flags);
  os << notes.str() << body.str();
  return code;
}

// ---------------------------------------------------------------- depoisson

struct DepoissonArgs {
  Common common;
  std::string spec = "golden";
  std::string n_list = "100,400";
  int k = 3;
  double radius = 0.0;
  std::string table = "charlier";
  std::string probs = "1/2,1/2";
  std::string toll = "size";
  double theta = 0.5;
  std::string radii = "10,20,40,80,160";
};

int run_depoisson(const DepoissonArgs& a, std::ostream& os) {
  std::ostringstream body, notes;
  if (a.table == "charlier") {
    const auto f = parse_spec(a.spec);
    if (a.k < 1) throw UsageError("--k must be at least 1");
    std::vector<long> ns;
    for (double v : parse_list(a.n_list, "--n")) {
      if (v < 1.0 || v != std::floor(v)) throw UsageError("--n expects positive integers");
      ns.push_back(static_cast<long>(v));
    }
    const double tol = std::min(1e-14, a.common.tol);
    const ComplexFn P = [f, tol](Complex z) { return poisson_transform_eval(f, z, tol); };
    body << "n,k,estimate,exact,abs_err\n";
    for (long n : ns) {
      const double exact = f.value(n);
      for (int k = 1; k <= a.k; ++k) {
        const double est = charlier_truncated_estimate(P, n, k, a.radius);
        body << n << ',' << k << ',' << csv::fmt(est) << ',' << csv::fmt(exact) << ',' << csv::fmt(std::abs(est - exact))
             << '\n';
      }
    }
    notes << "# sequence: " << f.to_string() << '\n';
  } else {
    const auto source = parse_source(a.probs);
    const TollPoisson tp(parse_toll(a.toll));
    if (!(a.theta > 0.0 && a.theta < pi / 2.0)) throw UsageError("--theta must lie in (0, pi/2)");
    const auto radii = parse_list(a.radii, "--radii");
    const ComplexFn logP = [&source, &tp](Complex z) { return trie_log_poisson_mean(source, tp, z); };
    const auto rep = js_admissibility_scan(logP, a.theta, radii);
    body << "radius,log_inside,log_outside\n";
    for (const auto& r : rep.rows) {
      body << csv::fmt(r.radius) << ',' << csv::fmt(r.log_inside) << ',' << csv::fmt(r.log_outside) << '\n';
    }
    notes << "# alpha: " << csv::fmt(rep.alpha) << "\n# beta: " << csv::fmt(rep.beta) << "\n# delta: "
          << csv::fmt(rep.delta) << "\n# delta_below_one: " << (rep.delta_below_one ? "true" : "false") << '\n';
  }
  auto flags = csv::Flags{{"table", a.table}};
  if (a.table == "charlier") {
    flags.insert(flags.end(), {{"spec", a.spec}, {"n", a.n_list}, {"k", std::to_string(a.k)}, {"radius", csv::fmt(a.radius)}});
  } else {
    flags.insert(flags.end(), {{"probs", a.probs}, {"toll", a.toll}, {"theta", csv::fmt(a.theta)}, {"radii", a.radii}});
  }
  for (auto& kv : common_flags(a.common)) flags.push_back(kv);
  csv::write_header(os, "depoisson", flags);
  os << notes.str() << body.str();
  return 0;
}

// --------------------------------------------------------------------- trie

struct TrieArgs {
  Common common;
  std::string probs;
  std::string toll = "size";
  std::string n_range = "0:30";
  long sim = 0;
  std::string fit;
};

int run_trie(const TrieArgs& a, std::ostream& os) {
  const auto source = parse_source(a.probs);
  const auto toll = parse_toll(a.toll);
  if (a.sim < 0) throw UsageError("--sim must be nonnegative");
  auto flags = csv::Flags{{"probs", a.probs}, {"toll", a.toll}};
  if (!a.fit.empty()) {
    const auto [lo, hi] = parse_range(a.fit, "--fit");
    if (lo < 2) throw UsageError("--fit needs lo >= 2");
    std::vector<long> grid;
    for (long n = lo; n <= hi; ++n) grid.push_back(n);
    const auto fit = asymptotic_constant_fit(source, toll, grid);
    flags.push_back({"fit", a.fit});
    for (auto& kv : common_flags(a.common)) flags.push_back(kv);
    csv::write_header(os, "trie", flags);
    os << "# entropy: " << csv::fmt(entropy(source)) << '\n';
    csv::write_fit(os, fit);
    return 0;
  }
  const auto [lo, hi] = parse_range(a.n_range, "--n");
  const bool binary = source.size() == 2;
  std::vector<std::optional<double>> exact(hi + 1);
  std::vector<double> flt(hi + 1);
  if (toll.exact() && (binary ? hi <= 400 : hi <= 40)) {
    if (binary) {
      const auto r = exact_mean_recurrence_exact(source, toll, hi);
      for (long n = 0; n <= hi; ++n) exact[n] = r[n].get_d();
    } else {
      for (long n = 0; n <= hi; ++n) exact[n] = mean_via_rice_pair_exact(source, toll, n).get_d();
    }
  }
  if (binary) {
    flt = exact_mean_recurrence_float(source, toll, hi);
  } else {
    for (long n = 0; n <= hi; ++n) flt[n] = mean_via_rice_pair_float(source, toll, n);
  }
  std::vector<csv::TrieRow> rows;
  double worst = 0.0;
  for (long n = lo; n <= hi; ++n) {
    csv::TrieRow row{n, exact[n], flt[n], std::nullopt};
    if (a.sim > 0) row.sim = simulate_trie(source, toll, n, a.sim, a.common.seed, a.common.threads);
    if (exact[n]) {
      const double rel = std::abs(*exact[n] - flt[n]) / std::max(1.0, std::abs(*exact[n]));
      if (!(rel <= worst)) worst = rel;
    }
    rows.push_back(row);
  }
  const bool ok = worst <= a.common.tol;
  flags.insert(flags.end(), {{"n", a.n_range}, {"sim", std::to_string(a.sim)}});
  for (auto& kv : common_flags(a.common)) flags.push_back(kv);
  csv::write_header(os, "trie", flags);
  os << "# toll: " << toll.to_string() << '\n';
  if (a.sim > 0) os << "# rng: " << rows.front().sim->rng << '\n';
  if (exact[lo]) os << "# max_rel_exact_vs_float: " << csv::fmt(worst) << (ok ? "" : " (above --tol)") << '\n';
  csv::write_trie(os, rows);
  return ok ? 0 : exit_numeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial transforms, Rice integrals and trie costs"};
  app.set_version_flag("--version", csv::version());
  app.require_subcommand(1);

  TransformArgs ta;
  auto* tr = app.add_subcommand("transform", "exact table of f, Pi[f], Pi^2[f]");
  tr->add_option("--spec", ta.spec, "sequence spec, e.g. \"tab 0 0 1 1 1\"")->required();
  tr->add_option("--N", ta.N, "last index")->capture_default_str();
  tr->add_flag("--canonical", ta.canonical, "use the canonical form of the spec");
  add_common(tr, ta.common, 0.0);

  RiceArgs ra;
  auto* ri = app.add_subcommand("rice", "recover f(n) from the lifting of Pi[f] by a Rice integral");
  ri->add_option("--spec", ra.spec, "sequence spec")->required();
  ri->add_option("--n", ra.n_range, "index range lo:hi")->capture_default_str();
  ri->add_option("--abscissa", ra.abscissa, "Re s of the integration line")->capture_default_str();
  add_common(ri, ra.common, 1e-8);

  LaplaceArgs la;
  auto* lp = app.add_subcommand("laplace", "Newton vs Laplace liftings, twisted Gamma, tameness");
  lp->add_option("--pair", la.pair, "basic pair d,b")->required();
  lp->add_option("--grid", la.grid, "real parts lo:hi:step")->capture_default_str();
  lp->add_option("--im", la.im, "imaginary part of the grid")->capture_default_str();
  lp->add_option("--table", la.table, "psi | twisted | tameness")
      ->capture_default_str()
      ->check(CLI::IsMember({"psi", "twisted", "tameness"}));
  add_common(lp, la.common, 1e-8);

  DepoissonArgs da;
  auto* dp = app.add_subcommand("depoisson", "Poisson-Charlier estimates, JS admissibility scan");
  dp->add_option("--table", da.table, "charlier | js")->capture_default_str()->check(CLI::IsMember({"charlier", "js"}));
  dp->add_option("--spec", da.spec, "sequence spec (charlier)")->capture_default_str();
  dp->add_option("--n", da.n_list, "comma-separated n (charlier)")->capture_default_str();
  dp->add_option("--k", da.k, "largest truncation order (charlier)")->capture_default_str();
  dp->add_option("--radius", da.radius, "Cauchy circle radius, 0 = sqrt(n) (charlier)")->capture_default_str();
  dp->add_option("--probs", da.probs, "source probabilities (js)")->capture_default_str();
  dp->add_option("--toll", da.toll, "toll (js)")->capture_default_str();
  dp->add_option("--theta", da.theta, "cone half-angle (js)")->capture_default_str();
  dp->add_option("--radii", da.radii, "comma-separated radii (js)")->capture_default_str();
  add_common(dp, da.common, 1e-14);

  TrieArgs tra;
  auto* tp = app.add_subcommand("trie", "exact, float and simulated trie costs; asymptotic fit");
  tp->add_option("--probs", tra.probs, "source probabilities, e.g. 1/2,1/2")->required();
  tp->add_option("--toll", tra.toll, "size | pathlength | sorting [b=k] | tab ...")->capture_default_str();
  tp->add_option("--n", tra.n_range, "index range lo:hi")->capture_default_str();
  tp->add_option("--sim", tra.sim, "simulation trials per n (0 = off)")->capture_default_str();
  tp->add_option("--fit", tra.fit, "fit r(n)/n = a + b ln n + c ln^2 n over lo:hi");
  add_common(tp, tra.common, 1e-9);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const Common* common = nullptr;
  if (tr->parsed()) common = &ta.common;
  if (ri->parsed()) common = &ra.common;
  if (lp->parsed()) common = &la.common;
  if (dp->parsed()) common = &da.common;
  if (tp->parsed()) common = &tra.common;

  std::ostringstream os;
  int code = 0;
  try {
    if (tr->parsed()) code = run_transform(ta, os);
    if (ri->parsed()) code = run_rice(ra, os);
    if (lp->parsed()) code = run_laplace(la, os);
    if (dp->parsed()) code = run_depoisson(da, os);
    if (tp->parsed()) code = run_trie(tra, os);
  } catch (const UsageError& e) {
    std::cerr << "ricepath: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "ricepath: " << e.what() << '\n';
    return exit_numeric;
  }

  if (common->out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(common->out, std::ios::binary);
    file << os.str();
    if (!file) {
      std::cerr << "ricepath: cannot write " << common->out << '\n';
      return exit_numeric;
    }
  }
  if (code != 0) std::cerr << "ricepath: check failed (see the # lines of the output)\n";
  return code;
}
