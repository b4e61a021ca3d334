#include "ricepath/trie.hpp"

#include "ricepath/binom.hpp"
#include "ricepath/errors.hpp"
#include "ricepath/quadrature.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

namespace ricepath {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

Float50 to_float50(const Rational& q) {
  return Float50(q.get_num().get_str()) / Float50(q.get_den().get_str());
}

Float50 toll_value_50(const SequenceSpec& toll, long k) {
  if (toll.exact()) return to_float50(toll.exact_value(k));
  if (auto pair = toll.basic_pair()) {
    if (k < 2) return Float50(0);
    const Float50 x(k);
    return boost::multiprecision::pow(x, Float50(pair->d)) * boost::multiprecision::pow(boost::multiprecision::log(x), pair->b);
  }
  return Float50(toll.value(k));
}

double log_factorial(long k) { return std::lgamma(static_cast<double>(k) + 1.0); }

}  // namespace

MemorylessSource::MemorylessSource(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw DomainError("memoryless source needs at least two symbols");
  Rational total = 0;
  for (const auto& p : probs_) {
    if (p <= 0) throw DomainError("memoryless source: probabilities must be positive");
    total += p;
  }
  if (total != 1) throw DomainError("memoryless source: probabilities must sum to 1");
  for (const auto& p : probs_) probs_d_.push_back(p.get_d());
}

MemorylessSource MemorylessSource::parse(std::string_view text) { return MemorylessSource(parse_rational_list(text)); }

bool MemorylessSource::symmetric() const {
  return std::all_of(probs_.begin(), probs_.end(), [&](const Rational& p) { return p == probs_[0]; });
}

std::string MemorylessSource::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < probs_.size(); ++i) out += (i ? "," : "") + ricepath::to_string(probs_[i]);
  return out;
}

Complex lambda_series(const MemorylessSource& source, Complex s, bool continue_left) {
  if (s == Complex(1.0, 0.0)) throw PoleError("lambda_series: pole at s = 1");
  if (!continue_left && !(s.real() > 1.0)) throw DomainError("lambda_series: requires Re s > 1");
  Complex sum = 0.0;
  for (double p : source.probs_double()) sum += std::exp(s * std::log(p));
  return 1.0 / (1.0 - sum);
}

Rational lambda_exact(const MemorylessSource& source, long k) {
  if (k < 2) throw DomainError("lambda_exact: k >= 2 required");
  Rational sum = 0;
  for (const auto& p : source.probs()) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), p.get_den_mpz_t(), static_cast<unsigned long>(k));
    sum += Rational(num, den);
  }
  return 1 / (1 - sum);
}

double entropy(const MemorylessSource& source) {
  double h = 0.0;
  for (double p : source.probs_double()) h -= p * std::log(p);
  return h;
}

void check_toll(const SequenceSpec& toll) {
  if (toll.value(0) != 0.0 || toll.value(1) != 0.0) throw DomainError("toll must vanish at 0 and 1");
}

namespace {

void require_binary(const MemorylessSource& source) {
  if (source.size() != 2) {
    throw DomainError("exact_mean_recurrence: binary alphabet required (use mean_via_rice_pair)");
  }
}

}  // namespace

std::vector<Rational> exact_mean_recurrence_exact(const MemorylessSource& source, const SequenceSpec& toll, long N) {
  require_binary(source);
  check_toll(toll);
  if (N < 0) return {};
  const Rational p = source.probs()[0], q = source.probs()[1];
  std::vector<Rational> pp(static_cast<std::size_t>(N) + 1), qp(static_cast<std::size_t>(N) + 1);
  pp[0] = 1;
  qp[0] = 1;
  for (long k = 1; k <= N; ++k) {
    pp[k] = pp[k - 1] * p;
    qp[k] = qp[k - 1] * q;
  }
  std::vector<Rational> r(static_cast<std::size_t>(N) + 1, Rational(0));
  for (long n = 2; n <= N; ++n) {
    Rational acc = toll.exact_value(n);
    const auto row = pascal_row(n);
    for (long k = 2; k <= n - 1; ++k) {
      acc += Rational(row[k]) * (pp[k] * qp[n - k] + qp[k] * pp[n - k]) * r[k];
    }
    r[n] = acc / (1 - pp[n] - qp[n]);
  }
  return r;
}

std::vector<double> exact_mean_recurrence_float(const MemorylessSource& source, const SequenceSpec& toll, long N) {
  require_binary(source);
  check_toll(toll);
  if (N < 0) return {};
  const double p = source.probs_double()[0], q = source.probs_double()[1];
  const double lp = std::log(p), lq = std::log(q);
  std::vector<double> r(static_cast<std::size_t>(N) + 1, 0.0);
  for (long n = 2; n <= N; ++n) {
    CompensatedSum<double> acc;
    acc.add(toll.value(n));
    // weights C(n,k) p^k q^{n-k} from the mode outward; the mirrored weights
    // C(n,k) q^k p^{n-k} pair with r(k) too
    for (int side = 0; side < 2; ++side) {
      const double a = side == 0 ? p : q;
      const double la = side == 0 ? lp : lq, lb = side == 0 ? lq : lp;
      const double ratio_ab = a / (1.0 - a);
      long mode = static_cast<long>(std::floor((n + 1) * a));
      mode = std::clamp(mode, 1L, n - 1);
      const double log_w = log_factorial(n) - log_factorial(mode) - log_factorial(n - mode) + mode * la +
                           (n - mode) * lb;
      const double w_mode = std::exp(log_w);
      double w = w_mode;
      for (long k = mode; k >= 1; --k) {
        acc.add(w * r[k]);
        w *= static_cast<double>(k) / static_cast<double>(n - k + 1) / ratio_ab;
        if (w < 1e-22 * w_mode) break;
      }
      w = w_mode;
      for (long k = mode + 1; k <= n - 1; ++k) {
        w *= static_cast<double>(n - k + 1) / static_cast<double>(k) * ratio_ab;
        acc.add(w * r[k]);
        if (w < 1e-22 * w_mode) break;
      }
    }
    const double denom = 1.0 - std::exp(n * lp) - std::exp(n * lq);
    r[n] = acc.value() / denom;
  }
  return r;
}

std::vector<double> exact_mean_recurrence(const MemorylessSource& source, const SequenceSpec& toll, long N,
                                          MeanMode mode) {
  if (mode == MeanMode::floating) return exact_mean_recurrence_float(source, toll, N);
  const auto exact = exact_mean_recurrence_exact(source, toll, N);
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& v : exact) out.push_back(v.get_d());
  return out;
}

Rational mean_via_rice_pair_exact(const MemorylessSource& source, const SequenceSpec& toll, long n) {
  check_toll(toll);
  if (!toll.exact()) throw DomainError("mean_via_rice_pair: exact mode needs a rational toll");
  if (n < 2) return 0;
  const auto p = pi_transform(toll.exact_table(n));
  const auto row = pascal_row(n);
  Rational acc = 0;
  for (long k = 2; k <= n; ++k) {
    Rational term = Rational(row[k]) * lambda_exact(source, k) * p[k];
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

double mean_via_rice_pair_float(const MemorylessSource& source, const SequenceSpec& toll, long n) {
  check_toll(toll);
  if (n > 40) throw RangeError("mean_via_rice_pair: n <= 40 required in floating mode");
  if (n < 2) return 0.0;
  std::vector<Float50> t(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) t[k] = toll_value_50(toll, k);
  Float50 acc = 0;
  for (long k = 2; k <= n; ++k) {
    Float50 pk = 0;
    const auto row_k = pascal_row(k);
    for (long j = 0; j <= k; ++j) {
      const Float50 term = Float50(row_k[j].get_str()) * t[j];
      pk += j % 2 == 0 ? term : Float50(-term);
    }
    const Float50 term = Float50(binomial(n, k).get_str()) * to_float50(lambda_exact(source, k)) * pk;
    acc += k % 2 == 0 ? term : Float50(-term);
  }
  return static_cast<double>(acc);
}

TollPoisson::TollPoisson(const SequenceSpec& toll, double tol) : toll_(toll), tol_(tol) {
  check_toll(toll);
  if (toll.degree() >= 2.0) throw DomainError("TollPoisson: toll degree must stay below 2");
  if (auto pair = toll.basic_pair()) {
    form_ = std::make_shared<const HatPhiForm>(make_hat_phi_form(*pair));
    ell_ = form_->ell;
    correction_.resize(static_cast<std::size_t>(ell_) + 1);
    // the closed-form density reproduces F itself from index ell on
    for (int k = 0; k < ell_; ++k) correction_[k] = toll.value(k);
  }
  const long k_max = toll.is_tabulated() ? static_cast<long>(toll.as_tabulated()->values.size()) : 20000;
  for (long k = 0; k + 2 <= k_max; ++k) {
    quad_const_ = std::max(quad_const_, std::abs(toll.value(k + 2)) / ((k + 1.0) * (k + 2.0)));
  }
}

Complex TollPoisson::E_series(Complex x) const {
  const double r = std::abs(x);
  CompensatedSum<Complex> sum;
  Complex power = 1.0;  // x^k / k!
  const long cap = toll_.is_tabulated() ? static_cast<long>(toll_.as_tabulated()->values.size())
                                        : static_cast<long>(3.0 * r + 60.0);
  for (long k = 0; k < cap; ++k) {
    if (k > 0) power *= x / static_cast<double>(k);
    const double fk = toll_.value(k);
    if (fk != 0.0) sum.add(fk * power);
    if (k > 2.0 * r + 10.0 && std::abs(power) * (1.0 + k) * (1.0 + k) < 1e-18 * std::max(std::abs(sum.value()), 1e-300)) break;
  }
  return sum.value();
}

Complex TollPoisson::E(Complex x) const {
  if (!form_ || std::abs(x) <= 5.0) return E_series(x);
  const auto form = form_;
  RealFn hat = [form](double u) { return hat_phi_closed_form(*form, u); };
  Complex corr = 0.0;
  Complex power = 1.0;
  for (int k = 0; k <= ell_; ++k) {
    if (k > 0) power *= x / static_cast<double>(k);
    corr += correction_[k] * power;
  }
  return std::pow(x, ell_) * poisson_exp_via_laplace(hat, x, tol_) + corr;
}

Complex TollPoisson::P(Complex x) const {
  if (!form_ || std::abs(x) <= 5.0) return std::exp(-x) * E_series(x);
  const auto form = form_;
  RealFn hat = [form](double u) { return hat_phi_closed_form(*form, u); };
  Complex corr = 0.0;
  Complex power = 1.0;
  for (int k = 0; k <= ell_; ++k) {
    if (k > 0) power *= x / static_cast<double>(k);
    corr += correction_[k] * power;
  }
  return std::pow(x, ell_) * poisson_via_laplace(hat, x, tol_) + std::exp(-x) * corr;
}

namespace {

// Visits the prefixes of depth D grouped by symbol counts:
// visit(multiplicity, log pi_w).
template <class Visit>
void for_each_composition(const MemorylessSource& source, int depth, Visit&& visit) {
  const auto& p = source.probs_double();
  const std::size_t r = p.size();
  if (source.symmetric()) {
    visit(std::exp(depth * std::log(static_cast<double>(r))), depth * std::log(p[0]));
    return;
  }
  std::vector<int> counts(r, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == r) {
      counts[i] = left;
      double log_mult = log_factorial(depth);
      double log_pi = 0.0;
      for (std::size_t j = 0; j < r; ++j) {
        log_mult -= log_factorial(counts[j]);
        log_pi += counts[j] * std::log(p[j]);
      }
      visit(std::exp(log_mult), log_pi);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, depth);
}

double sum_of_squares(const MemorylessSource& source) {
  double s2 = 0.0;
  for (double p : source.probs_double()) s2 += p * p;
  return s2;
}

}  // namespace

HarmonicResult poisson_mean_harmonic(const MemorylessSource& source, const SequenceSpec& toll, double z, int depth_cap,
                                     double tol) {
  if (!(z > 0.0)) throw DomainError("poisson_mean_harmonic: z must be positive");
  TollPoisson tp(toll, tol * 1e-3);
  const double s2 = sum_of_squares(source);
  const double G = tp.quadratic_constant();
  CompensatedSum<double> sum;
  for (int depth = 0; depth <= depth_cap; ++depth) {
    for_each_composition(source, depth, [&](double mult, double log_pi) {
      sum.add(mult * tp.P(z * std::exp(log_pi)).real());
    });
    const double bound = z * z * G * std::pow(s2, depth + 1) / (1.0 - s2);
    if (bound < tol) return {sum.value(), depth, bound};
  }
  throw ToleranceUnreachable("poisson_mean_harmonic: depth cap " + std::to_string(depth_cap) + " too small");
}

Complex trie_log_poisson_mean(const MemorylessSource& source, const TollPoisson& toll, Complex z, double tol) {
  const double s2 = sum_of_squares(source);
  const double G = toll.quadratic_constant();
  const double r = std::abs(z);
  const bool left = z.real() < 0.0;
  CompensatedSum<Complex> sum;
  for (int depth = 0; depth <= 400; ++depth) {
    for_each_composition(source, depth, [&](double mult, double log_pi) {
      const double pi_w = std::exp(log_pi);
      const Complex x = z * pi_w;
      if (left) {
        sum.add(mult * toll.E(x) * std::exp(z * (1.0 - pi_w)));
      } else {
        sum.add(mult * toll.P(x));
      }
    });
    double bound = r * r * G * std::pow(s2, depth + 1) / (1.0 - s2);
    if (left) bound *= std::exp(z.real() * (1.0 - std::pow(s2, 0.5 * (depth + 1))));
    if (bound < tol * std::max(std::abs(sum.value()), 1e-300) && depth > 0) break;
  }
  const Complex v = sum.value();
  if (v == Complex(0.0, 0.0)) return Complex(-std::numeric_limits<double>::infinity(), 0.0);
  return left ? std::log(v) - z : std::log(v);
}

namespace {

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double simulate_one(const std::vector<double>& cumulative, const std::vector<double>& toll_values, long n,
                    std::mt19937_64& gen) {
  const std::size_t r = cumulative.size();
  double total = 0.0;
  std::vector<long> stack{n};
  std::vector<long> counts(r);
  while (!stack.empty()) {
    const long m = stack.back();
    stack.pop_back();
    total += toll_values[m];
    std::fill(counts.begin(), counts.end(), 0);
    // next symbol of each of the m words, drawn only now
    for (long i = 0; i < m; ++i) {
      const double u = uniform01(gen);
      std::size_t s = 0;
      while (s + 1 < r && u >= cumulative[s]) ++s;
      ++counts[s];
    }
    for (std::size_t s = 0; s < r; ++s) {
      if (counts[s] >= 2) stack.push_back(counts[s]);
    }
  }
  return total;
}

}  // namespace

TrieStats simulate_trie(const MemorylessSource& source, const SequenceSpec& toll, long n, long trials,
                        std::uint64_t seed, int threads) {
  check_toll(toll);
  if (trials < 1) throw DomainError("simulate_trie: trials must be positive");
  if (n < 0) throw DomainError("simulate_trie: n must be nonnegative");
  TrieStats stats;
  stats.n = n;
  stats.trials = trials;
  stats.seed = seed;
  stats.rng = "mt19937_64/seed_seq(seed,trial)";
  if (n < 2) return stats;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (double p : source.probs_double()) {
    acc += p;
    cumulative.push_back(acc);
  }
  std::vector<double> toll_values(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) toll_values[k] = toll.value(k);
  std::vector<double> results(static_cast<std::size_t>(trials));
  auto run = [&](long first, long last) {
    for (long t = first; t < last; ++t) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
      std::mt19937_64 gen(seq);
      results[t] = simulate_one(cumulative, toll_values, n, gen);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    run(0, trials);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (trials + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      const long first = i * chunk, last = std::min(trials, first + chunk);
      if (first < last) pool.emplace_back(run, first, last);
    }
    for (auto& th : pool) th.join();
  }
  CompensatedSum<double> sum;
  for (double v : results) sum.add(v);
  stats.mean = sum.value() / static_cast<double>(trials);
  CompensatedSum<double> sq;
  for (double v : results) sq.add((v - stats.mean) * (v - stats.mean));
  const double var = trials > 1 ? sq.value() / static_cast<double>(trials - 1) : 0.0;
  stats.std_error = std::sqrt(var / static_cast<double>(trials));
  return stats;
}

FitReport asymptotic_constant_fit(const std::vector<double>& r, const std::vector<long>& n_grid, double c_theory) {
  if (n_grid.size() < 3) throw DomainError("asymptotic_constant_fit: need at least three grid points");
  double a[3][4] = {};
  for (long n : n_grid) {
    if (n < 2 || static_cast<std::size_t>(n) >= r.size()) throw RangeError("asymptotic_constant_fit: grid outside table");
    const double ln = std::log(static_cast<double>(n));
    const double row[3] = {1.0, ln, ln * ln};
    const double y = r[n] / static_cast<double>(n);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += row[i] * row[j];
      a[i][3] += row[i] * y;
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int i = col + 1; i < 3; ++i) if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    for (int j = 0; j < 4; ++j) std::swap(a[col][j], a[piv][j]);
    for (int i = 0; i < 3; ++i) {
      if (i == col) continue;
      const double f = a[i][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[i][j] -= f * a[col][j];
    }
  }
  FitReport rep;
  rep.a = a[0][3] / a[0][0];
  rep.b = a[1][3] / a[1][1];
  rep.c_fit = a[2][3] / a[2][2];
  rep.c_theory = c_theory;
  rep.rel_err = c_theory != 0.0 ? std::abs(rep.c_fit - c_theory) / std::abs(c_theory) : std::abs(rep.c_fit);
  rep.points = n_grid.size();
  return rep;
}

FitReport asymptotic_constant_fit(const MemorylessSource& source, const SequenceSpec& toll,
                                  const std::vector<long>& n_grid) {
  if (n_grid.empty()) throw DomainError("asymptotic_constant_fit: empty grid");
  if (!std::is_sorted(n_grid.begin(), n_grid.end())) throw DomainError("asymptotic_constant_fit: grid must increase");
  if (n_grid.back() > (1L << 15)) throw RangeError("asymptotic_constant_fit: grid maximum above 2^15");
  const auto r = exact_mean_recurrence_float(source, toll, n_grid.back());
  // the n log^2 n law carries 1/(2h) only for the b = 1 sorting toll
  const auto pair = toll.basic_pair();
  const double c_theory = pair && pair->d == 1.0 && pair->b == 1 ? 1.0 / (2.0 * entropy(source)) : 0.0;
  return asymptotic_constant_fit(r, n_grid, c_theory);
}

namespace {

// 1/(-log(1-y)) - 1/y + 1/2 at y = e^{-v}; the small-y branch uses the Gregory coefficients
double klogk_rho(double v) {
  const double y = std::exp(-v);
  if (y < 0.05) {
    static constexpr double g[] = {1.0 / 12, 1.0 / 24, 19.0 / 720, 3.0 / 160, 863.0 / 60480,
                                   275.0 / 24192, 33953.0 / 3628800, 8183.0 / 1036800, 3250433.0 / 479001600};
    double acc = 0.0;
    for (int k = 8; k >= 0; --k) acc = (acc + g[k]) * y;
    return -acc;
  }
  return 1.0 / -std::log1p(-y) - 1.0 / y + 0.5;
}

// Pi-lifting of 0, 0, 2 log 2, 3 log 3, ... as s/(s-1) - 1/2 + s * Laplace[rho](s), Re s > -1
Complex klogk_lifting(Complex s) {
  if (!(s.real() > -1.0)) throw DomainError("sorting toll lifting: requires Re s > -1");
  if (s == Complex(1.0, 0.0)) throw PoleError("sorting toll lifting: pole at s = 1");
  const double sigma = s.real() + 1.0;
  const double cut = std::min(4000.0, (std::log(std::abs(s) + 1.0) + 40.0) / sigma);
  const int pieces = 1 + static_cast<int>(cut * (1.0 + std::abs(s.imag())) / (2.0 * pi));
  const double h = cut / pieces;
  quad::Options opt;
  opt.abs_tol = 1e-13 * h;
  opt.rel_tol = 1e-13;
  opt.max_intervals = 50;
  auto g = [&](double v) -> Complex { return std::exp(-s * v) * klogk_rho(v); };
  Complex acc = 0.0;
  for (int i = 0; i < pieces; ++i) acc += quad::integrate<Complex>(g, i * h, (i + 1) * h, opt).value;
  return s / (s - 1.0) - 0.5 + s * acc;
}

}  // namespace

AnalyticFunction toll_pi_lifting(const SequenceSpec& toll) {
  check_toll(toll);
  if (toll.is_tabulated()) {
    auto h = NewtonPsi(toll).handle();
    h.name = "toll_pi[" + toll.to_string() + "]";
    return h;
  }
  auto pair = toll.basic_pair();
  if (!pair) throw DomainError("toll_pi_lifting: tabulated or named toll required");
  if (pair->d == 1.0 && pair->b == 1 && toll.value(2) == 2.0 * std::log(2.0)) {
    const double f0 = toll.value(0), f1 = toll.value(1);
    AnalyticFunction h;
    h.eval = [f0, f1](Complex s) { return klogk_lifting(s) + f0 - f1 * s; };
    h.domain_abscissa = 0.0;
    h.growth = 2.0;
    h.name = "toll_pi[" + toll.to_string() + "]";
    return h;
  }
  auto cp = std::make_shared<const CanonicalPsi>(*pair);
  const int ell = cp->ell();
  std::vector<double> corr(static_cast<std::size_t>(ell) + 1);
  for (int k = 0; k < ell; ++k) corr[k] = toll.value(k);
  AnalyticFunction h;
  h.eval = [cp, corr](Complex s) {
    Complex out = cp->Psi(s);
    Complex binom = 1.0;  // (-1)^k C(s,k)
    for (std::size_t k = 0; k < corr.size(); ++k) {
      if (k > 0) binom *= (static_cast<double>(k) - 1.0 - s) / static_cast<double>(k);
      if (corr[k] != 0.0) out += corr[k] * binom;
    }
    return out;
  };
  h.domain_abscissa = pair->d - 1.0;
  h.growth = pair->d + 1.0;
  h.name = "toll_pi[" + toll.to_string() + "]";
  return h;
}

AnalyticFunction trie_rice_integrand(const MemorylessSource& source, const SequenceSpec& toll) {
  const auto psi = toll_pi_lifting(toll);
  AnalyticFunction h;
  h.eval = [source, psi](Complex s) { return lambda_series(source, s, true) * psi(s); };
  h.domain_abscissa = std::max(1.0, psi.domain_abscissa);
  h.growth = psi.growth;
  h.name = "lambda*" + psi.name;
  return h;
}

std::vector<PoleSpec> trie_poles(const MemorylessSource& source, const SequenceSpec& toll, int k_max) {
  if (!source.symmetric()) {
    throw DomainError("trie_poles: only sources with equal probabilities have a finite pole family near Re s = 1");
  }
  int psi_order = 0;
  const auto pair = toll.basic_pair();
  if (pair && pair->d == 1.0) {
    psi_order = pair->b;  // one order absorbed by the factor s(s-1)...(s-ell+1)
  } else if (std::abs(toll_pi_lifting(toll)(1.0)) < 1e-12) {
    psi_order = -1;
  }
  std::vector<PoleSpec> poles;
  poles.push_back({Complex(1.0, 0.0), 2 + psi_order, PoleShape::P});
  const double step = 2.0 * pi / std::log(static_cast<double>(source.size()));
  for (int k = 1; k <= k_max; ++k) {
    poles.push_back({Complex(1.0, k * step), 1, PoleShape::P});
    poles.push_back({Complex(1.0, -k * step), 1, PoleShape::P});
  }
  return poles;
}

}  // namespace ricepath
