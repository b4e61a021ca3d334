#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/laplace.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/rational.hpp"
#include "ricepath/seqcore.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ricepath {

/// Finite alphabet with exact rational symbol probabilities.
class MemorylessSource {
 public:
  explicit MemorylessSource(std::vector<Rational> probs);
  /// "1/2,1/2"
  static MemorylessSource parse(std::string_view text);

  const std::vector<Rational>& probs() const { return probs_; }
  const std::vector<double>& probs_double() const { return probs_d_; }
  std::size_t size() const { return probs_.size(); }
  bool symmetric() const;
  std::string to_string() const;

 private:
  std::vector<Rational> probs_;
  std::vector<double> probs_d_;
};

/// Lambda(s) = 1/(1 - sum p_i^s). PoleError at s = 1; DomainError for Re s <= 1
/// unless continue_left is set (meromorphic continuation).
Complex lambda_series(const MemorylessSource& source, Complex s, bool continue_left = false);
/// Exact Lambda(k) for integers k >= 2.
Rational lambda_exact(const MemorylessSource& source, long k);

double entropy(const MemorylessSource& source);

/// Throws DomainError unless toll(0) = toll(1) = 0.
void check_toll(const SequenceSpec& toll);

enum class MeanMode { exact, floating };

/// r(0..N) from the binary split recurrence, exactly.
std::vector<Rational> exact_mean_recurrence_exact(const MemorylessSource& source, const SequenceSpec& toll, long N);
/// r(0..N) in double precision (log-domain binomial weights).
std::vector<double> exact_mean_recurrence_float(const MemorylessSource& source, const SequenceSpec& toll, long N);
std::vector<double> exact_mean_recurrence(const MemorylessSource& source, const SequenceSpec& toll, long N,
                                          MeanMode mode);

/// r(n) = sum_{k=2}^n (-1)^k C(n,k) Lambda(k) Pi[toll](k), exact.
Rational mean_via_rice_pair_exact(const MemorylessSource& source, const SequenceSpec& toll, long n);
/// Same sum in 50-digit floating point (n <= 40); works for logarithmic tolls.
double mean_via_rice_pair_float(const MemorylessSource& source, const SequenceSpec& toll, long n);

struct HarmonicResult {
  double value = 0.0;
  int depth = 0;
  double tail_bound = 0.0;
};

/// sum over prefixes w of P_toll(z pi_w), with a geometric tail bound.
HarmonicResult poisson_mean_harmonic(const MemorylessSource& source, const SequenceSpec& toll, double z,
                                     int depth_cap = 200, double tol = 1e-12);

/// Poisson transform of a toll at complex arguments: P(x) and e^x P(x), each
/// in the half-plane where it stays bounded.
class TollPoisson {
 public:
  explicit TollPoisson(const SequenceSpec& toll, double tol = 1e-12);
  Complex P(Complex x) const;
  Complex E(Complex x) const;
  /// sup_k toll(k+2)/((k+1)(k+2)), the constant of P(x) <= C x^2.
  double quadratic_constant() const { return quad_const_; }

 private:
  Complex E_series(Complex x) const;
  SequenceSpec toll_;
  std::shared_ptr<const HatPhiForm> form_;
  int ell_ = 0;
  std::vector<double> correction_;  // toll(k), k < ell
  double quad_const_ = 0.0;
  double tol_;
};

/// log P_r(z) of the trie cost at complex z (JS-scan evaluator).
Complex trie_log_poisson_mean(const MemorylessSource& source, const TollPoisson& toll, Complex z,
                              double tol = 1e-12);

struct TrieStats {
  long n = 0;
  double mean = 0.0;
  double std_error = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::string rng;
};

TrieStats simulate_trie(const MemorylessSource& source, const SequenceSpec& toll, long n, long trials,
                        std::uint64_t seed, int threads = 1);

struct FitReport {
  double a = 0.0;
  double b = 0.0;
  double c_fit = 0.0;
  double c_theory = 0.0;
  double rel_err = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit r(n)/n = a + b ln n + c ln^2 n over the grid.
FitReport asymptotic_constant_fit(const MemorylessSource& source, const SequenceSpec& toll,
                                  const std::vector<long>& n_grid);
FitReport asymptotic_constant_fit(const std::vector<double>& r, const std::vector<long>& n_grid, double c_theory);

/// Lifting Psi_F of Pi[toll]: canonical-route continuation for named tolls,
/// Newton polynomial for tabulated ones.
AnalyticFunction toll_pi_lifting(const SequenceSpec& toll);

/// Lambda(s) Psi_F(s), whose Rice integral on Re s in (1, 2) is r(n).
AnalyticFunction trie_rice_integrand(const MemorylessSource& source, const SequenceSpec& toll);

/// Poles of L_n Lambda Psi_F between Re s = left and Re s = 1 for a source with
/// equal probabilities: s = 1 and 1 + 2 pi i k / log r, 1 <= |k| <= k_max.
std::vector<PoleSpec> trie_poles(const MemorylessSource& source, const SequenceSpec& toll, int k_max = 3);

}  // namespace ricepath
