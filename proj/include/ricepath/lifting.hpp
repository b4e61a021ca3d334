#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/contour.hpp"
#include "ricepath/seqcore.hpp"
#include "ricepath/special.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ricepath {

/// Complex function handle. The evaluator must be safe for concurrent calls
/// and real on the real axis (conjugate symmetric), which vertical-line
/// integrals exploit.
struct AnalyticFunction {
  ComplexFn eval;
  double domain_abscissa = -1.0;  // analytic (or meromorphic where poles are listed) for Re s > this
  double growth = 0.0;            // |f(s)| = O(|s|^growth) on vertical lines
  std::string name;

  Complex operator()(Complex s) const { return eval(s); }
};

enum class PoleShape { S, H, P };

/// A pole of the Rice integrand L_n(s) psi(s); order counts the kernel's own
/// pole when the location is one of 0..n.
struct PoleSpec {
  Complex location;
  int order = 1;
  PoleShape shape = PoleShape::S;
};

/// coefficient * n^exponent * n^{i frequency} * log^log_power n.
struct AsymptoticTerm {
  double exponent = 0.0;
  int log_power = 0;
  Complex coefficient;
  double frequency = 0.0;

  Complex evaluate(double n) const;
  std::string to_string() const;
};

/// Newton interpolation series psi(s) = sum_k (-1)^k f(k) C(s,k) of a reduced
/// sequence. Finite tables are summed exactly; sequences with a known lifting
/// get an Euler-Maclaurin tail beyond a head of exact values; anything else
/// is summed term by term until 20 consecutive terms fall below tol.
class NewtonPsi {
 public:
  explicit NewtonPsi(SequenceSpec f, double tol = 1e-12);
  Complex operator()(Complex s) const;
  AnalyticFunction handle() const;
  double degree() const { return degree_; }

 private:
  Complex finite_sum(Complex s) const;
  Complex lifted_sum(Complex s) const;
  Complex plain_sum(Complex s) const;

  SequenceSpec f_;
  double tol_;
  double degree_;
  std::optional<Lifting> lifting_;
  std::vector<double> head_;  // f(0..), cached
  bool finite_ = false;
};

Complex newton_psi(const SequenceSpec& f, Complex s, double tol = 1e-12);

/// L_n(s) = Gamma(n+1) Gamma(-s) / Gamma(n+1-s); PoleError on {0..n}.
Complex rice_kernel(long n, Complex s);
/// log L_n(s) (any branch).
Complex log_rice_kernel(long n, Complex s);

struct RiceOptions {
  double tol = 1e-10;       // relative to the result scale
  double core_height = 40;  // |Im s| handled by plain adaptive quadrature; beyond, a mapped tail
  int max_intervals = 4000;
};

/// (1/2 pi i) int_{Re s = a} L_n(s) psi(s) ds, which equals
/// sum_{a < k <= n} (-1)^k C(n,k) psi(k) when psi is analytic right of a.
double rice_integral(const AnalyticFunction& psi, long n, double a, const RiceOptions& opt = {});

/// f(n) recovered from the Newton lifting psi of Pi[f]; a must lie in (domain, 0).
double rice_recover_f(const AnalyticFunction& psi, long n, double a, double tol = 1e-10);

/// Laurent coefficients a_{-max_order}..a_0 of g around center.
std::vector<Complex> laurent_coefficients(const ComplexFn& g, Complex center, int max_order, double radius = 0.25);

struct ShiftLeftOptions {
  double radius = 0.25;
  double tol = 1e-10;
  int max_halvings = 4;
  double core_height = 40;
};

struct ShiftLeftResult {
  std::vector<AsymptoticTerm> terms;
  std::vector<Complex> residues;  // Res[L_n psi] per pole
  double residue_sum = 0.0;       // real part of the residue total
  double remainder = 0.0;         // left-line integral
  double total = 0.0;             // residue_sum + remainder
  double radius = 0.0;            // circle radius actually used
};

/// Moves the Rice line to left_abscissa, collecting residues at the listed
/// poles: f(n) = sum Res[L_n psi] + (1/2 pi i) int_{left} L_n psi.
ShiftLeftResult shift_left_asymptotics(const AnalyticFunction& psi, const std::vector<PoleSpec>& poles, long n,
                                       double left_abscissa, const ShiftLeftOptions& opt = {});

/// Asymptotic terms alone (independent of n): Laurent data of Gamma(-s) psi(s).
std::vector<AsymptoticTerm> pole_terms(const AnalyticFunction& psi, const PoleSpec& pole, double radius = 0.25);

}  // namespace ricepath
