#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/seqcore.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ricepath {

using RealFn = std::function<double(double)>;

/// (1/2 pi i) int_{Re s = b} phi(s) e^{su} ds for phi analytic right of b.
double bromwich_inverse(const AnalyticFunction& phi, double u, double b_abscissa, double tol = 1e-10);

/// Inverse Laplace transform of the canonical lifting of a basic pair,
///   e^{-ell u} u^{-c-1} sum_j a_j u^j sum_k C(b,k) (-log u)^{b-k} D_k(j-c),
/// D_k(x) = (-1)^k (1/Gamma)^(k)(x), with a_j the Taylor coefficients of U.
struct HatPhiForm {
  int ell = 1;
  double c = -2.0;
  int b = 0;
  /// a_j / (ell-1)^j (a_j itself when ell <= 2)
  std::vector<double> series_coeffs;
  double coeff_scale = 1.0;
  int truncation_J = 1000;
  /// -log Gamma(j - c) and E_k(j - c) = Gamma (1/Gamma)^(k) at j - c, per j
  std::vector<double> log_rgamma;
  std::vector<std::vector<double>> rgamma_ratio;
};

HatPhiForm make_hat_phi_form(const BasicPair& pair, int truncation_J = 1000);
/// Form with an explicit coefficient list (unscaled a_j).
HatPhiForm make_hat_phi_form(int ell, double c, int b, const std::vector<double>& coeffs, int truncation_J = 1000);

enum class DerivativeScheme { analytic, richardson };

double hat_phi_closed_form(const HatPhiForm& form, double u, DerivativeScheme scheme = DerivativeScheme::analytic);

/// hat_phi split as e^{-ell u} u^{-c-1} [main(log u) + rest(u)], main being the
/// j = 0 part; returned as (full prefactor * main, full prefactor * rest).
std::pair<double, double> hat_phi_parts(const HatPhiForm& form, double u);

/// 1/((-c)(1-c)...(j-1-c)).
double G_ratio(int j, double c);

/// int_0^inf hat_phi(u) (1 - e^{-u})^s du.
Complex psi_via_laplace(const RealFn& hat_phi, Complex s, double tol = 1e-12);

struct TwistedGammaSpec {
  int ell = 1;
  int m = 0;
};

/// int_0^inf e^{-ell u} u^{s-1} log^m u du by quadrature (Re s > 0).
Complex twisted_gamma(const TwistedGammaSpec& spec, Complex s, double tol = 1e-13);
/// ell^{-s} sum_k C(m,k) (-log ell)^{m-k} Gamma^(k)(s); meromorphic in s.
Complex twisted_gamma_closed_form(const TwistedGammaSpec& spec, Complex s);

/// psi of the canonical sequence of a basic pair, continued to Re s > c - 1
/// through the twisted-Gamma main part plus a convergent remainder integral.
class CanonicalPsi {
 public:
  explicit CanonicalPsi(const BasicPair& pair, double tol = 1e-12);

  Complex psi(Complex s) const;
  /// sum_m kappa_m Gamma_ell^(m)(s - c)
  Complex main(Complex s) const;
  Complex regular(Complex s) const;
  /// Lifting of Pi[F+]: (-1)^ell s(s-1)...(s-ell+1) psi(s - ell).
  Complex Psi(Complex s) const;
  /// Lifted main part s(s-1)...(s-ell+1) sum_m a_m Gamma_ell^(m)(s - d).
  Complex Psi_main(Complex s) const;

  const HatPhiForm& form() const { return form_; }
  const std::vector<double>& kappa() const { return kappa_; }
  BasicPair pair() const { return pair_; }
  int ell() const { return form_.ell; }
  double c() const { return form_.c; }

 private:
  BasicPair pair_;
  HatPhiForm form_;
  std::vector<double> kappa_;
  std::vector<double> partial_;  // partial fractions when the canonical sequence is rational in k
  double tol_;
};

struct SingularExpansion {
  int ell = 0;
  double c = 0.0;
  int b = 0;
  std::vector<double> kappa;  // canonical psi main part, m = 0..b
  std::vector<double> a;      // lifted main part, a_m = (-1)^ell kappa_m
  PoleSpec canonical_pole;    // at s = c, order b + 1
  PoleSpec lifted_pole;       // at s = d, order after the cancellation by s(s-1)...(s-ell+1)
  int lifted_order_numeric = 0;
  std::shared_ptr<const CanonicalPsi> psi;

  AnalyticFunction psi_handle() const;
  AnalyticFunction Psi_handle() const;
  /// Psi - lifted main part.
  Complex remainder(Complex s) const;
};

SingularExpansion psi_singular_expansion(double d, int b);

struct TamenessLine {
  double sigma = 0.0;
  double poly_exponent = 0.0;  // fitted exponent of |t|
  double exp_rate = 0.0;       // fitted rate of e^{rate |t|}
  double max_abs = 0.0;
};

enum class GrowthClass { exponential_decay, polynomial, exponential_growth };

struct TamenessReport {
  std::vector<TamenessLine> lines;
  GrowthClass classification = GrowthClass::polynomial;
  double exp_rate = 0.0;       // mean fitted rate
  double poly_exponent = 0.0;  // mean fitted exponent
  bool tame = true;            // no exponential growth

  std::string to_string() const;
};

/// Fits log|Psi(sigma + it)| ~ A + B log t + C t on the samples, at sigma in
/// {c - strip_width, c - strip_width/2, c, c + 1/2, c + 1}.
TamenessReport tameness_probe(const AnalyticFunction& Psi, double c, double strip_width,
                              const std::vector<double>& t_samples);
std::string to_string(GrowthClass g);

/// P_g(x) = int hat_phi(u) exp(-x (1 - e^{-u})) du, the Poisson transform of
/// the sequence with Laplace density hat_phi; stable for Re x >= 0.
Complex poisson_via_laplace(const RealFn& hat_phi, Complex x, double tol = 1e-12);
/// e^x P_g(x) = int hat_phi(u) exp(x e^{-u}) du; stable for Re x <= 0.
Complex poisson_exp_via_laplace(const RealFn& hat_phi, Complex x, double tol = 1e-12);

}  // namespace ricepath
