#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/contour.hpp"
#include "ricepath/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ricepath {

/// tau_j(n) = n! [z^n] (z - n)^j e^z, exact.
Integer charlier_tau(int j, long n);

/// tau_j as a polynomial in n: tau_j(n) = sum_i coeffs[i] n^i, degree floor(j/2).
struct CharlierTable {
  int j = 0;
  std::vector<Integer> coeffs;

  Integer operator()(long n) const;
  int degree() const;
};

CharlierTable charlier_table(int j);

/// sqrt(n) capped at n/2.
double default_derivative_radius(double n);

/// P^(j)(n), j = 0..j_max, from the Cauchy formula on |z - n| = radius
/// (radius <= 0 selects the default).
std::vector<Complex> poisson_derivatives(const ComplexFn& P, double n, int j_max, double radius = 0.0);

/// sum_{j < 2k} P^(j)(n) tau_j(n) / j!.
double charlier_truncated_estimate(const ComplexFn& P, long n, int k, double radius = 0.0);

struct JsRow {
  double radius = 0.0;
  double log_inside = 0.0;   // max log|P| over |arg z| <= theta
  double log_outside = 0.0;  // max log|P e^z| over theta < |arg z| <= pi
};

struct JsReport {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  bool delta_below_one = true;
  std::vector<JsRow> rows;

  std::string to_string() const;
  void write_csv(std::ostream& os) const;
};

/// Numeric JS-admissibility diagnostic. log_P returns log P(z) (any branch),
/// which keeps large magnitudes representable.
JsReport js_admissibility_scan(const ComplexFn& log_P, double theta, const std::vector<double>& radii,
                               int angles = 64);

}  // namespace ricepath
