#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/rational.hpp"
#include "ricepath/seqcore.hpp"

#include <iosfwd>
#include <vector>

namespace ricepath {

using ExactTable = std::vector<Rational>;

/// p(n) = sum_k (-1)^k C(n,k) f(k), exact.
ExactTable pi_transform(const ExactTable& f);

/// True iff pi_transform(pi_transform(f)) == f.
bool pi_involution_check(const ExactTable& f);

/// T^m on a finite table (m >= 0): entries needing f beyond the table are dropped.
ExactTable shift_table(const ExactTable& f, int m);

struct PoissonResult {
  Complex value;
  long terms = 0;
  double tail_bound = 0.0;
};

/// e^{-z} sum_k f(k) z^k / k!, truncated once a tail bound drops below tol.
/// Throws ToleranceUnreachable when the term cap 16(|z|+10) + margin is hit.
PoissonResult poisson_transform(const SequenceSpec& f, Complex z, double tol = 1e-12);
Complex poisson_transform_eval(const SequenceSpec& f, Complex z, double tol = 1e-12);

/// CSV rows n,f,pi[,pi2].
void write_transform_csv(std::ostream& os, const ExactTable& f, const ExactTable& p, const ExactTable* p2 = nullptr);

}  // namespace ricepath
