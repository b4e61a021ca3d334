#include "ricepath/csv.hpp"

#include <cmath>
#include <cstdio>

#ifndef RICEPATH_VERSION
#define RICEPATH_VERSION "0.1.0"
#endif

namespace ricepath::csv {

std::string version() { return RICEPATH_VERSION; }

void write_header(std::ostream& os, const std::string& tool, const Flags& flags) {
  os << "# ricepath " << version() << " tool=" << tool;
  for (const auto& [k, v] : flags) {
    const bool quote = v.empty() || v.find(' ') != std::string::npos;
    os << " --" << k << '=' << (quote ? "\"" + v + "\"" : v);
  }
  os << '\n';
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_rice(std::ostream& os, const std::vector<RiceRow>& rows) {
  os << "n,rice_value,exact_value,abs_err\n";
  for (const auto& r : rows) {
    os << r.n << ',' << fmt(r.rice_value) << ',' << fmt(r.exact_value) << ',' << fmt(std::abs(r.rice_value - r.exact_value))
       << '\n';
  }
}

void write_terms(std::ostream& os, const std::vector<AsymptoticTerm>& terms) {
  os << "exponent,log_power,frequency,coef_re,coef_im\n";
  for (const auto& t : terms) {
    os << fmt(t.exponent) << ',' << t.log_power << ',' << fmt(t.frequency) << ',' << fmt(t.coefficient.real()) << ','
       << fmt(t.coefficient.imag()) << '\n';
  }
}

void write_laplace(std::ostream& os, const std::vector<LaplaceRow>& rows) {
  os << "s_re,s_im,psi_newton_re,psi_newton_im,psi_laplace_re,psi_laplace_im,abs_diff\n";
  for (const auto& r : rows) {
    os << fmt(r.s.real()) << ',' << fmt(r.s.imag()) << ',' << fmt(r.psi_newton.real()) << ',' << fmt(r.psi_newton.imag())
       << ',' << fmt(r.psi_laplace.real()) << ',' << fmt(r.psi_laplace.imag()) << ','
       << fmt(std::abs(r.psi_newton - r.psi_laplace)) << '\n';
  }
}

void write_trie(std::ostream& os, const std::vector<TrieRow>& rows) {
  os << "n,r_exact,r_float,r_sim_mean,r_sim_stderr\n";
  for (const auto& r : rows) {
    os << r.n << ',' << (r.r_exact ? fmt(*r.r_exact) : "") << ',' << fmt(r.r_float) << ','
       << (r.sim ? fmt(r.sim->mean) : "") << ',' << (r.sim ? fmt(r.sim->std_error) : "") << '\n';
  }
}

void write_fit(std::ostream& os, const FitReport& fit) {
  os << "a,b,c_fit,c_theory,rel_err,points\n";
  os << fmt(fit.a) << ',' << fmt(fit.b) << ',' << fmt(fit.c_fit) << ',' << fmt(fit.c_theory) << ',' << fmt(fit.rel_err)
     << ',' << fit.points << '\n';
}

}  // namespace ricepath::csv
