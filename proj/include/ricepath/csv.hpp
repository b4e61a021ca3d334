#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/lifting.hpp"
#include "ricepath/trie.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ricepath::csv {

using Flags = std::vector<std::pair<std::string, std::string>>;

std::string version();

/// "# ricepath 0.1.0 tool=<name> --flag=value ..."
void write_header(std::ostream& os, const std::string& tool, const Flags& flags);

/// Fixed 17-significant-digit formatting so output is byte-stable.
std::string fmt(double x);

struct RiceRow {
  long n;
  double rice_value;
  double exact_value;
};
void write_rice(std::ostream& os, const std::vector<RiceRow>& rows);

void write_terms(std::ostream& os, const std::vector<AsymptoticTerm>& terms);

struct LaplaceRow {
  Complex s;
  Complex psi_newton;
  Complex psi_laplace;
};
void write_laplace(std::ostream& os, const std::vector<LaplaceRow>& rows);

struct TrieRow {
  long n;
  std::optional<double> r_exact;
  double r_float;
  std::optional<TrieStats> sim;
};
void write_trie(std::ostream& os, const std::vector<TrieRow>& rows);

void write_fit(std::ostream& os, const FitReport& fit);

}  // namespace ricepath::csv
