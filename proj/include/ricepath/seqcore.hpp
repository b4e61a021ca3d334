#pragma once

#include "ricepath/complex.hpp"
#include "ricepath/rational.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ricepath {

enum class TollKind { size, pathlength, sorting };

/// (d, b) of a basic sequence k^d log^b k.
struct BasicPair {
  double d = 0.0;
  int b = 0;
};

struct GrowthProfile {
  double degree = 0.0;
  long valuation = 0;
  bool vd_satisfied = false;
};

/// Analytic continuation of a sequence to complex arguments.
struct Lifting {
  std::function<Complex(Complex)> eval;
  long valid_from = 0;    // agrees with the sequence for integers k >= valid_from
  double domain = -1.0;   // analytic on Re s > domain
};

/// Immutable symbolic description of a sequence f(0), f(1), ...
class SequenceSpec {
 public:
  struct Basic {
    double d;
    int b;
  };
  struct Toll {
    TollKind kind;
    int b;  // log power of the sorting toll
  };
  struct Tabulated {
    std::vector<Rational> values;  // zero beyond the table
    double degree;
  };
  struct Plussed;
  struct Shifted;

  static SequenceSpec basic(double d, int b);
  static SequenceSpec toll(TollKind kind, int b = 1);
  static SequenceSpec tabulated(std::vector<Rational> values, double degree = 0.0);
  /// The reference sequence 1/((k+1)(k+2)), i.e. the canonical form of the
  /// constant sequence.
  static SequenceSpec golden();

  /// Parses `basic d=1 b=2`, `toll sorting [b=1]`, `tab 0 0 1 4/3 [deg=1]`,
  /// `plus <spec>`, `shift m=3 <spec>`, `golden`.
  static SequenceSpec parse(std::string_view text);
  std::string to_string() const;

  double degree() const;
  long valuation() const;
  GrowthProfile growth() const;

  /// True when every value is rational (exact evaluation available).
  bool exact() const;
  Rational exact_value(long k) const;
  double value(long k) const;
  std::vector<Rational> exact_table(long n_max) const;
  std::vector<double> table(long n_max) const;

  /// Log power of the dominant term (0 unless logarithms are involved).
  int log_power() const;

  /// (d, b) when the root node is a basic sequence or a named toll.
  std::optional<BasicPair> basic_pair() const;

  /// Analytic continuation, when one is known.
  std::optional<Lifting> lifting() const;

  bool is_tabulated() const;
  const Tabulated* as_tabulated() const;

 private:
  struct Node;
  explicit SequenceSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend SequenceSpec plus_modify(const SequenceSpec&);
  friend SequenceSpec shift_T(const SequenceSpec&, int);
  friend std::optional<BasicPair> canonical_pair(const SequenceSpec&);
};

struct SequenceSpec::Plussed {
  SequenceSpec inner;
  int sigma;
};
struct SequenceSpec::Shifted {
  SequenceSpec inner;
  int m;  // > 0 forward T^m, < 0 inverse shift
};

/// 2 + floor(d) for d >= 0, 1 for d < 0.
int sigma(double d);

/// F+: zero below sigma(d), 1 at sigma(d), F beyond.
SequenceSpec plus_modify(const SequenceSpec& f);

/// T^m for m > 0, the inverse shift for m < 0, identity for m = 0.
SequenceSpec shift_T(const SequenceSpec& f, int m);

struct CanonicalSequence {
  SequenceSpec sequence;  // T^ell [F+]
  int ell = 0;
  double c = 0.0;         // degree d - ell
  std::optional<BasicPair> basic;
};

CanonicalSequence canonicalize(const SequenceSpec& f);

/// (d, b) when f is literally canonicalize(basic or named toll) in structure.
std::optional<BasicPair> canonical_pair(const SequenceSpec& f);

/// (s+ell)^(d-ell) log^b(s+ell) U(1/(s+ell)) with U(u) = prod_{j<ell} (1-ju)^{-1}
/// (U = 1 when d < 0). Throws DomainError for Re s <= -1.
Complex lifting_phi(const BasicPair& pair, Complex s);
Complex lifting_phi(const CanonicalSequence& canonical, Complex s);

}  // namespace ricepath
