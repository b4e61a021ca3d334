#include "ricepath/seqcore.hpp"

#include "ricepath/errors.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace ricepath {

struct SequenceSpec::Node {
  std::variant<Basic, Toll, Tabulated, Plussed, Shifted> kind;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

BasicPair toll_pair(const SequenceSpec::Toll& t) {
  switch (t.kind) {
    case TollKind::size: return {0.0, 0};
    case TollKind::pathlength: return {1.0, 0};
    case TollKind::sorting: return {1.0, t.b};
  }
  return {0.0, 0};
}

// k^d log^b k for k >= 2, 0 below.
double basic_value(const BasicPair& p, long k) {
  if (k < 2) return 0.0;
  const double x = static_cast<double>(k);
  return std::pow(x, p.d) * std::pow(std::log(x), p.b);
}

bool basic_exact(const BasicPair& p) { return p.b == 0 && is_integer(p.d) && std::abs(p.d) < 64; }

Rational basic_exact_value(const BasicPair& p, long k) {
  if (k < 2) return 0;
  Integer power = 1;
  const long e = static_cast<long>(std::abs(p.d));
  for (long i = 0; i < e; ++i) power *= k;
  if (p.d >= 0) return Rational(power);
  return Rational(Integer(1), power);
}

Rational rising_product(long n, int m) {
  Integer out = 1;
  for (int i = 1; i <= m; ++i) out *= n + i;
  return Rational(out);
}

Rational falling_product(long n, int m) {
  Integer out = 1;
  for (int i = 0; i < m; ++i) out *= n - i;
  return Rational(out);
}

}  // namespace

SequenceSpec SequenceSpec::basic(double d, int b) {
  if (!std::isfinite(d)) throw DomainError("basic: degree must be finite");
  if (b < 0) throw DomainError("basic: log power must be nonnegative");
  return SequenceSpec(std::make_shared<const Node>(Node{Basic{d, b}}));
}

SequenceSpec SequenceSpec::toll(TollKind kind, int b) {
  if (kind == TollKind::sorting && b < 1) throw DomainError("sorting toll needs b >= 1");
  return SequenceSpec(std::make_shared<const Node>(Node{Toll{kind, kind == TollKind::sorting ? b : 0}}));
}

SequenceSpec SequenceSpec::tabulated(std::vector<Rational> values, double degree) {
  return SequenceSpec(std::make_shared<const Node>(Node{Tabulated{std::move(values), degree}}));
}

SequenceSpec SequenceSpec::golden() { return canonicalize(basic(0.0, 0)).sequence; }

bool SequenceSpec::is_tabulated() const { return std::holds_alternative<Tabulated>(node_->kind); }

const SequenceSpec::Tabulated* SequenceSpec::as_tabulated() const { return std::get_if<Tabulated>(&node_->kind); }

double SequenceSpec::degree() const {
  return std::visit(overloaded{
                        [](const Basic& x) { return x.d; },
                        [](const Toll& x) { return toll_pair(x).d; },
                        [](const Tabulated& x) { return x.degree; },
                        [](const Plussed& x) { return x.inner.degree(); },
                        [](const Shifted& x) { return x.inner.degree() - x.m; },
                    },
                    node_->kind);
}

int SequenceSpec::log_power() const {
  return std::visit(overloaded{
                        [](const Basic& x) { return x.b; },
                        [](const Toll& x) { return x.b; },
                        [](const Tabulated&) { return 0; },
                        [](const Plussed& x) { return x.inner.log_power(); },
                        [](const Shifted& x) { return x.inner.log_power(); },
                    },
                    node_->kind);
}

long SequenceSpec::valuation() const {
  return std::visit(overloaded{
                        [](const Basic& x) -> long {
                          return basic_value({x.d, x.b}, 2) != 0.0 ? 2L : 3L;
                        },
                        [](const Toll&) -> long { return 2; },
                        [](const Tabulated& x) -> long {
                          for (std::size_t i = 0; i < x.values.size(); ++i) {
                            if (x.values[i] != 0) return static_cast<long>(i);
                          }
                          return static_cast<long>(x.values.size());
                        },
                        [](const Plussed& x) -> long { return x.sigma; },
                        [this](const Shifted& x) -> long {
                          if (x.m < 0) return x.inner.valuation() - x.m;
                          const long inner = x.inner.valuation();
                          if (inner >= x.m) return inner - x.m;
                          for (long n = 0; n < 100000; ++n) {
                            if (value(n) != 0.0) return n;
                          }
                          return 100000;
                        },
                    },
                    node_->kind);
}

GrowthProfile SequenceSpec::growth() const {
  GrowthProfile g;
  g.degree = degree();
  g.valuation = valuation();
  g.vd_satisfied = static_cast<double>(g.valuation) > g.degree + 1.0;
  return g;
}

bool SequenceSpec::exact() const {
  return std::visit(overloaded{
                        [](const Basic& x) { return basic_exact({x.d, x.b}); },
                        [](const Toll& x) { return x.kind != TollKind::sorting; },
                        [](const Tabulated&) { return true; },
                        [](const Plussed& x) { return x.inner.exact(); },
                        [](const Shifted& x) { return x.inner.exact(); },
                    },
                    node_->kind);
}

Rational SequenceSpec::exact_value(long k) const {
  if (k < 0) throw DomainError("sequence index must be nonnegative");
  return std::visit(overloaded{
                        [k](const Basic& x) -> Rational {
                          if (!basic_exact({x.d, x.b})) {
                            throw DomainError("basic sequence with logarithms or fractional degree is not exact");
                          }
                          return basic_exact_value({x.d, x.b}, k);
                        },
                        [k](const Toll& x) -> Rational {
                          if (x.kind == TollKind::sorting) throw DomainError("sorting toll is not exact");
                          return basic_exact_value(toll_pair(x), k);
                        },
                        [k](const Tabulated& x) -> Rational {
                          return static_cast<std::size_t>(k) < x.values.size() ? x.values[k] : Rational(0);
                        },
                        [k](const Plussed& x) -> Rational {
                          if (k < x.sigma) return 0;
                          if (k == x.sigma) return 1;
                          return x.inner.exact_value(k);
                        },
                        [k](const Shifted& x) -> Rational {
                          if (x.m >= 0) return x.inner.exact_value(k + x.m) / rising_product(k, x.m);
                          const int m = -x.m;
                          if (k < m) return 0;
                          return falling_product(k, m) * x.inner.exact_value(k - m);
                        },
                    },
                    node_->kind);
}

double SequenceSpec::value(long k) const {
  if (k < 0) throw DomainError("sequence index must be nonnegative");
  return std::visit(overloaded{
                        [k](const Basic& x) { return basic_value({x.d, x.b}, k); },
                        [k](const Toll& x) { return basic_value(toll_pair(x), k); },
                        [k](const Tabulated& x) {
                          return static_cast<std::size_t>(k) < x.values.size() ? x.values[k].get_d() : 0.0;
                        },
                        [k](const Plussed& x) {
                          if (k < x.sigma) return 0.0;
                          if (k == x.sigma) return 1.0;
                          return x.inner.value(k);
                        },
                        [k](const Shifted& x) {
                          if (x.m >= 0) {
                            double denom = 1.0;
                            for (int i = 1; i <= x.m; ++i) denom *= static_cast<double>(k + i);
                            return x.inner.value(k + x.m) / denom;
                          }
                          const int m = -x.m;
                          if (k < m) return 0.0;
                          double factor = 1.0;
                          for (int i = 0; i < m; ++i) factor *= static_cast<double>(k - i);
                          return factor * x.inner.value(k - m);
                        },
                    },
                    node_->kind);
}

std::vector<Rational> SequenceSpec::exact_table(long n_max) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long k = 0; k <= n_max; ++k) out.push_back(exact_value(k));
  return out;
}

std::vector<double> SequenceSpec::table(long n_max) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long k = 0; k <= n_max; ++k) out.push_back(value(k));
  return out;
}

std::optional<BasicPair> SequenceSpec::basic_pair() const {
  if (const auto* b = std::get_if<Basic>(&node_->kind)) return BasicPair{b->d, b->b};
  if (const auto* t = std::get_if<Toll>(&node_->kind)) return toll_pair(*t);
  return std::nullopt;
}

std::optional<Lifting> SequenceSpec::lifting() const {
  return std::visit(
      overloaded{
          [](const Basic& x) -> std::optional<Lifting> {
            const BasicPair p{x.d, x.b};
            return Lifting{[p](Complex s) { return std::pow(s, p.d) * std::pow(std::log(s), p.b); }, 2, 0.0};
          },
          [](const Toll& x) -> std::optional<Lifting> {
            const BasicPair p = toll_pair(x);
            return Lifting{[p](Complex s) { return std::pow(s, p.d) * std::pow(std::log(s), p.b); }, 2, 0.0};
          },
          [](const Tabulated&) -> std::optional<Lifting> { return std::nullopt; },
          [](const Plussed& x) -> std::optional<Lifting> {
            auto inner = x.inner.lifting();
            if (!inner) return std::nullopt;
            long from = std::max<long>(inner->valid_from, x.sigma + 1);
            if (inner->valid_from <= x.sigma && x.inner.value(x.sigma) == 1.0) from = x.sigma;
            return Lifting{inner->eval, from, inner->domain};
          },
          [](const Shifted& x) -> std::optional<Lifting> {
            auto inner = x.inner.lifting();
            if (!inner) return std::nullopt;
            const int m = x.m;
            auto g = inner->eval;
            if (m >= 0) {
              return Lifting{[g, m](Complex s) { return g(s + static_cast<double>(m)) / rising_from_one(s, m); },
                             std::max<long>(inner->valid_from - m, 0), std::max(inner->domain - m, -1.0)};
            }
            return Lifting{[g, m](Complex s) { return falling_factorial(s, -m) * g(s + static_cast<double>(m)); },
                           inner->valid_from - m, inner->domain - m};
          },
      },
      node_->kind);
}

std::string SequenceSpec::to_string() const {
  return std::visit(overloaded{
                        [](const Basic& x) { return "basic d=" + format_real(x.d) + " b=" + std::to_string(x.b); },
                        [](const Toll& x) -> std::string {
                          switch (x.kind) {
                            case TollKind::size: return "toll size";
                            case TollKind::pathlength: return "toll pathlength";
                            case TollKind::sorting: return "toll sorting b=" + std::to_string(x.b);
                          }
                          return "toll";
                        },
                        [](const Tabulated& x) {
                          std::string out = "tab";
                          for (const auto& v : x.values) out += " " + ricepath::to_string(v);
                          if (x.degree != 0.0) out += " deg=" + format_real(x.degree);
                          return out;
                        },
                        [](const Plussed& x) { return "plus " + x.inner.to_string(); },
                        [](const Shifted& x) { return "shift m=" + std::to_string(x.m) + " " + x.inner.to_string(); },
                    },
                    node_->kind);
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("malformed number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed integer: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("malformed integer: '" + text + "'");
  return static_cast<int>(v);
}

bool take_key(const std::vector<std::string>& words, std::size_t& pos, const std::string& key, std::string& value) {
  if (pos < words.size() && words[pos].rfind(key + "=", 0) == 0) {
    value = words[pos].substr(key.size() + 1);
    ++pos;
    return true;
  }
  return false;
}

SequenceSpec parse_words(const std::vector<std::string>& words, std::size_t& pos) {
  if (pos >= words.size()) throw ParseError("empty sequence spec");
  const std::string head = words[pos++];
  std::string value;
  if (head == "golden") return SequenceSpec::golden();
  if (head == "basic") {
    double d = 0.0;
    int b = 0;
    bool have_d = false;
    for (int i = 0; i < 2; ++i) {
      if (take_key(words, pos, "d", value)) {
        d = parse_real(value);
        have_d = true;
      } else if (take_key(words, pos, "b", value)) {
        b = parse_int(value);
      }
    }
    if (!have_d) throw ParseError("basic spec needs d=<real>");
    if (b < 0) throw ParseError("basic spec needs b >= 0");
    return SequenceSpec::basic(d, b);
  }
  if (head == "toll") {
    if (pos >= words.size()) throw ParseError("toll spec needs a kind");
    const std::string kind = words[pos++];
    if (kind == "size") return SequenceSpec::toll(TollKind::size);
    if (kind == "pathlength") return SequenceSpec::toll(TollKind::pathlength);
    if (kind == "sorting") {
      int b = 1;
      if (take_key(words, pos, "b", value)) b = parse_int(value);
      if (b < 1) throw ParseError("sorting toll needs b >= 1");
      return SequenceSpec::toll(TollKind::sorting, b);
    }
    throw ParseError("unknown toll kind '" + kind + "'");
  }
  if (head == "tab") {
    std::vector<Rational> values;
    double degree = 0.0;
    while (pos < words.size()) {
      if (take_key(words, pos, "deg", value)) {
        degree = parse_real(value);
        break;
      }
      values.push_back(parse_rational(words[pos++]));
    }
    if (values.empty()) throw ParseError("tab spec needs at least one value");
    return SequenceSpec::tabulated(std::move(values), degree);
  }
  if (head == "plus") return plus_modify(parse_words(words, pos));
  if (head == "shift") {
    if (!take_key(words, pos, "m", value)) throw ParseError("shift spec needs m=<int>");
    const int m = parse_int(value);
    return shift_T(parse_words(words, pos), m);
  }
  throw ParseError("unknown sequence kind '" + head + "'");
}

}  // namespace

SequenceSpec SequenceSpec::parse(std::string_view text) {
  const auto words = split_words(text);
  std::size_t pos = 0;
  auto spec = parse_words(words, pos);
  if (pos != words.size()) throw ParseError("trailing input after sequence spec: '" + words[pos] + "'");
  return spec;
}

int sigma(double d) {
  if (!std::isfinite(d)) throw DomainError("sigma: degree must be finite");
  if (d < 0.0) return 1;
  return 2 + static_cast<int>(std::floor(d));
}

SequenceSpec plus_modify(const SequenceSpec& f) {
  return SequenceSpec(std::make_shared<const SequenceSpec::Node>(
      SequenceSpec::Node{SequenceSpec::Plussed{f, sigma(f.degree())}}));
}

SequenceSpec shift_T(const SequenceSpec& f, int m) {
  if (m == 0) return f;
  return SequenceSpec(std::make_shared<const SequenceSpec::Node>(SequenceSpec::Node{SequenceSpec::Shifted{f, m}}));
}

CanonicalSequence canonicalize(const SequenceSpec& f) {
  CanonicalSequence out{shift_T(plus_modify(f), sigma(f.degree())), sigma(f.degree()), 0.0, f.basic_pair()};
  out.c = f.degree() - out.ell;
  return out;
}

std::optional<BasicPair> canonical_pair(const SequenceSpec& f) {
  const auto* shifted = std::get_if<SequenceSpec::Shifted>(&f.node_->kind);
  if (!shifted) return std::nullopt;
  const auto* plussed = std::get_if<SequenceSpec::Plussed>(&shifted->inner.node_->kind);
  if (!plussed) return std::nullopt;
  const auto pair = plussed->inner.basic_pair();
  if (!pair || shifted->m != sigma(pair->d) || plussed->sigma != shifted->m) return std::nullopt;
  return pair;
}

Complex lifting_phi(const BasicPair& pair, Complex s) {
  if (s.real() <= -1.0) throw DomainError("lifting_phi: requires Re s > -1");
  const int ell = sigma(pair.d);
  const Complex w = s + static_cast<double>(ell);
  Complex out = std::pow(w, pair.d - ell);
  if (pair.b > 0) out *= std::pow(std::log(w), pair.b);
  if (pair.d >= 0.0) {
    for (int j = 1; j < ell; ++j) out *= w / (w - static_cast<double>(j));
  }
  return out;
}

Complex lifting_phi(const CanonicalSequence& canonical, Complex s) {
  if (!canonical.basic) throw DomainError("lifting_phi: canonical sequence does not come from a basic pair");
  return lifting_phi(*canonical.basic, s);
}

}  // namespace ricepath
