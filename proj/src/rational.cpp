#include "ricepath/rational.hpp"

#include "ricepath/errors.hpp"

#include <cctype>

namespace ricepath {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text, char sep) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(sep, start);
    const auto item = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    out.push_back(parse_rational(item));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<Integer> pascal_row(long n) {
  std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (long k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * (n - k + 1) / k;
  }
  return row;
}

}  // namespace ricepath
