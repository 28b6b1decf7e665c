#include "metric_lines/rational.hpp"

#include <cctype>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");

  const mpz_class p{std::string(num)};
  const mpz_class q{std::string(den)};
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1 || q == 1)
      throw Error(ErrorKind::Parse, "rational '" + std::string(text) + "' is not in lowest terms");
  }
  Rational value(negative ? mpz_class(-p) : p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(long numerator, unsigned long denominator) {
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

}  // namespace metric_lines
