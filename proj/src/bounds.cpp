#include "metric_lines/bounds.hpp"

#include <array>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

Rational power(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Exact integer q-th root of a nonnegative integer, if any.
std::optional<mpz_class> exact_root(const mpz_class& value, unsigned index) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), index) != 0) return root;
  return std::nullopt;
}

void require_positive(const BoundSpec& spec, std::string_view name) {
  if (spec.param(name) <= 0)
    throw Error(ErrorKind::BadParams, std::string(to_string(spec.id)) + " needs " + std::string(name) + " > 0");
}

constexpr std::array<std::pair<BoundId, std::string_view>, 7> kNames{{
    {BoundId::sparse_lemma, "sparse_lemma"},
    {BoundId::range, "range"},
    {BoundId::diam, "diam"},
    {BoundId::graphs_corollary, "graphs_corollary"},
    {BoundId::onetwo_lower, "onetwo_lower"},
    {BoundId::turan_clique, "turan_clique"},
    {BoundId::calculus, "calculus"},
}};

}  // namespace

Interval root_interval(const Rational& radicand, unsigned index, unsigned bits) {
  if (radicand < 0 || index == 0) throw Error(ErrorKind::BadParams, "root of a negative value");
  if (index == 1) return {radicand, radicand};
  auto num = exact_root(radicand.get_num(), index);
  auto den = exact_root(radicand.get_den(), index);
  if (num && den) {
    Rational r(*num, *den);
    r.canonicalize();
    return {r, r};
  }

  Rational lo = 0;
  Rational hi = radicand > 1 ? radicand : Rational(1);
  Rational target_width(1);
  target_width /= mpz_class(1) << bits;
  while (hi - lo > target_width) {
    Rational mid = (lo + hi) / 2;
    if (power(mid, index) <= radicand)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Interval RootExpression::sandwich() const {
  Interval root = root_interval(radicand, index);
  return {root.lo + offset, root.hi + offset};
}

bool RootExpression::at_most(const Rational& value) const {
  const Rational shifted = value - offset;
  if (shifted < 0) return false;
  return power(shifted, index) >= radicand;
}

std::string_view to_string(BoundId id) {
  for (auto [bound, name] : kNames)
    if (bound == id) return name;
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (auto [bound, text] : kNames)
    if (text == name) return bound;
  return std::nullopt;
}

const std::vector<BoundId>& all_bound_ids() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> out;
    for (auto [bound, name] : kNames) out.push_back(bound);
    return out;
  }();
  return ids;
}

const Rational& BoundSpec::param(std::string_view name) const {
  for (const auto& [key, value] : params)
    if (key == name) return value;
  throw Error(ErrorKind::BadParams, std::string(to_string(id)) + " is missing parameter " + std::string(name));
}

RootExpression bound_expression(const BoundSpec& spec) {
  switch (spec.id) {
    case BoundId::sparse_lemma: {
      // 0.25 (2t)^(2/3) = cbrt((2t)^2 / 64)
      const Rational& t = spec.param("t");
      if (t < 0) throw Error(ErrorKind::BadParams, "sparse_lemma needs t >= 0");
      return {power(2 * t, 2) / 64, 3};
    }
    case BoundId::range: {
      require_positive(spec, "n");
      require_positive(spec, "rho");
      return {power(spec.param("n") / spec.param("rho"), 2) / 64, 3};
    }
    case BoundId::diam: {
      const Rational& t = spec.param("t");
      if (t < 0) throw Error(ErrorKind::BadParams, "diam needs t >= 0");
      return {t / 2, 2};
    }
    case BoundId::graphs_corollary: {
      // 2^(-8/7) n^(2/7) = (n^2 / 2^8)^(1/7)
      require_positive(spec, "n");
      return {power(spec.param("n"), 2) / 256, 7};
    }
    case BoundId::onetwo_lower: {
      // 2^(-7/3) n^(4/3) = cbrt(n^4 / 2^7)
      require_positive(spec, "n");
      return {power(spec.param("n"), 4) / 128, 3};
    }
    case BoundId::turan_clique: {
      const Rational& x2 = spec.param("x2");
      const Rational& e2 = spec.param("e2");
      if (x2 < 0 || e2 < 0) throw Error(ErrorKind::BadParams, "turan_clique needs x2, e2 >= 0");
      if (x2 == 0) return {0, 1};
      return {power(x2, 2) / (2 * e2 + x2), 1};
    }
    case BoundId::calculus: {
      // beta x^(4/3) = cbrt(27 x^4 / 32)
      const Rational& x = spec.param("x");
      if (x < 0) throw Error(ErrorKind::BadParams, "calculus needs x >= 0");
      return {27 * power(x, 4) / 32, 3, -x / 2};
    }
  }
  throw Error(ErrorKind::BadParams, "unknown bound");
}

Interval bound_value(const BoundSpec& spec) { return bound_expression(spec).sandwich(); }

Interval alpha_constant() { return root_interval(Rational(1, 128), 3); }

Interval beta_constant() { return root_interval(Rational(27, 32), 3); }

double approximate(const Interval& interval) { return Rational((interval.lo + interval.hi) / 2).get_d(); }

}  // namespace metric_lines
