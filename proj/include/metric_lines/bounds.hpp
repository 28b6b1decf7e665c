#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metric_lines/rational.hpp"

namespace metric_lines {

// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// radicand^(1/index) + offset. Every bound in this library has this shape,
// which lets comparisons against rationals be decided exactly.
struct RootExpression {
  Rational radicand;
  unsigned index = 1;
  Rational offset = 0;

  // Width at most 2^-30.
  Interval sandwich() const;
  // value >= this expression, decided exactly.
  bool at_most(const Rational& value) const;
};

// Nonnegative q-th root bracketed by dyadic rationals of width <= 2^-bits;
// exact (lo == hi) when the root is rational.
Interval root_interval(const Rational& radicand, unsigned index, unsigned bits = 40);

enum class BoundId { sparse_lemma, range, diam, graphs_corollary, onetwo_lower, turan_clique, calculus };

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);
const std::vector<BoundId>& all_bound_ids();

using BoundParams = std::vector<std::pair<std::string, Rational>>;

struct BoundSpec {
  BoundId id;
  BoundParams params;

  const Rational& param(std::string_view name) const;
};

// Parameter names, in order, for each bound:
//   sparse_lemma: t          0.25 (2t)^(2/3)
//   range: n, rho            0.25 (n/rho)^(2/3)
//   diam: t                  sqrt(t/2)
//   graphs_corollary: n      2^(-8/7) n^(2/7)
//   onetwo_lower: n          alpha n^(4/3), alpha = 2^(-7/3)
//   turan_clique: x2, e2     x2^2 / (2 e2 + x2)   (0 when x2 = 0)
//   calculus: x, y           beta x^(4/3) - x/2,  beta = 3 * 2^(-5/3)
RootExpression bound_expression(const BoundSpec& spec);
Interval bound_value(const BoundSpec& spec);

// alpha and beta as reporting-precision sandwiches.
Interval alpha_constant();
Interval beta_constant();

double approximate(const Interval& interval);

}  // namespace metric_lines
