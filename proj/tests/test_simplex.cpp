#include <doctest.h>

#include <random>

#include "metric_lines/simplex.hpp"
#include "metric_lines/small_rational.hpp"

using namespace metric_lines;

namespace {

LinearProgram program(std::size_t variables, std::vector<long> objective) {
  LinearProgram lp;
  lp.variables = variables;
  for (long c : objective) lp.objective.emplace_back(c);
  return lp;
}

// Brute force over all vertices of a 2-variable polygon: intersect every pair
// of constraint lines (including the axes) and keep the best feasible point.
Rational brute_force_2d(const LinearProgram& lp) {
  std::vector<std::array<Rational, 3>> lines;  // a x + b y = c
  for (std::size_t i = 0; i < lp.rows.size(); ++i) lines.push_back({lp.rows[i][0], lp.rows[i][1], lp.rhs[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  Rational best = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a1, b1, c1] = lines[i];
      const auto& [a2, b2, c2] = lines[j];
      const Rational det = a1 * b2 - a2 * b1;
      if (det == 0) continue;
      const Rational x = (c1 * b2 - c2 * b1) / det;
      const Rational y = (a1 * c2 - a2 * c1) / det;
      if (x < 0 || y < 0) continue;
      bool ok = true;
      for (std::size_t r = 0; r < lp.rows.size(); ++r) ok = ok && lp.rows[r][0] * x + lp.rows[r][1] * y <= lp.rhs[r];
      if (ok) best = std::max(best, Rational(lp.objective[0] * x + lp.objective[1] * y));
    }
  return best;
}

}  // namespace

TEST_CASE("textbook optimum") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
  LinearProgram lp = program(2, {3, 5});
  lp.add_row({{0, 1}}, 4);
  lp.add_row({{1, 2}}, 12);
  lp.add_row({{0, 3}, {1, 2}}, 18);
  const LpResult r = solve_lp(lp);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == 36);
  CHECK(r.solution == std::vector<Rational>{2, 6});
}

TEST_CASE("fractional optimum") {
  // max x + y, 3x + y <= 2, x + 3y <= 2 -> 1 at (1/2, 1/2)
  LinearProgram lp = program(2, {1, 1});
  lp.add_row({{0, 3}, {1, 1}}, 2);
  lp.add_row({{0, 1}, {1, 3}}, 2);
  const LpResult r = solve_lp(lp);
  CHECK(r.value == 1);
  CHECK(r.solution == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("unbounded and degenerate") {
  LinearProgram lp = program(2, {1, 0});
  lp.add_row({{1, 1}}, 1);
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);

  LinearProgram zero = program(2, {1, -1});
  zero.add_row({{0, 1}, {1, -1}}, 0);
  zero.add_row({{0, -1}, {1, 1}}, 0);
  const LpResult r = solve_lp(zero);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == 0);
}

TEST_CASE("early stop") {
  LinearProgram lp = program(1, {1});
  lp.add_row({{0, 1}}, 10);
  const LpResult r = solve_lp(lp, Rational(0));
  CHECK(r.status == LpStatus::Stopped);
  CHECK(r.value > 0);
}

TEST_CASE("rejects malformed programs") {
  LinearProgram lp = program(2, {1, 1});
  lp.add_row({{0, 1}}, -1);
  CHECK_THROWS(solve_lp(lp));
  LinearProgram bad = program(2, {1});
  CHECK_THROWS(solve_lp(bad));
}

TEST_CASE("random 2d programs match vertex enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp = program(2, {long(rng() % 7), long(rng() % 7)});
    const int rows = 2 + rng() % 5;
    for (int r = 0; r < rows; ++r) lp.add_row({{0, long(rng() % 9) - 2}, {1, long(rng() % 9) - 2}}, long(rng() % 20));
    // Keep the region bounded.
    lp.add_row({{0, 1}, {1, 1}}, 30);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == brute_force_2d(lp));
  }
}

TEST_CASE("large coefficients fall back to arbitrary precision") {
  // Coefficients near 2^62 overflow the fast path.
  const long big = 4611686018427387903L;
  LinearProgram lp = program(2, {1, 1});
  lp.add_row({{0, big}, {1, 1}}, big);
  lp.add_row({{0, 1}, {1, big}}, big);
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  const Rational b(mpz_class(std::to_string(big)));
  const Rational expected = 2 * b / (b + 1);
  CHECK(r.value == expected);
}

TEST_CASE("small rational arithmetic") {
  const SmallRational a = SmallRational::from(Rational(3, 4));
  const SmallRational b = SmallRational::from(Rational(-5, 6));
  CHECK((a + b).to_rational() == Rational(-1, 12));
  CHECK((a * b).to_rational() == Rational(-5, 8));
  CHECK((a / b).to_rational() == Rational(-9, 10));
  CHECK(b < a);
  const SmallRational huge = SmallRational::from(Rational(mpz_class("9000000000000000000")));
  CHECK_THROWS_AS(huge * huge, RationalOverflow);
}
