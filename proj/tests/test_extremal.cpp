#include <doctest.h>

#include <cmath>
#include <random>

#include "metric_lines/metric_lines.hpp"
#include "oracle.hpp"

using namespace metric_lines;

namespace {

Rational pow_int(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= x;
  return out;
}

const Rational kMaxWidth = Rational(1, 1 << 30);

BoundSpec spec(BoundId id, BoundParams params) { return BoundSpec{id, std::move(params)}; }

MetricSpace random_closure(std::mt19937_64& rng, std::size_t n, long max_weight) {
  oracle::IntMatrix d(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = 1 + static_cast<long>(rng() % max_weight);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  DistanceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d[i][j];
  return validate_metric(std::move(m));
}

}  // namespace

TEST_CASE("root intervals") {
  const Interval exact = root_interval(27, 3);
  CHECK(exact.lo == 3);
  CHECK(exact.hi == 3);
  CHECK(root_interval(Rational(4, 9), 2).lo == Rational(2, 3));
  const Interval two = root_interval(2, 2);
  CHECK(two.width() <= Rational(1, 1L << 40));
  CHECK(pow_int(two.lo, 2) < 2);
  CHECK(pow_int(two.hi, 2) > 2);
  CHECK(root_interval(0, 5).hi == 0);
}

TEST_CASE("constants") {
  const Interval alpha = alpha_constant();
  CHECK(alpha.width() <= kMaxWidth);
  CHECK(pow_int(alpha.lo, 3) <= Rational(1, 128));
  CHECK(pow_int(alpha.hi, 3) >= Rational(1, 128));
  const Interval beta = beta_constant();
  CHECK(beta.width() <= kMaxWidth);
  CHECK(pow_int(beta.lo, 3) <= Rational(27, 32));
  CHECK(pow_int(beta.hi, 3) >= Rational(27, 32));
  CHECK(approximate(alpha) == doctest::Approx(std::pow(2.0, -7.0 / 3)));
  CHECK(approximate(beta) == doctest::Approx(3 * std::pow(2.0, -5.0 / 3)));
}

TEST_CASE("bound values") {
  const Interval range = bound_value(spec(BoundId::range, {{"n", 32}, {"rho", 2}}));
  CHECK(range.width() <= kMaxWidth);
  CHECK(approximate(range) == doctest::Approx(1.5874).epsilon(1e-4));
  // 0.25 * 16^(2/3) cubed is 256 / 64 = 4.
  CHECK(pow_int(range.lo, 3) <= 4);
  CHECK(pow_int(range.hi, 3) >= 4);

  const Interval diam = bound_value(spec(BoundId::diam, {{"t", 8}}));
  CHECK(diam.lo == 2);
  CHECK(diam.hi == 2);

  const Interval turan = bound_value(spec(BoundId::turan_clique, {{"x2", 6}, {"e2", 3}}));
  CHECK(turan.lo == 3);
  CHECK(turan.hi == 3);
  CHECK(bound_value(spec(BoundId::turan_clique, {{"x2", 0}, {"e2", 0}})).hi == 0);

  CHECK(approximate(bound_value(spec(BoundId::sparse_lemma, {{"t", 4}}))) == doctest::Approx(0.25 * 4.0));
  CHECK(approximate(bound_value(spec(BoundId::graphs_corollary, {{"n", 5}}))) ==
        doctest::Approx(std::pow(2.0, -8.0 / 7) * std::pow(5.0, 2.0 / 7)));
  CHECK(approximate(bound_value(spec(BoundId::onetwo_lower, {{"n", 9}}))) ==
        doctest::Approx(std::pow(2.0, -7.0 / 3) * std::pow(9.0, 4.0 / 3)));
  CHECK(approximate(bound_value(spec(BoundId::calculus, {{"x", 3}, {"y", 0}}))) ==
        doctest::Approx(3 * std::pow(2.0, -5.0 / 3) * std::pow(3.0, 4.0 / 3) - 1.5));

  CHECK_THROWS_AS(bound_value(spec(BoundId::range, {{"n", 4}})), Error);
  CHECK_THROWS_AS(bound_value(spec(BoundId::range, {{"n", 4}, {"rho", 0}})), Error);
  CHECK_THROWS_AS(bound_value(spec(BoundId::diam, {{"t", -1}})), Error);
}

TEST_CASE("exact comparison agrees with the sandwich") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const BoundSpec s = spec(BoundId::range, {{"n", long(2 + rng() % 40)}, {"rho", make_rational(1 + rng() % 9, 1 + rng() % 3)}});
    const RootExpression e = bound_expression(s);
    const Interval sandwich = e.sandwich();
    const Rational probe = make_rational(rng() % 64, 8);
    if (probe >= sandwich.hi) CHECK(e.at_most(probe));
    if (probe < sandwich.lo) CHECK_FALSE(e.at_most(probe));
  }
}

TEST_CASE("bound ids") {
  CHECK(all_bound_ids().size() == 7);
  for (BoundId id : all_bound_ids()) CHECK(parse_bound_id(to_string(id)) == id);
  CHECK_FALSE(parse_bound_id("nope"));
}

TEST_CASE("constructions") {
  const MetricSpace g = groups(3, 3);
  CHECK(g.size() == 9);
  std::size_t far = 0;
  for (Point u = 0; u < 9; ++u)
    for (Point v = u + 1; v < 9; ++v) far += g(u, v) == 2;
  CHECK(far == 9);
  CHECK(uniform(4, 1) == graph_metric(complete_graph(4)));
  CHECK_THROWS_AS(groups(1, 3), Error);
  CHECK_THROWS_AS(groups(2, 0), Error);
  CHECK_THROWS_AS(uniform(3, 0), Error);

  const std::vector<Rational> km{3, 3};
  CHECK(std::get<MetricSpace>(construct("groups", km)) == g);
  CHECK(std::get<MetricSpace>(construct("pentagon", {})) == pentagon());
  CHECK(std::get<TripleSystem>(construct("fano", {})) == fano());
  CHECK_THROWS_AS(construct("groups", std::vector<Rational>{3}), Error);
  CHECK_THROWS_AS(construct("groups", std::vector<Rational>{3, Rational(1, 2)}), Error);
  CHECK_THROWS_AS(construct("hexagon", {}), Error);
  for (auto kind : construction_kinds()) CHECK_FALSE(kind.empty());
}

TEST_CASE("balanced groups") {
  for (std::size_t n = 3; n <= 60; ++n) {
    const double target = std::cbrt(double(n) * n / 2.0);
    const std::size_t k = balanced_group_count(n);
    if (std::abs(target - std::floor(target) - 0.5) > 1e-9) CHECK(k == std::size_t(std::lround(target)));
    const MetricSpace s = groups_balanced(n);
    CHECK(s.size() == n);
    std::vector<std::size_t> sizes;
    // Group sizes from twins: same group iff distance 2.
    std::vector<bool> seen(n);
    for (Point u = 0; u < n; ++u) {
      if (seen[u]) continue;
      std::size_t size = 0;
      for (Point v = 0; v < n; ++v)
        if (v == u || s(u, v) == 2) {
          seen[v] = true;
          ++size;
        }
      sizes.push_back(size);
    }
    CHECK(sizes.size() == std::max<std::size_t>(k, 1));
    CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
  }
}

TEST_CASE("group line counts") {
  CHECK(predicted_group_lines(3, 3) == 12);
  CHECK(predicted_group_lines(4, 3) == 18);
  CHECK(predicted_group_lines(3, 4) == 21);
  CHECK_THROWS_AS(predicted_group_lines(2, 3), Error);
  CHECK_THROWS_AS(predicted_group_lines(3, 2), Error);
  for (int k = 3; k <= 4; ++k)
    for (int m = 3; m <= 4; ++m) {
      const auto d = oracle::groups(k, m);
      CHECK(oracle::distinct_lines(d).size() == predicted_group_lines(k, m));
      CHECK_FALSE(oracle::has_universal(d));
    }
}

TEST_CASE("bound checks on named instances") {
  const BoundReport range = check_range(pentagon());
  CHECK(range.pass);
  CHECK(range.lines_found == 10);
  CHECK(approximate(range.bound) == doctest::Approx(0.25 * std::pow(2.5, 2.0 / 3)));

  const BoundReport corollary = check_graphs_corollary(cycle_graph(5));
  CHECK(corollary.pass);
  CHECK(corollary.lines_found == 10);
  CHECK(corollary.bound.hi < 2);

  const BoundReport uniform_range = check_range(uniform(4, 1));
  CHECK(uniform_range.pass);
  CHECK(uniform_range.lines_found == 6);

  CHECK(check_diam(cycle_graph(5)).pass);
  CHECK_THROWS_AS(check_diam(path_graph(3)), Error);
  CHECK_THROWS_AS(check_graphs_corollary(path_graph(3)), Error);

  const BoundReport onetwo = check_onetwo_lower(groups(3, 3));
  CHECK(onetwo.pass);
  CHECK(onetwo.lines_found == 12);
  CHECK_THROWS_AS(check_onetwo_lower(uniform(3, 3)), Error);

  const BoundReport turan = check_turan_clique(groups(3, 3));
  CHECK(turan.pass);
  CHECK(turan.lines_found == 3);
  CHECK(turan.bound.lo == 3);

  const BoundReport sparse = check_sparse_lemma(fano(), 0, PointSet(7, {1, 2, 4}));
  CHECK(sparse.pass);
  CHECK(sparse.lines_found == 7);
  CHECK_THROWS_AS(check_sparse_lemma(k34(), 0, PointSet(4, {1, 2, 3})), Error);

  const Instance instance = pentagon();
  CHECK(check_bound(BoundId::range, &instance).pass);
  CHECK_THROWS_AS(check_bound(BoundId::diam, &instance), Error);
  CHECK_THROWS_AS(check_bound(BoundId::sparse_lemma, &instance), Error);
  CheckOptions calc;
  calc.calculus_x = 3;
  calc.calculus_y = 0;
  CHECK(check_bound(BoundId::calculus, nullptr, calc).pass);
}

TEST_CASE("turan clique on random 1-2 spaces") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    Graph g(n);
    for (Point u = 0; u < n; ++u)
      for (Point v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    const MetricSpace s = one_two_space(g);
    CHECK(check_turan_clique(s).pass);
    // Brute-force clique within the full point set.
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool clique = true;
      for (Point u = 0; u < n && clique; ++u)
        for (Point v = u + 1; v < n && clique; ++v)
          if ((mask >> u & 1) && (mask >> v & 1) && s(u, v) != 1) clique = false;
      if (clique) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    PointSet all(n);
    for (Point u = 0; u < n; ++u) all.insert(u);
    CHECK(largest_unit_clique(s, all).size() == best);
  }
}

TEST_CASE("bucket decomposition") {
  const Bucket p = bucket_decomposition(pentagon(), 0);
  CHECK(p.members.members() == std::vector<Point>{1, 4});
  CHECK(p.index == 1);
  const Bucket u = bucket_decomposition(uniform(5, 1), 2);
  CHECK(u.members.members() == std::vector<Point>{0, 1, 3, 4});
  CHECK(u.index == 1);
  const Bucket path = bucket_decomposition(graph_metric(path_graph(3)), 0);
  CHECK(path.members.members() == std::vector<Point>{1});
  CHECK(path.index == 1);
  CHECK_THROWS_AS(bucket_decomposition(pentagon(), 5), Error);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const MetricSpace s = random_closure(rng, n, 7);
    const Extremes e = extremes(s);
    const mpz_class floor_rho = e.rho.get_num() / e.rho.get_den();
    const Point x = rng() % n;
    const Bucket b = bucket_decomposition(s, x);
    CHECK(Rational(b.members.size()) * floor_rho >= Rational(n - 1));
    CHECK_FALSE(b.members.contains(x));
    for (Point v : b.members.members()) {
      CHECK(s(x, v) >= e.delta * b.index);
      CHECK(s(x, v) < e.delta * (b.index + 1));
    }
  }
}

TEST_CASE("equal line classes") {
  CHECK(equal_line_class(uniform(5, 1), 0, PointSet(5, {1, 2, 3, 4})).members() == std::vector<Point>{1});
  CHECK(equal_line_class(k34(), 0, PointSet(4, {1, 2, 3})).members() == std::vector<Point>{1, 2, 3});
  CHECK(equal_line_class(groups(3, 3), 0, PointSet(9, {3, 4, 5, 6, 7, 8})).members() == std::vector<Point>{3, 4, 5});
  CHECK_THROWS_AS(equal_line_class(k34(), 0, PointSet(4, {0, 1})), Error);
  CHECK_THROWS_AS(equal_line_class(pentagon(), 0, PointSet(5, {0, 1})), Error);
}

TEST_CASE("calculus remark") {
  CHECK(calculus_check(3, 0));
  CHECK(calculus_check(3, 100));
  CHECK(calculus_check(100, 0));
  CHECK(check_calculus(3, 0).lines_found == Rational(9, 2));
  CHECK_THROWS_AS(calculus_check(2, 0), Error);
  CHECK_THROWS_AS(calculus_check(3, -1), Error);
  // Floating cross-check of the exact decision at a few fractional points.
  for (int i = 0; i < 40; ++i) {
    const Rational x = make_rational(300 + 37 * i, 100), y = make_rational(11 * i, 7);
    const double xd = x.get_d(), yd = y.get_d();
    const double lhs = 0.5 * std::pow(xd * xd / (2 * yd + xd), 2) + yd;
    const double rhs = 3 * std::pow(2.0, -5.0 / 3) * std::pow(xd, 4.0 / 3) - xd / 2;
    if (std::abs(lhs - rhs) > 1e-6) CHECK(calculus_check(x, y) == (lhs >= rhs));
  }
}
