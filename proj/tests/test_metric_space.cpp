#include <doctest.h>

#include <random>

#include "metric_lines/metric_lines.hpp"
#include "oracle.hpp"

using namespace metric_lines;

namespace {

MetricSpace from_ints(const oracle::IntMatrix& m) {
  DistanceMatrix d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d(i, j) = m[i][j];
  return validate_metric(std::move(d));
}

std::vector<Point> pts(const PointSet& s) { return s.members(); }

// u, v, x, y, z
constexpr Point U = 0, V = 1, X = 2, Y = 3, Z = 4;

}  // namespace

TEST_CASE("validate_metric accepts and rejects") {
  CHECK_NOTHROW(pentagon());
  CHECK_NOTHROW(validate_metric(DistanceMatrix{{0, 1}, {1, 0}}));

  try {
    validate_metric(DistanceMatrix{{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected a triangle violation");
  } catch (const TriangleViolation& e) {
    CHECK(e.from() == 0);
    CHECK(e.to() == 2);
    CHECK(e.via() == 1);
  }

  auto kind_of = [](DistanceMatrix m) {
    try {
      validate_metric(std::move(m));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of(DistanceMatrix{{0, 1}, {2, 0}}) == ErrorKind::Asymmetry);
  CHECK(kind_of(DistanceMatrix{{1, 1}, {1, 0}}) == ErrorKind::NonzeroDiagonal);
  CHECK(kind_of(DistanceMatrix{{0, 0}, {0, 0}}) == ErrorKind::NonpositiveDistance);
  CHECK(kind_of(DistanceMatrix{{0, -1}, {-1, 0}}) == ErrorKind::NonpositiveDistance);
}

TEST_CASE("between on the pentagon") {
  const MetricSpace p = pentagon();
  CHECK(between(p, V, X, Y));
  CHECK_FALSE(between(p, U, U, X));
  // Oracle: no point can be the middle of v, y, z in any order that puts y in the middle.
  CHECK_FALSE(between(p, V, Y, Z));
  const auto d = oracle::pentagon();
  CHECK(oracle::between(d, V, Y, Z) == false);
  CHECK_THROWS_AS(between(p, 0, 1, 5), Error);
}

TEST_CASE("pentagon lines are nested") {
  const MetricSpace p = pentagon();
  const Line vy = line_of(p, V, Y);
  const Line xy = line_of(p, X, Y);
  CHECK(pts(vy.points) == std::vector<Point>{V, X, Y});
  CHECK(pts(xy.points) == std::vector<Point>{V, X, Y, Z});
  CHECK(vy.points.is_proper_subset_of(xy.points));
  CHECK_THROWS_AS(line_of(p, U, U), Error);
}

TEST_CASE("uniform space lines are the pairs") {
  const MetricSpace s = uniform(4, 1);
  for (Point u = 0; u < 4; ++u)
    for (Point v = u + 1; v < 4; ++v) CHECK(line_of(s, u, v).points.size() == 2);
  const LineFamily family = line_family(s);
  CHECK(family.count() == 6);
  CHECK_FALSE(family.universal_present);
}

TEST_CASE("pentagon line family matches the oracle recount") {
  const auto expected = oracle::distinct_lines(oracle::pentagon());
  REQUIRE(expected.size() == 10);
  const LineFamily family = line_family(pentagon());
  CHECK(family.count() == 10);
  CHECK_FALSE(family.universal_present);
  CHECK(family.pair_count == 10);
  std::size_t size3 = 0, size4 = 0;
  for (const auto& line : family.lines) {
    const auto m = line.points.members();
    CHECK(expected.count(std::vector<int>(m.begin(), m.end())) == 1);
    size3 += m.size() == 3;
    size4 += m.size() == 4;
  }
  CHECK(size3 == 5);
  CHECK(size4 == 5);
}

TEST_CASE("path metric has a universal line") {
  const LineFamily family = line_family(graph_metric(path_graph(3)));
  CHECK(family.universal_present);
}

TEST_CASE("betweenness triples") {
  const TripleSystem t = betweenness_triples(pentagon());
  std::vector<Triple> expected;
  for (const auto& e : oracle::triples(oracle::pentagon()))
    expected.push_back({Point(e[0]), Point(e[1]), Point(e[2])});
  CHECK(t.edges() == expected);
  CHECK(t.edge_count() == 5);
  // The five consecutive triples of the cycle u v x y z.
  CHECK(t.contains(U, V, X));
  CHECK(t.contains(V, X, Y));
  CHECK(t.contains(X, Y, Z));
  CHECK(t.contains(Y, Z, U));
  CHECK(t.contains(Z, U, V));

  CHECK(betweenness_triples(uniform(5, 1)).edge_count() == 0);
  const TripleSystem path = betweenness_triples(graph_metric(path_graph(2)));
  CHECK(path.edges() == std::vector<Triple>{{0, 1, 2}});
  CHECK_THROWS_AS(betweenness_triples(uniform(2, 1)), Error);
}

TEST_CASE("extremes") {
  const Extremes p = extremes(pentagon());
  CHECK(p.delta == 1);
  CHECK(p.dmax == 2);
  CHECK(p.rho == 2);
  const Extremes u = extremes(uniform(4, Rational(3, 2)));
  CHECK(u.delta == Rational(3, 2));
  CHECK(u.rho == 1);
  const Extremes path = extremes(graph_metric(path_graph(6)));
  CHECK(path.delta == 1);
  CHECK(path.dmax == 6);
  CHECK(path.rho == 6);
  CHECK_THROWS_AS(extremes(uniform(1, 1)), Error);
}

TEST_CASE("line properties on random metrics") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    // Metric closure of random weights.
    oracle::IntMatrix d(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = 1 + static_cast<long>(rng() % 4);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    const MetricSpace s = from_ints(d);
    const TripleSystem h = betweenness_triples(s);

    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v) {
        if (u == v) continue;
        const Line l = line_of(s, u, v);
        CHECK(l.points == line_of(s, v, u).points);
        CHECK(l.points.contains(u));
        CHECK(l.points.contains(v));
        CHECK(l.points == hyper_line(h, u, v).points);
        for (Point w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          CHECK(l.points.contains(w) == line_of(s, u, w).points.contains(v));
        }
      }
    CHECK(line_family(s).same_lines_as(hyper_line_family(h)));
    CHECK(line_family(s).count() == oracle::distinct_lines(d).size());
  }
}

TEST_CASE("any symmetric 1-2 matrix is a metric") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = 1 + static_cast<long>(rng() % 2);
    CHECK_NOTHROW(validate_metric(std::move(d)));
  }
}
