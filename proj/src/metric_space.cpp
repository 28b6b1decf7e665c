#include "metric_lines/metric_space.hpp"

#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

namespace {

void require_point(const MetricSpace& space, Point p) {
  if (p >= space.size())
    throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(p) + " outside space of size " +
                                                std::to_string(space.size()));
}

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : DistanceMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::BadParams, "distance matrix is not square");
    std::size_t j = 0;
    for (long value : row) (*this)(i, j++) = value;
    ++i;
  }
}

MetricSpace validate_metric(DistanceMatrix raw) {
  const std::size_t n = raw.n;
  if (raw.entries.size() != n * n) throw Error(ErrorKind::BadParams, "distance matrix is not square");

  for (std::size_t i = 0; i < n; ++i)
    if (raw(i, i) != 0)
      throw Error(ErrorKind::NonzeroDiagonal, "nonzero diagonal entry at " + at(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw(i, j) != raw(j, i))
        throw Error(ErrorKind::Asymmetry, "asymmetric entries at " + at(i, j) + " and " + at(j, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw(i, j) <= 0)
        throw Error(ErrorKind::NonpositiveDistance, "nonpositive distance at " + at(i, j));
  for (std::size_t from = 0; from < n; ++from)
    for (std::size_t to = from + 1; to < n; ++to)
      for (std::size_t via = 0; via < n; ++via) {
        if (via == from || via == to) continue;
        if (raw(from, to) > raw(from, via) + raw(via, to)) throw TriangleViolation(from, to, via);
      }
  return MetricSpace(std::move(raw));
}

bool between(const MetricSpace& space, Point a, Point b, Point c) {
  require_point(space, a);
  require_point(space, b);
  require_point(space, c);
  if (a == b || b == c || a == c) return false;
  return space(a, b) + space(b, c) == space(a, c);
}

Line line_of(const MetricSpace& space, Point u, Point v) {
  require_point(space, u);
  require_point(space, v);
  if (u == v) throw Error(ErrorKind::DegeneratePair, "a line needs two distinct points");

  PointSet points(space.size());
  points.insert(u);
  points.insert(v);
  for (Point p = 0; p < space.size(); ++p) {
    if (p == u || p == v) continue;
    if (between(space, p, u, v) || between(space, u, p, v) || between(space, u, v, p))
      points.insert(p);
  }
  return Line{std::move(points), {PointPair::of(u, v)}};
}

LineFamily line_family(const MetricSpace& space) {
  if (space.size() < 2) throw Error(ErrorKind::TooFewPoints, "lines need at least two points");
  return collect_lines(space.size(), [&](Point u, Point v) { return line_of(space, u, v).points; });
}

TripleSystem betweenness_triples(const MetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 3) throw Error(ErrorKind::TooFewPoints, "betweenness triples need at least three points");
  std::vector<Triple> edges;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c) {
        if (space(a, b) + space(b, c) == space(a, c) || space(b, a) + space(a, c) == space(b, c) ||
            space(a, c) + space(c, b) == space(a, b))
          edges.push_back(Triple{a, b, c});
      }
  return TripleSystem(n, edges);
}

Extremes extremes(const MetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw Error(ErrorKind::TooFewPoints, "extremes need at least two points");
  Extremes out{space(0, 1), space(0, 1), 0};
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) {
      if (space(i, j) < out.delta) out.delta = space(i, j);
      if (space(i, j) > out.dmax) out.dmax = space(i, j);
    }
  out.rho = out.dmax / out.delta;
  return out;
}

}  // namespace metric_lines
