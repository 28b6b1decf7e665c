#pragma once

#include <cstddef>
#include <vector>

#include "metric_lines/line.hpp"
#include "metric_lines/rational.hpp"

namespace metric_lines {

class TripleSystem;

// Square matrix of rationals, row-major. No axioms implied.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<Rational> entries;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t size) : n(size), entries(size * size) {}
  DistanceMatrix(std::initializer_list<std::initializer_list<long>> rows);

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

// A finite metric space with exact distances. Only validate_metric builds one,
// so every instance satisfies the metric axioms.
class MetricSpace {
 public:
  std::size_t size() const { return dist_.n; }
  const Rational& operator()(Point i, Point j) const { return dist_(i, j); }
  const DistanceMatrix& matrix() const { return dist_; }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.dist_.entries == b.dist_.entries;
  }

 private:
  friend MetricSpace validate_metric(DistanceMatrix raw);
  explicit MetricSpace(DistanceMatrix dist) : dist_(std::move(dist)) {}

  DistanceMatrix dist_;
};

// Checks zero diagonal, symmetry, positivity, then the triangle inequality,
// and throws on the first violation found in row-major scan order.
MetricSpace validate_metric(DistanceMatrix raw);

// [abc]: a, b, c pairwise distinct and d(a,b) + d(b,c) = d(a,c).
bool between(const MetricSpace& space, Point a, Point b, Point c);

Line line_of(const MetricSpace& space, Point u, Point v);

LineFamily line_family(const MetricSpace& space);

TripleSystem betweenness_triples(const MetricSpace& space);

struct Extremes {
  Rational delta;  // smallest nonzero distance
  Rational dmax;
  Rational rho;  // dmax / delta
};

Extremes extremes(const MetricSpace& space);

}  // namespace metric_lines
