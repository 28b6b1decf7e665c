#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "metric_lines/bounds.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/metric_space.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

using Instance = std::variant<MetricSpace, Graph, TripleSystem>;

// Constructions. Points u, v, x, y, z of the pentagon are 0..4.
MetricSpace pentagon();
// k groups of m points; distance 2 inside a group, 1 across. Group g holds
// points g*m .. g*m + m - 1.
MetricSpace groups(std::size_t k, std::size_t m);
MetricSpace groups_of_sizes(std::span<const std::size_t> sizes);
// round(2^(-1/3) n^(2/3)) groups with sizes differing by at most one.
MetricSpace groups_balanced(std::size_t n);
std::size_t balanced_group_count(std::size_t n);
MetricSpace uniform(std::size_t n, const Rational& distance);
Graph path_graph(std::size_t t);  // t + 1 vertices
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Stable construction identifiers: pentagon, groups K M, groups_balanced N,
// path T, uniform N C, complete N, cycle N, fano, k34.
Instance construct(std::string_view kind, std::span<const Rational> params);
const std::vector<std::string_view>& construction_kinds();

// k m(m-1)/2 + k(k-1)/2 for k, m >= 3.
std::size_t predicted_group_lines(std::size_t k, std::size_t m);

struct BoundReport {
  BoundId id;
  BoundParams params;
  // Number of distinct lines, or the measured quantity for bounds that are
  // not about lines (clique size for turan_clique, left side for calculus).
  Rational lines_found;
  Interval bound;
  bool pass = false;
};

BoundReport check_range(const MetricSpace& space);
// The graph must be connected and its metric must have no universal line.
BoundReport check_diam(const Graph& graph);
BoundReport check_graphs_corollary(const Graph& graph);
BoundReport check_onetwo_lower(const MetricSpace& space);
// |S| >= |X2|^2 / (2|E2| + |X2|) where X2 is the complement of the greedy
// twin-free set, E2 the distance-2 pairs inside X2, S a largest set of X2
// with all distances 1.
BoundReport check_turan_clique(const MetricSpace& space);
BoundReport check_sparse_lemma(const TripleSystem& system, Point x, const PointSet& candidates);
BoundReport check_calculus(const Rational& x, const Rational& y);

struct CheckOptions {
  std::optional<Point> x;
  std::optional<PointSet> candidates;
  std::optional<Rational> calculus_x;
  std::optional<Rational> calculus_y;
};

// Dispatches on bound id; throws PreconditionUnmet when the instance type or
// options do not fit the bound.
BoundReport check_bound(BoundId id, const Instance* instance, const CheckOptions& options = {});

struct Bucket {
  PointSet members;
  std::size_t index = 0;  // members u satisfy index*delta <= d(x,u) < (index+1)*delta
};

// Largest bucket around x, lowest index on ties.
Bucket bucket_decomposition(const MetricSpace& space, Point x);

// Largest subset of `candidates` whose lines through x coincide; ties go to
// the lexicographically smallest member list.
PointSet equal_line_class(const TripleSystem& system, Point x, const PointSet& candidates);
PointSet equal_line_class(const MetricSpace& space, Point x, const PointSet& candidates);

// 0.5 (x^2 / (2y + x))^2 + y >= beta x^(4/3) - x/2, for x >= 3 and y >= 0.
bool calculus_check(const Rational& x, const Rational& y);

// Brute force; fine for the small point counts used here.
PointSet largest_unit_clique(const MetricSpace& space, const PointSet& within);

}  // namespace metric_lines
