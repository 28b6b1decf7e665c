#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "metric_lines/line.hpp"
#include "metric_lines/metric_space.hpp"
#include "metric_lines/point_set.hpp"

namespace metric_lines {

// Simple undirected graph on {0..n-1}.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, PointSet(n)) {}
  Graph(std::size_t n, std::span<const PointPair> edges);
  Graph(std::size_t n, std::initializer_list<PointPair> edges)
      : Graph(n, std::span<const PointPair>(edges.begin(), edges.size())) {}

  std::size_t size() const { return rows_.size(); }
  bool adjacent(Point u, Point v) const { return rows_[u].contains(v); }
  const PointSet& neighbors(Point u) const { return rows_[u]; }
  // Throws BadParams on a loop or out-of-range endpoint.
  void add_edge(Point u, Point v);

  // Ascending (u, v) with u < v.
  std::vector<PointPair> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<PointSet> rows_;
};

bool is_connected(const Graph& graph);

// Hop distances from every vertex; throws DisconnectedGraph naming an
// unreachable pair.
std::vector<std::vector<std::size_t>> hop_distances(const Graph& graph);

MetricSpace graph_metric(const Graph& graph);

// v_0..v_t with d(v_i, v_j) = j - i, where t is the diameter. Picks the
// lexicographically smallest diametral pair, then the BFS path that always
// steps back to the smallest-labelled predecessor.
std::vector<Point> geodesic_path(const Graph& graph);

// Edges at distance 1, non-edges at distance 2. Connectivity not required.
MetricSpace one_two_space(const Graph& graph);
// Inverse of one_two_space; throws NotOneTwoSpace otherwise.
Graph one_two_graph(const MetricSpace& space);

bool is_one_two(const MetricSpace& space);

std::vector<PointPair> find_twins(const MetricSpace& space);
// Greedy in label order: keep a point unless it is a twin of a kept point.
PointSet maximal_twin_free(const MetricSpace& space);

enum class Lemma12Case { i, ii, iii, iv, v, vi };

std::size_t arity(Lemma12Case c);

struct Lemma12Outcome {
  bool applies = false;
  bool conclusion_holds = false;
};

// Precomputed distances, twins and line ids of a 1-2 space, for evaluating
// many point tuples against the same space.
class OneTwoContext {
 public:
  explicit OneTwoContext(const MetricSpace& space);

  std::size_t size() const { return n_; }
  int distance(Point u, Point v) const { return dist_[u * n_ + v]; }
  bool twins(Point u, Point v) const { return twin_[u * n_ + v]; }
  bool has_twin_other_than(Point u, Point excluded) const;
  bool same_line(Point a, Point b, Point c, Point d) const;
  const LineFamily& lines() const { return lines_; }

  Lemma12Outcome check(Lemma12Case c, std::span<const Point> points) const;

 private:
  std::size_t n_;
  std::vector<int> dist_;
  std::vector<char> twin_;
  LineFamily lines_;
  std::vector<std::size_t> line_id_;
};

Lemma12Outcome lemma12_check(const MetricSpace& space, Lemma12Case c, std::span<const Point> points);

}  // namespace metric_lines
