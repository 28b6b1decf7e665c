#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metric_lines/line.hpp"
#include "metric_lines/metric_space.hpp"

namespace metric_lines {

using Triple = std::array<Point, 3>;

// 3-uniform hypergraph on {0..n-1}. Edges are kept sorted, deduplicated and
// each stored ascending.
class TripleSystem {
 public:
  TripleSystem() = default;
  // Throws BadParams on an edge with repeated or out-of-range vertices.
  TripleSystem(std::size_t n, std::span<const Triple> edges);
  TripleSystem(std::size_t n, std::initializer_list<Triple> edges)
      : TripleSystem(n, std::span<const Triple>(edges.begin(), edges.size())) {}

  std::size_t size() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(Point a, Point b, Point c) const;
  // {w : {u, v, w} is an edge}
  const PointSet& link(Point u, Point v) const;

  friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t pair_index(Point u, Point v) const;

  std::size_t n_ = 0;
  std::vector<Triple> edges_;
  std::vector<PointSet> links_;
};

Line hyper_line(const TripleSystem& system, Point u, Point v);

LineFamily hyper_line_family(const TripleSystem& system);

struct VertexSignatures {
  // signatures[v] = ids (into the line family) of lines containing v
  std::vector<std::vector<std::size_t>> signatures;
  bool injective = false;
};

VertexSignatures vertex_signatures(const TripleSystem& system);
VertexSignatures vertex_signatures(const LineFamily& family);

// True iff no u, v, w in `candidates` make x, u, v, w induce all four triples.
bool k34_condition(const TripleSystem& system, Point x, const PointSet& candidates);

// Edges {i, i+1, i+3} mod 7.
TripleSystem fano();

// Full 3-uniform hypergraph on 4 vertices.
TripleSystem k34();

struct FeasibilityResult {
  bool metrizable = false;
  std::optional<MetricSpace> witness;
  std::uint64_t assignments_tried = 0;
  // Margin of the witness assignment; 0 when no assignment is feasible.
  Rational best_margin;
};

struct MetrizableOptions {
  Rational normalization_cap = 1;
  std::size_t max_edges = 12;
  // 0 means use the default worker count.
  std::size_t workers = 0;
};

// Decides whether some metric realizes exactly these betweenness triples.
// Enumerates every choice of middle vertex per edge and solves one exact
// linear program per choice.
FeasibilityResult metrizable(const TripleSystem& system, const MetrizableOptions& options = {});

}  // namespace metric_lines
