#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "metric_lines/graph.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

// hypergraphs: 3-uniform hypergraphs (n <= 6)
// one_two: every graph read as a 1-2 metric space (n <= 7)
// graph_metrics: connected graphs with their shortest-path metric (n <= 8)
enum class Universe { hypergraphs, one_two, graph_metrics };

std::string_view to_string(Universe universe);
std::optional<Universe> parse_universe(std::string_view name);
std::size_t size_cap(Universe universe);
// true for hypergraphs and graph_metrics, false for one_two.
bool default_exclude_universal(Universe universe);

using Witness = std::variant<Graph, TripleSystem>;

struct SearchReport {
  Universe universe = Universe::hypergraphs;
  std::size_t n = 0;
  bool exclude_universal = false;
  std::size_t minimum = 0;
  Witness witness;
  // Labelled candidates canonicalized to build the classes on n vertices.
  std::size_t instances_examined = 0;
  // Isomorphism classes in the universe.
  std::size_t iso_classes = 0;
  std::chrono::milliseconds elapsed{0};
};

// Exact minimum number of distinct lines over the universe. The witness is
// the first minimizer in canonical order.
SearchReport min_lines(Universe universe, std::size_t n, bool exclude_universal, std::size_t workers = 0);

struct ScanLevel {
  std::size_t n = 0;
  std::size_t connected_classes = 0;
  std::size_t without_universal = 0;
  std::optional<std::size_t> minimum;  // over classes without a universal line
  std::optional<Graph> witness;
};

struct Violator {
  Graph graph;
  std::size_t lines = 0;
};

struct ConjectureReport {
  std::size_t n_max = 0;
  std::vector<ScanLevel> levels;  // n = 3 .. n_max
  std::vector<Violator> violators;
  std::chrono::milliseconds elapsed{0};
};

// Connected graphs on at most n_max <= 8 vertices whose metric has no
// universal line and fewer than n distinct lines.
ConjectureReport conjecture_scan(std::size_t n_max, std::size_t workers = 0);

}  // namespace metric_lines
