#pragma once

#include <string>
#include <string_view>

#include "metric_lines/graph.hpp"
#include "metric_lines/metric_space.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

// Metric file: `n`, then n rows of n rationals (`p` or `p/q`).
// Structural problems throw ParseError with 1-based line and column; the
// metric axioms are then checked by validate_metric.
DistanceMatrix parse_distance_matrix(std::string_view text);
MetricSpace parse_metric(std::string_view text);
std::string format_metric(const MetricSpace& space);

// Triples file: `n m`, then m lines `a b c` with 0 <= a < b < c < n.
TripleSystem parse_triples(std::string_view text);
std::string format_triples(const TripleSystem& system);

// Graph file: `n m`, then m lines `u v` with 0 <= u < v < n.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& graph);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace metric_lines
