#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "metric_lines/graph.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

// Bit-string encodings for small instances. Position p of the string is bit
// (len - 1 - p) of the integer, so integer order is lexicographic order.
//
// Graphs (n <= 8): pairs in colex order (0,1),(0,2),(1,2),(0,3),...
// Triple systems (n <= 6): triples in colex order (0,1,2),(0,1,3),(0,2,3),...
std::size_t graph_code_length(std::size_t n);
std::size_t triple_code_length(std::size_t n);

std::uint64_t graph_code(const Graph& graph);
Graph graph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t triple_code(const TripleSystem& system);
TripleSystem triple_system_from_code(std::size_t n, std::uint64_t code);

// Lexicographically smallest code over all vertex relabelings.
std::uint64_t canonical_graph_code(std::size_t n, std::uint64_t code);
std::uint64_t canonical_triple_code(std::size_t n, std::uint64_t code);

struct EnumerationStats {
  std::size_t iso_classes = 0;
  // Labelled candidates canonicalized at the last augmentation step.
  std::size_t candidates = 0;
};

inline constexpr std::size_t kMaxGraphVertices = 8;
inline constexpr std::size_t kMaxTripleVertices = 6;

// One representative per isomorphism class, ascending canonical code.
// Results are memoized per n.
const std::vector<std::uint64_t>& graph_class_codes(std::size_t n, EnumerationStats* stats = nullptr);
const std::vector<std::uint64_t>& triple_class_codes(std::size_t n, EnumerationStats* stats = nullptr);

// 1 <= n <= 8
std::vector<Graph> enum_graphs(std::size_t n, bool connected_only);
// 3 <= n <= 6
std::vector<TripleSystem> enum_triple_systems(std::size_t n);

}  // namespace metric_lines
