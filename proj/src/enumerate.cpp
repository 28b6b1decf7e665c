#include "metric_lines/enumerate.hpp"

#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/parallel.hpp"

namespace metric_lines {

namespace {

std::size_t pair_position(Point j, Point k) { return k * (k - 1) / 2 + j; }  // j < k

std::size_t triple_position(Point a, Point b, Point c) {  // a < b < c
  return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

// Backtracking over vertex orders. At depth k the chosen vertex fixes the
// block of code positions whose largest vertex is k; a branch is dropped as
// soon as its prefix exceeds the best complete code's prefix.
struct GraphCanonizer {
  std::size_t n;
  std::array<std::uint8_t, kMaxGraphVertices> adj{};
  std::array<Point, kMaxGraphVertices> order{};
  std::size_t length = 0;
  std::uint64_t best = ~std::uint64_t{0};

  void search(std::size_t depth, std::uint8_t used, std::uint64_t prefix) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    const std::size_t filled = (depth + 1) * depth / 2;
    for (Point w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      std::uint64_t next = prefix;
      for (std::size_t j = 0; j < depth; ++j) next = next << 1 | (adj[order[j]] >> w & 1);
      if (next > best >> (length - filled)) continue;
      order[depth] = w;
      search(depth + 1, used | std::uint8_t(1u << w), next);
    }
  }
};

struct TripleCanonizer {
  std::size_t n;
  // edge[a][b] = bitmask of c with {a,b,c} an edge
  std::array<std::array<std::uint8_t, kMaxTripleVertices>, kMaxTripleVertices> link{};
  std::array<Point, kMaxTripleVertices> order{};
  std::size_t length = 0;
  std::uint64_t best = ~std::uint64_t{0};

  void search(std::size_t depth, std::uint8_t used, std::uint64_t prefix) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    const std::size_t filled = (depth + 1) * depth * (depth - 1 + (depth == 0)) / 6;
    for (Point w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      std::uint64_t next = prefix;
      for (std::size_t b = 1; b < depth; ++b)
        for (std::size_t a = 0; a < b; ++a) next = next << 1 | (link[order[a]][order[b]] >> w & 1);
      if (next > best >> (length - filled)) continue;
      order[depth] = w;
      search(depth + 1, used | std::uint8_t(1u << w), next);
    }
  }
};

struct ClassTable {
  std::vector<std::uint64_t> codes;
  EnumerationStats stats;
};

template <typename Canon>
const ClassTable& memoized(std::map<std::size_t, ClassTable>& cache, std::mutex& mutex, std::size_t n,
                           Canon&& build) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  ClassTable table = build();
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(table)).first->second;
}

// Classes on n vertices from classes on n - 1 by adding vertex n - 1 with
// every possible neighbourhood (extension bits).
template <typename Canonical>
ClassTable augment(std::size_t n, const std::vector<std::uint64_t>& parents, std::size_t extension_bits,
                   Canonical&& canonical) {
  const std::size_t per_parent = std::size_t{1} << extension_bits;
  std::mutex merge_mutex;
  std::set<std::uint64_t> merged;
  parallel_for(parents.size(), 0, [&](std::size_t i, std::size_t) {
    std::set<std::uint64_t> local;
    for (std::size_t ext = 0; ext < per_parent; ++ext)
      local.insert(canonical((parents[i] << extension_bits) | ext));
    std::lock_guard lock(merge_mutex);
    merged.insert(local.begin(), local.end());
  });
  ClassTable table;
  table.codes.assign(merged.begin(), merged.end());
  table.stats = {table.codes.size(), parents.size() * per_parent};
  (void)n;
  return table;
}

}  // namespace

std::size_t graph_code_length(std::size_t n) { return n * (n - 1 + (n == 0)) / 2; }

std::size_t triple_code_length(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::uint64_t graph_code(const Graph& graph) {
  const std::size_t n = graph.size();
  if (n > kMaxGraphVertices) throw Error(ErrorKind::SizeCap, "graph codes cover at most 8 vertices");
  const std::size_t len = graph_code_length(n);
  std::uint64_t code = 0;
  for (const auto& e : graph.edges()) code |= std::uint64_t{1} << (len - 1 - pair_position(e.first, e.second));
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph graph(n);
  const std::size_t len = graph_code_length(n);
  for (Point k = 1; k < n; ++k)
    for (Point j = 0; j < k; ++j)
      if (code >> (len - 1 - pair_position(j, k)) & 1) graph.add_edge(j, k);
  return graph;
}

std::uint64_t triple_code(const TripleSystem& system) {
  const std::size_t n = system.size();
  if (n > kMaxTripleVertices) throw Error(ErrorKind::SizeCap, "triple codes cover at most 6 vertices");
  const std::size_t len = triple_code_length(n);
  std::uint64_t code = 0;
  for (const auto& t : system.edges()) code |= std::uint64_t{1} << (len - 1 - triple_position(t[0], t[1], t[2]));
  return code;
}

TripleSystem triple_system_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Triple> edges;
  const std::size_t len = triple_code_length(n);
  for (Point c = 2; c < n; ++c)
    for (Point b = 1; b < c; ++b)
      for (Point a = 0; a < b; ++a)
        if (code >> (len - 1 - triple_position(a, b, c)) & 1) edges.push_back({a, b, c});
  return TripleSystem(n, edges);
}

std::uint64_t canonical_graph_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxGraphVertices) throw Error(ErrorKind::SizeCap, "graph codes cover at most 8 vertices");
  GraphCanonizer canon{n};
  canon.length = graph_code_length(n);
  if (canon.length == 0) return 0;
  for (Point k = 1; k < n; ++k)
    for (Point j = 0; j < k; ++j)
      if (code >> (canon.length - 1 - pair_position(j, k)) & 1) {
        canon.adj[j] |= std::uint8_t(1u << k);
        canon.adj[k] |= std::uint8_t(1u << j);
      }
  canon.best = (std::uint64_t{1} << canon.length) - 1;
  canon.search(0, 0, 0);
  return canon.best;
}

std::uint64_t canonical_triple_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxTripleVertices) throw Error(ErrorKind::SizeCap, "triple codes cover at most 6 vertices");
  TripleCanonizer canon{n};
  canon.length = triple_code_length(n);
  if (canon.length == 0) return 0;
  for (Point c = 2; c < n; ++c)
    for (Point b = 1; b < c; ++b)
      for (Point a = 0; a < b; ++a)
        if (code >> (canon.length - 1 - triple_position(a, b, c)) & 1) {
          canon.link[a][b] |= std::uint8_t(1u << c);
          canon.link[b][a] |= std::uint8_t(1u << c);
          canon.link[a][c] |= std::uint8_t(1u << b);
          canon.link[c][a] |= std::uint8_t(1u << b);
          canon.link[b][c] |= std::uint8_t(1u << a);
          canon.link[c][b] |= std::uint8_t(1u << a);
        }
  canon.best = (std::uint64_t{1} << canon.length) - 1;
  canon.search(0, 0, 0);
  return canon.best;
}

const std::vector<std::uint64_t>& graph_class_codes(std::size_t n, EnumerationStats* stats) {
  if (n < 1 || n > kMaxGraphVertices)
    throw Error(ErrorKind::SizeCap, "graph enumeration covers 1 <= n <= 8, got " + std::to_string(n));
  static std::map<std::size_t, ClassTable> cache;
  static std::mutex mutex;
  const ClassTable& table = memoized(cache, mutex, n, [n] {
    if (n == 1) return ClassTable{{0}, {1, 1}};
    return augment(n, graph_class_codes(n - 1), n - 1,
                   [n](std::uint64_t code) { return canonical_graph_code(n, code); });
  });
  if (stats) *stats = table.stats;
  return table.codes;
}

const std::vector<std::uint64_t>& triple_class_codes(std::size_t n, EnumerationStats* stats) {
  if (n < 2 || n > kMaxTripleVertices)
    throw Error(ErrorKind::SizeCap, "triple system enumeration covers n <= 6, got " + std::to_string(n));
  static std::map<std::size_t, ClassTable> cache;
  static std::mutex mutex;
  const ClassTable& table = memoized(cache, mutex, n, [n] {
    if (n == 2) return ClassTable{{0}, {1, 1}};
    return augment(n, triple_class_codes(n - 1), (n - 1) * (n - 2) / 2,
                   [n](std::uint64_t code) { return canonical_triple_code(n, code); });
  });
  if (stats) *stats = table.stats;
  return table.codes;
}

std::vector<Graph> enum_graphs(std::size_t n, bool connected_only) {
  std::vector<Graph> out;
  for (std::uint64_t code : graph_class_codes(n)) {
    Graph graph = graph_from_code(n, code);
    if (!connected_only || is_connected(graph)) out.push_back(std::move(graph));
  }
  return out;
}

std::vector<TripleSystem> enum_triple_systems(std::size_t n) {
  if (n < 3 || n > kMaxTripleVertices)
    throw Error(ErrorKind::SizeCap, "triple system enumeration covers 3 <= n <= 6, got " + std::to_string(n));
  std::vector<TripleSystem> out;
  for (std::uint64_t code : triple_class_codes(n)) out.push_back(triple_system_from_code(n, code));
  return out;
}

}  // namespace metric_lines
