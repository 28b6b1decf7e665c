#include "metric_lines/search.hpp"

#include <array>
#include <limits>
#include <mutex>
#include <string>

#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/parallel.hpp"

namespace metric_lines {

namespace {

constexpr std::array<std::pair<Universe, std::string_view>, 3> kUniverses{{
    {Universe::hypergraphs, "hypergraphs"},
    {Universe::one_two, "one_two"},
    {Universe::graph_metrics, "graph_metrics"},
}};

struct Best {
  std::size_t lines = std::numeric_limits<std::size_t>::max();
  std::size_t index = std::numeric_limits<std::size_t>::max();

  void offer(std::size_t l, std::size_t i) {
    if (l < lines || (l == lines && i < index)) {
      lines = l;
      index = i;
    }
  }
};

template <typename Clock = std::chrono::steady_clock>
std::chrono::milliseconds since(typename Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

std::string_view to_string(Universe universe) {
  for (auto [u, name] : kUniverses)
    if (u == universe) return name;
  return "unknown";
}

std::optional<Universe> parse_universe(std::string_view name) {
  for (auto [u, text] : kUniverses)
    if (text == name) return u;
  return std::nullopt;
}

std::size_t size_cap(Universe universe) {
  switch (universe) {
    case Universe::hypergraphs: return 6;
    case Universe::one_two: return 7;
    case Universe::graph_metrics: return 8;
  }
  return 0;
}

bool default_exclude_universal(Universe universe) { return universe != Universe::one_two; }

SearchReport min_lines(Universe universe, std::size_t n, bool exclude_universal, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  if (n > size_cap(universe))
    throw Error(ErrorKind::SizeCap, std::string(to_string(universe)) + " search covers n <= " +
                                        std::to_string(size_cap(universe)));
  if (n < 2) throw Error(ErrorKind::SizeCap, "searches need n >= 2");
  if (exclude_universal && n < 3)
    throw Error(ErrorKind::SizeCap, "excluding universal lines needs n >= 3");

  SearchReport report;
  report.universe = universe;
  report.n = n;
  report.exclude_universal = exclude_universal;

  EnumerationStats stats;
  const auto& codes = universe == Universe::hypergraphs ? triple_class_codes(n, &stats) : graph_class_codes(n, &stats);
  report.instances_examined = stats.candidates;

  std::mutex mutex;
  Best best;
  std::size_t classes = 0;
  parallel_for(codes.size(), workers, [&](std::size_t i, std::size_t) {
    LineFamily family;
    bool member = true;
    switch (universe) {
      case Universe::hypergraphs:
        family = hyper_line_family(triple_system_from_code(n, codes[i]));
        break;
      case Universe::one_two:
        family = line_family(one_two_space(graph_from_code(n, codes[i])));
        break;
      case Universe::graph_metrics: {
        const Graph graph = graph_from_code(n, codes[i]);
        member = is_connected(graph);
        if (member) family = line_family(graph_metric(graph));
        break;
      }
    }
    std::lock_guard lock(mutex);
    if (!member) return;
    ++classes;
    if (exclude_universal && family.universal_present) return;
    best.offer(family.count(), i);
  });

  report.iso_classes = classes;
  if (best.index == std::numeric_limits<std::size_t>::max())
    throw Error(ErrorKind::EmptyUniverse, "every instance has a universal line");
  report.minimum = best.lines;
  if (universe == Universe::hypergraphs)
    report.witness = triple_system_from_code(n, codes[best.index]);
  else
    report.witness = graph_from_code(n, codes[best.index]);
  report.elapsed = since(start);
  return report;
}

ConjectureReport conjecture_scan(std::size_t n_max, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  if (n_max > kMaxGraphVertices) throw Error(ErrorKind::SizeCap, "conjecture scan covers n_max <= 8");

  ConjectureReport report;
  report.n_max = n_max;
  for (std::size_t n = 3; n <= n_max; ++n) {
    const auto& codes = graph_class_codes(n);
    std::vector<std::optional<std::size_t>> counts(codes.size());
    std::vector<char> connected(codes.size(), 0);
    parallel_for(codes.size(), workers, [&](std::size_t i, std::size_t) {
      const Graph graph = graph_from_code(n, codes[i]);
      if (!is_connected(graph)) return;
      connected[i] = 1;
      const LineFamily family = line_family(graph_metric(graph));
      if (!family.universal_present) counts[i] = family.count();
    });

    ScanLevel level;
    level.n = n;
    Best best;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      level.connected_classes += connected[i];
      if (!counts[i]) continue;
      ++level.without_universal;
      best.offer(*counts[i], i);
      if (*counts[i] < n) report.violators.push_back({graph_from_code(n, codes[i]), *counts[i]});
    }
    if (level.without_universal > 0) {
      level.minimum = best.lines;
      level.witness = graph_from_code(n, codes[best.index]);
    }
    report.levels.push_back(std::move(level));
  }
  report.elapsed = since(start);
  return report;
}

}  // namespace metric_lines
