#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metric_lines/point_set.hpp"

namespace metric_lines {

// Identity of a line is its point set; generators are the pairs that
// produced it.
struct Line {
  PointSet points;
  std::vector<PointPair> generators;
};

struct LineFamily {
  std::size_t n = 0;
  // Ordered by smallest generating pair; generators ascending.
  std::vector<Line> lines;
  bool universal_present = false;
  std::size_t pair_count = 0;

  std::size_t count() const { return lines.size(); }
  std::optional<std::size_t> find(const PointSet& points) const;
  // Id of the line generated by {u, v}.
  std::size_t line_id_of(Point u, Point v) const;

  // Point sets only; generators are ignored.
  bool same_lines_as(const LineFamily& other) const;
};

// Collects the lines produced by `line_for(u, v)` over all pairs u < v.
template <typename LineFor>
LineFamily collect_lines(std::size_t n, LineFor&& line_for);

}  // namespace metric_lines

#include "metric_lines/detail/collect_lines.ipp"
