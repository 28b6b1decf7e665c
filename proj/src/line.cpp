#include "metric_lines/line.hpp"

#include <algorithm>

#include "metric_lines/error.hpp"

namespace metric_lines {

std::optional<std::size_t> LineFamily::find(const PointSet& points) const {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].points == points) return i;
  return std::nullopt;
}

std::size_t LineFamily::line_id_of(Point u, Point v) const {
  const PointPair key = PointPair::of(u, v);
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (std::binary_search(lines[i].generators.begin(), lines[i].generators.end(), key)) return i;
  throw Error(ErrorKind::DegeneratePair, "pair does not generate a line");
}

bool LineFamily::same_lines_as(const LineFamily& other) const {
  if (n != other.n || lines.size() != other.lines.size()) return false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!(lines[i].points == other.lines[i].points)) return false;
  return true;
}

}  // namespace metric_lines
