#pragma once

#include <map>

namespace metric_lines {

template <typename LineFor>
LineFamily collect_lines(std::size_t n, LineFor&& line_for) {
  LineFamily family;
  family.n = n;
  std::map<PointSet, std::size_t> index;
  for (Point u = 0; u < n; ++u) {
    for (Point v = u + 1; v < n; ++v) {
      ++family.pair_count;
      PointSet points = line_for(u, v);
      auto [it, inserted] = index.try_emplace(points, family.lines.size());
      if (inserted) {
        family.universal_present = family.universal_present || points.full();
        family.lines.push_back(Line{std::move(points), {}});
      }
      family.lines[it->second].generators.push_back(PointPair{u, v});
    }
  }
  return family;
}

}  // namespace metric_lines
