#include "metric_lines/point_set.hpp"

#include <algorithm>

namespace metric_lines {

PointSet::PointSet(std::size_t universe, std::initializer_list<Point> points) : bits_(universe) {
  for (Point p : points) bits_.set(p);
}

std::vector<Point> PointSet::members() const {
  std::vector<Point> out;
  out.reserve(bits_.count());
  for (auto p = bits_.find_first(); p != decltype(bits_)::npos; p = bits_.find_next(p))
    out.push_back(p);
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Point p : members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

bool operator<(const PointSet& a, const PointSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  if (ma != mb) return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  return a.universe() < b.universe();
}

}  // namespace metric_lines
