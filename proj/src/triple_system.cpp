#include "metric_lines/triple_system.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

TripleSystem::TripleSystem(std::size_t n, std::span<const Triple> edges)
    : n_(n), links_(n * (n > 0 ? n - 1 : 0) / 2, PointSet(n)) {
  edges_.reserve(edges.size());
  for (Triple t : edges) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || t[2] >= n)
      throw Error(ErrorKind::BadParams, "edge {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                                            "," + std::to_string(t[2]) + "} is not a 3-subset of the vertices");
    edges_.push_back(t);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Triple& t : edges_) {
    links_[pair_index(t[0], t[1])].insert(t[2]);
    links_[pair_index(t[0], t[2])].insert(t[1]);
    links_[pair_index(t[1], t[2])].insert(t[0]);
  }
}

std::size_t TripleSystem::pair_index(Point u, Point v) const {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

bool TripleSystem::contains(Point a, Point b, Point c) const {
  if (a == b || b == c || a == c || a >= n_ || b >= n_ || c >= n_) return false;
  return links_[pair_index(a, b)].contains(c);
}

const PointSet& TripleSystem::link(Point u, Point v) const {
  if (u >= n_ || v >= n_) throw Error(ErrorKind::IndexOutOfRange, "vertex outside the system");
  if (u == v) throw Error(ErrorKind::DegeneratePair, "a line needs two distinct vertices");
  return links_[pair_index(u, v)];
}

Line hyper_line(const TripleSystem& system, Point u, Point v) {
  PointSet points = system.link(u, v);
  points.insert(u);
  points.insert(v);
  return Line{std::move(points), {PointPair::of(u, v)}};
}

LineFamily hyper_line_family(const TripleSystem& system) {
  if (system.size() < 2) throw Error(ErrorKind::TooFewPoints, "lines need at least two vertices");
  return collect_lines(system.size(), [&](Point u, Point v) { return hyper_line(system, u, v).points; });
}

VertexSignatures vertex_signatures(const LineFamily& family) {
  VertexSignatures out;
  out.signatures.resize(family.n);
  for (std::size_t id = 0; id < family.lines.size(); ++id)
    for (Point p : family.lines[id].points.members()) out.signatures[p].push_back(id);
  std::vector<std::vector<std::size_t>> sorted = out.signatures;
  std::sort(sorted.begin(), sorted.end());
  out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return out;
}

VertexSignatures vertex_signatures(const TripleSystem& system) {
  return vertex_signatures(hyper_line_family(system));
}

bool k34_condition(const TripleSystem& system, Point x, const PointSet& candidates) {
  if (x >= system.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex outside the system");
  if (candidates.contains(x)) throw Error(ErrorKind::XInsideT, "x must not belong to the candidate set");
  const auto t = candidates.members();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (!system.contains(x, t[a], t[b])) continue;
      for (std::size_t c = b + 1; c < t.size(); ++c)
        if (system.contains(x, t[a], t[c]) && system.contains(x, t[b], t[c]) &&
            system.contains(t[a], t[b], t[c]))
          return false;
    }
  return true;
}

TripleSystem fano() {
  std::vector<Triple> edges;
  for (Point i = 0; i < 7; ++i) edges.push_back(Triple{i, (i + 1) % 7, (i + 3) % 7});
  return TripleSystem(7, edges);
}

TripleSystem k34() { return TripleSystem(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace metric_lines
