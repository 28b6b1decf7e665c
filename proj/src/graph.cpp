#include "metric_lines/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const Graph& graph, Point source) {
  std::vector<std::size_t> dist(graph.size(), unreachable);
  std::deque<Point> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Point u = queue.front();
    queue.pop_front();
    for (Point w : graph.neighbors(u).members())
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

void require_one_two(const MetricSpace& space) {
  if (!is_one_two(space))
    throw Error(ErrorKind::NotOneTwoSpace, "some nonzero distance is neither 1 nor 2");
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const PointPair> edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.first, e.second);
}

void Graph::add_edge(Point u, Point v) {
  if (u == v || u >= size() || v >= size())
    throw Error(ErrorKind::BadParams, "invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  rows_[u].insert(v);
  rows_[v].insert(u);
}

std::vector<PointPair> Graph::edges() const {
  std::vector<PointPair> out;
  for (Point u = 0; u < size(); ++u)
    for (Point v : rows_[u].members())
      if (u < v) out.push_back({u, v});
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.size();
  return twice / 2;
}

bool is_connected(const Graph& graph) {
  if (graph.size() == 0) return true;
  for (std::size_t d : bfs(graph, 0))
    if (d == unreachable) return false;
  return true;
}

std::vector<std::vector<std::size_t>> hop_distances(const Graph& graph) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(graph.size());
  for (Point s = 0; s < graph.size(); ++s) {
    out.push_back(bfs(graph, s));
    for (Point t = 0; t < graph.size(); ++t)
      if (out.back()[t] == unreachable)
        throw Error(ErrorKind::DisconnectedGraph, "vertices " + std::to_string(s) + " and " +
                                                      std::to_string(t) + " are not connected");
  }
  return out;
}

MetricSpace graph_metric(const Graph& graph) {
  const auto hops = hop_distances(graph);
  DistanceMatrix dist(graph.size());
  for (Point u = 0; u < graph.size(); ++u)
    for (Point v = 0; v < graph.size(); ++v) dist(u, v) = static_cast<unsigned long>(hops[u][v]);
  return validate_metric(std::move(dist));
}

std::vector<Point> geodesic_path(const Graph& graph) {
  if (graph.size() == 0) throw Error(ErrorKind::TooFewPoints, "empty graph has no geodesic");
  const auto hops = hop_distances(graph);
  Point source = 0, target = 0;
  for (Point s = 0; s < graph.size(); ++s)
    for (Point t = s + 1; t < graph.size(); ++t)
      if (hops[s][t] > hops[source][target]) {
        source = s;
        target = t;
      }

  std::vector<Point> path{target};
  for (Point cur = target; cur != source;) {
    for (Point w : graph.neighbors(cur).members())
      if (hops[source][w] + 1 == hops[source][cur]) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());

  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (hops[path[i]][path[j]] != j - i)
        throw Error(ErrorKind::SolverFailure, "geodesic property failed on the constructed path");
  return path;
}

bool is_one_two(const MetricSpace& space) {
  for (Point u = 0; u < space.size(); ++u)
    for (Point v = u + 1; v < space.size(); ++v)
      if (space(u, v) != 1 && space(u, v) != 2) return false;
  return true;
}

MetricSpace one_two_space(const Graph& graph) {
  DistanceMatrix dist(graph.size());
  for (Point u = 0; u < graph.size(); ++u)
    for (Point v = 0; v < graph.size(); ++v)
      if (u != v) dist(u, v) = graph.adjacent(u, v) ? 1 : 2;
  return validate_metric(std::move(dist));
}

Graph one_two_graph(const MetricSpace& space) {
  require_one_two(space);
  Graph graph(space.size());
  for (Point u = 0; u < space.size(); ++u)
    for (Point v = u + 1; v < space.size(); ++v)
      if (space(u, v) == 1) graph.add_edge(u, v);
  return graph;
}

std::vector<PointPair> find_twins(const MetricSpace& space) {
  const OneTwoContext ctx(space);
  std::vector<PointPair> out;
  for (Point u = 0; u < ctx.size(); ++u)
    for (Point v = u + 1; v < ctx.size(); ++v)
      if (ctx.twins(u, v)) out.push_back({u, v});
  return out;
}

PointSet maximal_twin_free(const MetricSpace& space) {
  const OneTwoContext ctx(space);
  PointSet kept(ctx.size());
  for (Point p = 0; p < ctx.size(); ++p) {
    bool twin_of_kept = false;
    for (Point q : kept.members()) twin_of_kept = twin_of_kept || ctx.twins(p, q);
    if (!twin_of_kept) kept.insert(p);
  }
  return kept;
}

std::size_t arity(Lemma12Case c) {
  switch (c) {
    case Lemma12Case::i:
    case Lemma12Case::ii:
    case Lemma12Case::iii: return 4;
    default: return 3;
  }
}

OneTwoContext::OneTwoContext(const MetricSpace& space)
    : n_(space.size()), dist_(n_ * n_), twin_(n_ * n_, 0), line_id_(n_ * n_, 0) {
  require_one_two(space);
  for (Point u = 0; u < n_; ++u)
    for (Point v = 0; v < n_; ++v) dist_[u * n_ + v] = static_cast<int>(space(u, v).get_num().get_si());

  for (Point u = 0; u < n_; ++u)
    for (Point v = u + 1; v < n_; ++v) {
      if (distance(u, v) != 2) continue;
      bool same = true;
      for (Point w = 0; w < n_ && same; ++w)
        if (w != u && w != v) same = distance(u, w) == distance(v, w);
      twin_[u * n_ + v] = twin_[v * n_ + u] = same;
    }

  if (n_ >= 2) {
    lines_ = line_family(space);
    for (std::size_t id = 0; id < lines_.lines.size(); ++id)
      for (const auto& g : lines_.lines[id].generators)
        line_id_[g.first * n_ + g.second] = line_id_[g.second * n_ + g.first] = id;
  }
}

bool OneTwoContext::has_twin_other_than(Point u, Point excluded) const {
  for (Point w = 0; w < n_; ++w)
    if (w != excluded && twins(u, w)) return true;
  return false;
}

bool OneTwoContext::same_line(Point a, Point b, Point c, Point d) const {
  return line_id_[a * n_ + b] == line_id_[c * n_ + d];
}

Lemma12Outcome OneTwoContext::check(Lemma12Case c, std::span<const Point> p) const {
  if (p.size() != arity(c))
    throw Error(ErrorKind::ArityMismatch, "case expects " + std::to_string(arity(c)) + " points, got " +
                                              std::to_string(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= n_) throw Error(ErrorKind::IndexOutOfRange, "point outside the space");
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j]) throw Error(ErrorKind::BadParams, "points must be pairwise distinct");
  }

  Lemma12Outcome out;
  const auto d = [&](std::size_t a, std::size_t b) { return distance(p[a], p[b]); };
  switch (c) {
    case Lemma12Case::i:
      out.applies = d(0, 1) == 1 && d(0, 2) == 1 && d(0, 3) == 1 && d(1, 2) == 1 && d(1, 3) == 1 &&
                    d(2, 3) == 1;
      break;
    case Lemma12Case::ii:
      out.applies = d(0, 1) == 1 && d(2, 3) == 2;
      break;
    case Lemma12Case::iii:
      out.applies = d(0, 1) == 2 && d(2, 3) == 2 && has_twin_other_than(p[3], p[2]);
      break;
    case Lemma12Case::iv:
      out.applies = d(0, 1) == 1 && d(1, 2) == 1 && !twins(p[0], p[2]);
      break;
    case Lemma12Case::v:
      out.applies = d(0, 1) == 1 && d(1, 2) == 2 && has_twin_other_than(p[2], p[1]);
      break;
    case Lemma12Case::vi:
      out.applies = d(0, 1) == 2 && d(1, 2) == 2;
      break;
  }
  out.conclusion_holds = arity(c) == 4 ? !same_line(p[0], p[1], p[2], p[3]) : !same_line(p[0], p[1], p[1], p[2]);
  return out;
}

Lemma12Outcome lemma12_check(const MetricSpace& space, Lemma12Case c, std::span<const Point> points) {
  return OneTwoContext(space).check(c, points);
}

}  // namespace metric_lines
