#include <map>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/extremal.hpp"

namespace metric_lines {

namespace {

BoundReport finish(BoundId id, BoundParams params, Rational measured) {
  BoundSpec spec{id, std::move(params)};
  const RootExpression expr = bound_expression(spec);
  BoundReport report{id, std::move(spec.params), std::move(measured), expr.sandwich(), false};
  report.pass = expr.at_most(report.lines_found);
  return report;
}

Rational count(std::size_t value) { return Rational(static_cast<unsigned long>(value)); }

struct GraphLines {
  LineFamily family;
  std::size_t diameter = 0;
};

GraphLines graph_lines_without_universal(const Graph& graph, BoundId id) {
  if (graph.size() < 2)
    throw Error(ErrorKind::PreconditionUnmet, std::string(to_string(id)) + " needs at least two vertices");
  const auto hops = hop_distances(graph);
  GraphLines out{line_family(graph_metric(graph)), 0};
  if (out.family.universal_present)
    throw Error(ErrorKind::PreconditionUnmet,
                std::string(to_string(id)) + " applies only when no line contains every vertex");
  for (const auto& row : hops)
    for (std::size_t d : row) out.diameter = std::max(out.diameter, d);
  return out;
}

}  // namespace

BoundReport check_range(const MetricSpace& space) {
  if (space.size() < 2) throw Error(ErrorKind::PreconditionUnmet, "range needs at least two points");
  const Extremes ext = extremes(space);
  return finish(BoundId::range, {{"n", count(space.size())}, {"rho", ext.rho}},
                count(line_family(space).count()));
}

BoundReport check_diam(const Graph& graph) {
  const GraphLines gl = graph_lines_without_universal(graph, BoundId::diam);
  return finish(BoundId::diam, {{"t", count(gl.diameter)}}, count(gl.family.count()));
}

BoundReport check_graphs_corollary(const Graph& graph) {
  const GraphLines gl = graph_lines_without_universal(graph, BoundId::graphs_corollary);
  return finish(BoundId::graphs_corollary, {{"n", count(graph.size())}}, count(gl.family.count()));
}

BoundReport check_onetwo_lower(const MetricSpace& space) {
  if (!is_one_two(space)) throw Error(ErrorKind::PreconditionUnmet, "onetwo_lower needs a 1-2 metric space");
  if (space.size() < 2) throw Error(ErrorKind::PreconditionUnmet, "onetwo_lower needs at least two points");
  return finish(BoundId::onetwo_lower, {{"n", count(space.size())}}, count(line_family(space).count()));
}

PointSet largest_unit_clique(const MetricSpace& space, const PointSet& within) {
  const auto pool = within.members();
  PointSet best(space.size());
  std::vector<Point> current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (current.size() > best.size()) {
      best = PointSet(space.size());
      for (Point p : current) best.insert(p);
    }
    if (current.size() + (pool.size() - from) <= best.size()) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      bool fits = true;
      for (Point q : current) fits = fits && space(pool[i], q) == 1;
      if (!fits) continue;
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

BoundReport check_turan_clique(const MetricSpace& space) {
  if (!is_one_two(space)) throw Error(ErrorKind::PreconditionUnmet, "turan_clique needs a 1-2 metric space");
  const PointSet kept = maximal_twin_free(space);
  PointSet rest(space.size());
  for (Point p = 0; p < space.size(); ++p)
    if (!kept.contains(p)) rest.insert(p);
  std::size_t far_pairs = 0;
  const auto members = rest.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) far_pairs += space(members[a], members[b]) == 2;
  const PointSet clique = largest_unit_clique(space, rest);
  return finish(BoundId::turan_clique, {{"x2", count(rest.size())}, {"e2", count(far_pairs)}}, count(clique.size()));
}

BoundReport check_sparse_lemma(const TripleSystem& system, Point x, const PointSet& candidates) {
  if (!k34_condition(system, x, candidates))
    throw Error(ErrorKind::PreconditionUnmet, "x and three candidates induce the full 4-vertex system");
  return finish(BoundId::sparse_lemma, {{"x", count(x)}, {"t", count(candidates.size())}},
                count(hyper_line_family(system).count()));
}

BoundReport check_calculus(const Rational& x, const Rational& y) {
  if (x < 3 || y < 0) throw Error(ErrorKind::BadParams, "calculus needs x >= 3 and y >= 0");
  const Rational ratio = x * x / (2 * y + x);
  const Rational lhs = ratio * ratio / 2 + y;
  return finish(BoundId::calculus, {{"x", x}, {"y", y}}, lhs);
}

bool calculus_check(const Rational& x, const Rational& y) { return check_calculus(x, y).pass; }

BoundReport check_bound(BoundId id, const Instance* instance, const CheckOptions& options) {
  auto need = [&](auto* typed, std::string_view what) {
    if (typed == nullptr)
      throw Error(ErrorKind::PreconditionUnmet, std::string(to_string(id)) + " needs " + std::string(what));
    return typed;
  };
  switch (id) {
    case BoundId::range:
      return check_range(*need(instance ? std::get_if<MetricSpace>(instance) : nullptr, "a metric space"));
    case BoundId::diam:
      return check_diam(*need(instance ? std::get_if<Graph>(instance) : nullptr, "a connected graph"));
    case BoundId::graphs_corollary:
      return check_graphs_corollary(*need(instance ? std::get_if<Graph>(instance) : nullptr, "a connected graph"));
    case BoundId::onetwo_lower:
      return check_onetwo_lower(*need(instance ? std::get_if<MetricSpace>(instance) : nullptr, "a 1-2 metric space"));
    case BoundId::turan_clique:
      return check_turan_clique(*need(instance ? std::get_if<MetricSpace>(instance) : nullptr, "a 1-2 metric space"));
    case BoundId::sparse_lemma: {
      const auto* system = need(instance ? std::get_if<TripleSystem>(instance) : nullptr, "a triple system");
      if (!options.x || !options.candidates)
        throw Error(ErrorKind::PreconditionUnmet, "sparse_lemma needs a vertex x and a candidate set");
      return check_sparse_lemma(*system, *options.x, *options.candidates);
    }
    case BoundId::calculus:
      if (!options.calculus_x || !options.calculus_y)
        throw Error(ErrorKind::PreconditionUnmet, "calculus needs x and y");
      return check_calculus(*options.calculus_x, *options.calculus_y);
  }
  throw Error(ErrorKind::BadParams, "unknown bound");
}

Bucket bucket_decomposition(const MetricSpace& space, Point x) {
  if (x >= space.size()) throw Error(ErrorKind::IndexOutOfRange, "point outside the space");
  const Rational delta = extremes(space).delta;
  std::map<std::size_t, PointSet> buckets;
  for (Point u = 0; u < space.size(); ++u) {
    if (u == x) continue;
    const Rational scaled = space(x, u) / delta;
    const mpz_class floor = scaled.get_num() / scaled.get_den();
    auto [it, fresh] = buckets.try_emplace(floor.get_ui(), PointSet(space.size()));
    it->second.insert(u);
  }
  Bucket best{PointSet(space.size()), 0};
  for (auto& [index, members] : buckets)
    if (members.size() > best.members.size()) best = Bucket{members, index};
  return best;
}

PointSet equal_line_class(const TripleSystem& system, Point x, const PointSet& candidates) {
  if (x >= system.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex outside the system");
  if (candidates.contains(x)) throw Error(ErrorKind::XInsideT, "x must not belong to the candidate set");
  std::map<PointSet, PointSet> classes;
  for (Point v : candidates.members()) {
    auto [it, fresh] = classes.try_emplace(hyper_line(system, x, v).points, PointSet(system.size()));
    it->second.insert(v);
  }
  PointSet best(system.size());
  for (const auto& [line, members] : classes)
    if (members.size() > best.size() || (members.size() == best.size() && members < best)) best = members;
  return best;
}

PointSet equal_line_class(const MetricSpace& space, Point x, const PointSet& candidates) {
  return equal_line_class(betweenness_triples(space), x, candidates);
}

}  // namespace metric_lines
