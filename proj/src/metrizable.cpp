#include "metric_lines/triple_system.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/parallel.hpp"
#include "metric_lines/simplex.hpp"

namespace metric_lines {

namespace {

std::size_t pair_var(Point u, Point v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

// One middle choice per edge; variables are the pair distances followed by
// the shared margin.
LinearProgram assignment_program(const TripleSystem& system, std::uint64_t assignment,
                                 const Rational& cap) {
  const std::size_t n = system.size();
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t margin = pairs;

  LinearProgram lp;
  lp.variables = pairs + 1;
  lp.objective.assign(lp.variables, Rational(0));
  lp.objective[margin] = 1;

  for (const Triple& edge : system.edges()) {
    const auto middle_slot = static_cast<std::size_t>(assignment % 3);
    assignment /= 3;
    const Point m = edge[middle_slot];
    const Point a = edge[(middle_slot + 1) % 3];
    const Point c = edge[(middle_slot + 2) % 3];
    // d(a,m) + d(m,c) - d(a,c) = 0
    lp.add_row({{pair_var(a, m), 1}, {pair_var(m, c), 1}, {pair_var(a, c), -1}}, 0);
    lp.add_row({{pair_var(a, m), -1}, {pair_var(m, c), -1}, {pair_var(a, c), 1}}, 0);
  }

  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c) {
        if (system.contains(a, b, c)) continue;
        const Point t[3] = {a, b, c};
        for (int s = 0; s < 3; ++s) {
          const Point m = t[s], x = t[(s + 1) % 3], y = t[(s + 2) % 3];
          // d(x,m) + d(m,y) - d(x,y) >= margin
          lp.add_row({{pair_var(x, m), -1}, {pair_var(m, y), -1}, {pair_var(x, y), 1}, {margin, 1}}, 0);
        }
      }

  for (std::size_t p = 0; p < pairs; ++p) {
    lp.add_row({{margin, 1}, {p, -1}}, 0);
    lp.add_row({{p, 1}}, cap);
  }
  return lp;
}

}  // namespace

FeasibilityResult metrizable(const TripleSystem& system, const MetrizableOptions& options) {
  const std::size_t n = system.size();
  if (n < 3) throw Error(ErrorKind::TooFewPoints, "metrizability needs at least three vertices");
  if (options.normalization_cap <= 0) throw Error(ErrorKind::BadParams, "normalization cap must be positive");
  if (system.edge_count() > options.max_edges)
    throw Error(ErrorKind::TooManyAssignments,
                std::to_string(system.edge_count()) + " edges exceed the cap of " +
                    std::to_string(options.max_edges));

  std::uint64_t total = 1;
  for (std::size_t e = 0; e < system.edge_count(); ++e) total *= 3;

  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_feasible{none};
  std::mutex mutex;
  std::vector<Rational> winning_solution;
  Rational winning_margin = 0;

  parallel_for(total, options.workers, [&](std::size_t index, std::size_t) {
    if (index > first_feasible.load()) return;
    const LpResult lp = solve_lp(assignment_program(system, index, options.normalization_cap), Rational(0));
    if (lp.status == LpStatus::Unbounded)
      throw Error(ErrorKind::SolverFailure, "bounded feasibility program reported unbounded");
    if (lp.value <= 0) return;
    std::lock_guard lock(mutex);
    if (index < first_feasible.load()) {
      first_feasible = index;
      winning_solution = lp.solution;
      winning_margin = lp.value;
    }
  });

  FeasibilityResult result;
  if (first_feasible.load() == none) {
    result.assignments_tried = total;
    return result;
  }
  result.metrizable = true;
  result.best_margin = winning_margin;
  result.assignments_tried = first_feasible.load() + 1;

  DistanceMatrix dist(n);
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) dist(u, v) = dist(v, u) = winning_solution[pair_var(u, v)];
  MetricSpace witness = validate_metric(std::move(dist));
  if (!(betweenness_triples(witness) == system))
    throw Error(ErrorKind::SolverFailure, "witness does not reproduce the triple system");
  result.witness = std::move(witness);
  return result;
}

}  // namespace metric_lines
