#include <array>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/extremal.hpp"

namespace metric_lines {

namespace {

std::size_t as_count(const Rational& value, std::string_view what) {
  if (value.get_den() != 1 || value < 0 || !value.get_num().fits_ulong_p())
    throw Error(ErrorKind::BadParams, std::string(what) + " must be a nonnegative integer");
  return value.get_num().get_ui();
}

void require_arity(std::string_view kind, std::span<const Rational> params, std::size_t expected) {
  if (params.size() != expected)
    throw Error(ErrorKind::BadParams, std::string(kind) + " takes " + std::to_string(expected) + " parameter(s)");
}

}  // namespace

MetricSpace pentagon() {
  return validate_metric(DistanceMatrix{
      {0, 1, 2, 2, 1},
      {1, 0, 1, 2, 2},
      {2, 1, 0, 1, 2},
      {2, 2, 1, 0, 1},
      {1, 2, 2, 1, 0},
  });
}

MetricSpace groups_of_sizes(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) throw Error(ErrorKind::BadParams, "groups need at least two groups");
  std::vector<std::size_t> group_of;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    if (sizes[g] == 0) throw Error(ErrorKind::BadParams, "groups must be nonempty");
    group_of.insert(group_of.end(), sizes[g], g);
  }
  DistanceMatrix dist(group_of.size());
  for (Point u = 0; u < dist.n; ++u)
    for (Point v = 0; v < dist.n; ++v)
      if (u != v) dist(u, v) = group_of[u] == group_of[v] ? 2 : 1;
  return validate_metric(std::move(dist));
}

MetricSpace groups(std::size_t k, std::size_t m) {
  if (k < 2 || m < 1) throw Error(ErrorKind::BadParams, "groups need k >= 2 and m >= 1");
  const std::vector<std::size_t> sizes(k, m);
  return groups_of_sizes(sizes);
}

std::size_t balanced_group_count(std::size_t n) {
  // Nearest integer to cbrt(n^2 / 2): k^3 <= n^2/2 < (k+1)^3, then round up
  // when (k + 1/2)^3 <= n^2/2, i.e. (2k+1)^3 <= 4 n^2.
  const mpz_class square = mpz_class(n) * n;
  mpz_class k;
  mpz_class half_square = square / 2;
  mpz_root(k.get_mpz_t(), half_square.get_mpz_t(), 3);
  const mpz_class twice = 2 * k + 1;
  if (twice * twice * twice <= 4 * square) ++k;
  return k.get_ui();
}

MetricSpace groups_balanced(std::size_t n) {
  const std::size_t k = balanced_group_count(n);
  if (k < 2 || k > n) throw Error(ErrorKind::BadParams, "groups_balanced needs n >= 3");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t g = 0; g < n % k; ++g) ++sizes[g];
  return groups_of_sizes(sizes);
}

MetricSpace uniform(std::size_t n, const Rational& distance) {
  if (n == 0 || distance <= 0) throw Error(ErrorKind::BadParams, "uniform needs n >= 1 and a positive distance");
  DistanceMatrix dist(n);
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v)
      if (u != v) dist(u, v) = distance;
  return validate_metric(std::move(dist));
}

Graph path_graph(std::size_t t) {
  Graph graph(t + 1);
  for (Point i = 0; i < t; ++i) graph.add_edge(i, i + 1);
  return graph;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
  Graph graph(n);
  for (Point i = 0; i < n; ++i) graph.add_edge(i, (i + 1) % n);
  return graph;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "complete needs n >= 1");
  Graph graph(n);
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) graph.add_edge(u, v);
  return graph;
}

const std::vector<std::string_view>& construction_kinds() {
  static const std::vector<std::string_view> kinds{"pentagon", "groups",   "groups_balanced", "path", "uniform",
                                                   "complete", "cycle",    "fano",            "k34"};
  return kinds;
}

Instance construct(std::string_view kind, std::span<const Rational> params) {
  if (kind == "pentagon") {
    require_arity(kind, params, 0);
    return pentagon();
  }
  if (kind == "groups") {
    require_arity(kind, params, 2);
    return groups(as_count(params[0], "k"), as_count(params[1], "m"));
  }
  if (kind == "groups_balanced") {
    require_arity(kind, params, 1);
    return groups_balanced(as_count(params[0], "n"));
  }
  if (kind == "path") {
    require_arity(kind, params, 1);
    return path_graph(as_count(params[0], "t"));
  }
  if (kind == "uniform") {
    require_arity(kind, params, 2);
    return uniform(as_count(params[0], "n"), params[1]);
  }
  if (kind == "complete") {
    require_arity(kind, params, 1);
    return complete_graph(as_count(params[0], "n"));
  }
  if (kind == "cycle") {
    require_arity(kind, params, 1);
    return cycle_graph(as_count(params[0], "n"));
  }
  if (kind == "fano") {
    require_arity(kind, params, 0);
    return fano();
  }
  if (kind == "k34") {
    require_arity(kind, params, 0);
    return k34();
  }
  throw Error(ErrorKind::BadParams, "unknown construction '" + std::string(kind) + "'");
}

std::size_t predicted_group_lines(std::size_t k, std::size_t m) {
  if (k < 3 || m < 3) throw Error(ErrorKind::BadParams, "the group line count needs k >= 3 and m >= 3");
  return k * m * (m - 1) / 2 + k * (k - 1) / 2;
}

}  // namespace metric_lines
