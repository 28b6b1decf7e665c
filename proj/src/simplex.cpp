#include "metric_lines/simplex.hpp"

#include <limits>

#include "metric_lines/error.hpp"
#include "metric_lines/small_rational.hpp"

namespace metric_lines {

void LinearProgram::add_row(std::initializer_list<std::pair<std::size_t, long>> terms, Rational bound) {
  std::vector<Rational> row(variables);
  for (auto [var, coeff] : terms) row.at(var) += coeff;
  rows.push_back(std::move(row));
  rhs.push_back(std::move(bound));
}

namespace {

// Scalar operations shared by the GMP and 64-bit instantiations.
int compare(const mpq_class& a, const mpq_class& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }
int compare(const SmallRational& a, const SmallRational& b) { return a < b ? -1 : (b < a ? 1 : 0); }

Rational to_exact(const mpq_class& value) { return value; }
Rational to_exact(const SmallRational& value) { return value.to_rational(); }

mpq_class from_exact(const Rational& value, const mpq_class*) { return value; }
SmallRational from_exact(const Rational& value, const SmallRational*) { return SmallRational::from(value); }

template <typename Scalar>
LpResult solve_with(const LinearProgram& program, const std::optional<Rational>& stop_above) {
  const std::size_t n = program.variables;
  const std::size_t m = program.rows.size();
  const Scalar* tag = nullptr;

  // Dictionary: x_B[i] = D[i][n] - sum_j D[i][j] x_N[j]
  //             z      = D[m][n] - sum_j D[m][j] x_N[j]
  std::vector<std::vector<Scalar>> D(m + 1, std::vector<Scalar>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(program.rows[i][j]) != 0) D[i][j] = from_exact(program.rows[i][j], tag);
    D[i][n] = from_exact(program.rhs[i], tag);
  }
  for (std::size_t j = 0; j < n; ++j) D[m][j] = from_exact(Rational(-program.objective[j]), tag);
  std::optional<Scalar> stop;
  if (stop_above) stop = from_exact(*stop_above, tag);

  std::vector<std::size_t> nonbasic(n), basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

  LpResult result;
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  // Dantzig pricing, switching to Bland's rule after a run of degenerate
  // pivots; Bland's rule cannot cycle, so the solve terminates.
  constexpr std::size_t kDegenerateLimit = 50;
  std::size_t degenerate_run = 0;
  Scalar ratio, best_ratio;
  for (;;) {
    if (stop && compare(D[m][n], *stop) > 0) {
      result.status = LpStatus::Stopped;
      break;
    }
    const bool bland = degenerate_run >= kDegenerateLimit;
    std::size_t enter = none;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(D[m][j]) >= 0) continue;
      if (enter == none || (bland ? nonbasic[j] < nonbasic[enter] : compare(D[m][j], D[m][enter]) < 0)) enter = j;
    }
    if (enter == none) {
      result.status = LpStatus::Optimal;
      break;
    }

    std::size_t leave = none;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(D[i][enter]) <= 0) continue;
      ratio = D[i][n] / D[i][enter];
      const int cmp = leave == none ? -1 : compare(ratio, best_ratio);
      if (cmp < 0 || (cmp == 0 && basic[i] < basic[leave])) {
        leave = i;
        std::swap(best_ratio, ratio);
      }
    }
    if (leave == none) {
      result.status = LpStatus::Unbounded;
      break;
    }
    degenerate_run = sgn(best_ratio) == 0 ? degenerate_run + 1 : 0;

    auto& pivot_row = D[leave];
    const Scalar inv = Scalar(1) / pivot_row[enter];
    for (std::size_t j = 0; j <= n; ++j)
      if (j != enter && sgn(pivot_row[j]) != 0) pivot_row[j] *= inv;
    pivot_row[enter] = inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(D[i][enter]) == 0) continue;
      const Scalar factor = D[i][enter];
      auto& row = D[i];
      for (std::size_t j = 0; j <= n; ++j)
        if (j != enter && sgn(pivot_row[j]) != 0) row[j] -= factor * pivot_row[j];
      row[enter] = -(factor * inv);
    }
    std::swap(basic[leave], nonbasic[enter]);
    ++result.pivots;
  }

  result.value = to_exact(D[m][n]);
  result.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < n) result.solution[basic[i]] = to_exact(D[i][n]);
  return result;
}

}  // namespace

LpResult solve_lp(const LinearProgram& program, const std::optional<Rational>& stop_above) {
  if (program.rhs.size() != program.rows.size() || program.objective.size() != program.variables)
    throw Error(ErrorKind::SolverFailure, "linear program dimensions disagree");
  for (const auto& row : program.rows)
    if (row.size() != program.variables) throw Error(ErrorKind::SolverFailure, "ragged constraint row");
  for (const auto& b : program.rhs)
    if (b < 0) throw Error(ErrorKind::SolverFailure, "right-hand side must be nonnegative");

  try {
    return solve_with<SmallRational>(program, stop_above);
  } catch (const RationalOverflow&) {
    return solve_with<mpq_class>(program, stop_above);
  }
}

}  // namespace metric_lines
