#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metric_lines/rational.hpp"

namespace metric_lines {

// maximize  objective . x
// subject to  rows[i] . x <= rhs[i],  x >= 0
// with rhs >= 0, so the origin is a feasible starting vertex.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  // Appends a row given as sparse (variable, coefficient) terms.
  void add_row(std::initializer_list<std::pair<std::size_t, long>> terms, Rational bound);
};

enum class LpStatus { Optimal, Unbounded, Stopped };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  std::vector<Rational> solution;
  std::size_t pivots = 0;
};

// Exact primal simplex: largest-coefficient pricing, switching to Bland's rule
// when pivots stall. When `stop_above` is set the solve returns Stopped at the
// first vertex whose objective exceeds it.
LpResult solve_lp(const LinearProgram& program, const std::optional<Rational>& stop_above = std::nullopt);

}  // namespace metric_lines
