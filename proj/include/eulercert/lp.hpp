#pragma once

#include <optional>
#include <vector>

#include "eulercert/rational.hpp"

namespace eulercert::lp {

// Standard form: minimize cost . z subject to rows . z == rhs, z >= 0.
struct Problem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;  // empty: pure feasibility
  std::size_t num_vars = 0;
};

struct Solution {
  Rational objective;
  std::vector<Rational> z;
};

// Two-phase dense tableau simplex with Bland's rule, exact arithmetic.
// Returns nullopt when infeasible. Throws std::runtime_error when unbounded.
std::optional<Solution> solve(const Problem& problem);

bool feasible(const Problem& problem);

}  // namespace eulercert::lp
