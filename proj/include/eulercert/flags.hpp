#pragma once

#include <vector>

#include "eulercert/sheafsum.hpp"

namespace eulercert {

// Homothety flag X^0 = {center} in X^1 in ... in X^n = base with
// X^i = homothet(base, center, i/n). Consecutive levels satisfy
// X^i inside the eta-thickening of X^{i-1}, eta = reach(base, center)/n.
struct Flag {
  Polytope base;
  Point center;
  int steps = 1;
  std::vector<Polytope> levels;
  Real eta;
};

Flag build_flag(const Polytope& base, const Point& center, int steps, const MetricConfig& cfg);

// S(X) = k_{X^0} + sum_i k_{X^i \ X^{i-1}}; equal consecutive levels are
// skipped (their difference is empty).
SheafSum graded_sheaf(const Flag& flag);

}  // namespace eulercert
