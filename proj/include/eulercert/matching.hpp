#pragma once

// Bottleneck partial assignment between two families of weighted items.
//
// Each left item i appears mult_left[i] times (likewise on the right). A
// solution pairs units across the sides or leaves them unmatched; its cost
// is the maximum of the used pair costs and of the unmatched units' own
// costs. Costs are doubles, +inf meaning "not allowed".

#include <cstdint>
#include <utility>
#include <vector>

namespace eulercert::assignment {

struct Problem {
  std::vector<std::vector<double>> cost;  // left x right
  std::vector<double> unmatched_left;
  std::vector<double> unmatched_right;
  std::vector<std::int64_t> mult_left;
  std::vector<std::int64_t> mult_right;
};

struct Solution {
  double bottleneck = 0.0;
  // One entry per matched unit, in left-unit order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_left;
  std::vector<std::size_t> unmatched_right;
};

// Exact minimum bottleneck: binary search over the sorted finite costs, with
// feasibility decided by max-flow on the threshold graph. When both sides
// have at most `lex_unit_limit` units the returned assignment is the
// lexicographically smallest optimal one (left units in order, each choosing
// the lowest right item, "unmatched" last); otherwise it is the canonical
// decomposition of a deterministic max-flow.
Solution solve(const Problem& problem, std::int64_t lex_unit_limit = 64);

// Whether an assignment with bottleneck <= threshold exists.
bool feasible(const Problem& problem, double threshold);

}  // namespace eulercert::assignment
