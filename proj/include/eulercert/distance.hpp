#pragma once

// Certified upper bounds on the convolution distance between decomposable
// sheaves. Nothing here computes d_C exactly; every value is an upper bound
// assembled from summand-level rules and the additivity of interleavings.
//
// Summand rules (all values rounded up):
//   k_A[d]      vs k_B[d]      Hausdorff(A, B). The correspondence
//                              {(a, b) in A x B : |a - b| <= d_H(A, B)} has
//                              convex fibers over A and over B, so both
//                              projections push k_Z forward to k_A and k_B,
//                              and the stability of pushforwards bounds
//                              the distance by sup |a - b| <= d_H.
//   k_A[d]      vs k_B[d'], d != d'   +inf (global sections differ)
//   k_A[d]      vs 0 or a difference  +inf (global sections differ)
//   k_{Y\X}[d]  vs 0           h(Y, X) / 2 (vanishing of sections on balls)
//   k_{Y\X}[d]  vs k_{Y'\X'}[d]  min of 0 (equal), |v| (exact translate by v)
//                              and the sum of both vanishing bounds
//   k_{Y\X}[d]  vs k_{Y'\X'}[d'], d != d'  sum of both vanishing bounds

#include <optional>
#include <utility>
#include <vector>

#include "eulercert/sheafsum.hpp"

namespace eulercert {

// Certified upper bound; +inf absorbs under max.
struct Bound {
  Real value;

  static Bound zero() { return {Real::exact_zero()}; }
  static Bound infinite() { return {Real::infinity()}; }

  bool is_infinite() const { return value.is_infinite(); }
  bool is_zero() const { return value.is_zero(); }
  double to_double() const { return value.value; }

  friend bool operator==(const Bound& a, const Bound& b) { return a.value.value == b.value.value; }
  friend auto operator<=>(const Bound& a, const Bound& b) { return a.value.value <=> b.value.value; }
};

std::string to_string(const Bound& b);  // "inf" or 12-place upward decimal

// Partial bijection between the unit expansions of two sheaf sums. Indices
// refer to summands; a summand of multiplicity m appears m times in total
// across `pairs` and its unmatched list.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_f;
  std::vector<std::size_t> unmatched_g;
};

// nullopt stands for the zero sheaf. At most one argument may be zero.
Bound pair_bound(const std::optional<Summand>& a, const std::optional<Summand>& b, const MetricConfig& cfg);

struct SumBound {
  Bound bound;
  Matching matching;
};

// Minimum over partial bijections of the additivity-of-interleavings bound.
SumBound sum_bound(const SheafSum& f, const SheafSum& g, const MetricConfig& cfg);

}  // namespace eulercert
