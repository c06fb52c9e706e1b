#include "eulercert/distance.hpp"

#include <cmath>
#include <optional>

#include "eulercert/matching.hpp"

namespace eulercert {

std::string to_string(const Bound& b) { return decimal_up(b.to_double()); }

namespace {

Bound vanishing_bound(const Support& s, const MetricConfig& cfg) {
  return {directed_hausdorff(s.outer(), *s.inner(), cfg).half()};
}

std::optional<Point> translation_between(const Polytope& a, const Polytope& b) {
  if (a.vertices().size() != b.vertices().size()) return std::nullopt;
  const Point v = b.vertices().front() - a.vertices().front();
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    if (a.vertices()[i] + v != b.vertices()[i]) return std::nullopt;
  return v;
}

// Difference-vs-difference rule, given both precomputed vanishing bounds.
Bound difference_pair(const Summand& a, const Summand& b, const Bound& va, const Bound& vb, const MetricConfig& cfg) {
  Bound best{add(va.value, vb.value)};
  if (a.shift != b.shift) return best;
  if (a.support == b.support) return Bound::zero();
  // Translating both polytopes by v moves k_{Y\X} by v. Lexicographic vertex
  // order is translation invariant, so the translate is read off vertex 0.
  const auto vy = translation_between(a.support.outer(), b.support.outer());
  const auto vx = translation_between(*a.support.inner(), *b.support.inner());
  if (vy && vx && *vy == *vx) best = std::min(best, Bound{norm_of(*vy, cfg.norm).to_real(cfg.tol_dist)});
  return best;
}

Bound plain_pair(const Summand& a, const Summand& b, const MetricConfig& cfg) {
  if (a.shift != b.shift) return Bound::infinite();
  return {hausdorff(a.support.outer(), b.support.outer(), cfg)};
}

Bound zero_bound(const Summand& s, const MetricConfig& cfg) {
  return s.support.is_difference() ? vanishing_bound(s.support, cfg) : Bound::infinite();
}

}  // namespace

Bound pair_bound(const std::optional<Summand>& a, const std::optional<Summand>& b, const MetricConfig& cfg) {
  if (!a && !b) throw std::invalid_argument("pair_bound: both arguments are zero");
  if (a && b) require_dimension(a->support.dimension(), b->support.dimension(), "pair_bound");
  if (!b) return zero_bound(*a, cfg);
  if (!a) return zero_bound(*b, cfg);
  const bool da = a->support.is_difference(), db = b->support.is_difference();
  if (!da && !db) return plain_pair(*a, *b, cfg);
  if (da != db) return Bound::infinite();
  return difference_pair(*a, *b, zero_bound(*a, cfg), zero_bound(*b, cfg), cfg);
}

SumBound sum_bound(const SheafSum& f, const SheafSum& g, const MetricConfig& cfg) {
  require_dimension(g.dimension(), f.dimension(), "sum_bound");
  const auto& fs = f.summands();
  const auto& gs = g.summands();
  assignment::Problem prob;
  prob.unmatched_left.resize(fs.size());
  prob.unmatched_right.resize(gs.size());
  prob.cost.assign(fs.size(), std::vector<double>(gs.size()));

  std::vector<Bound> zf(fs.size(), Bound::infinite()), zg(gs.size(), Bound::infinite());
  const auto nf = static_cast<std::ptrdiff_t>(fs.size());
  const auto ng = static_cast<std::ptrdiff_t>(gs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < nf; ++i) zf[static_cast<std::size_t>(i)] = zero_bound(fs[static_cast<std::size_t>(i)], cfg);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t j = 0; j < ng; ++j) zg[static_cast<std::size_t>(j)] = zero_bound(gs[static_cast<std::size_t>(j)], cfg);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t ii = 0; ii < nf; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < gs.size(); ++j) {
      const bool df = fs[i].support.is_difference(), dg = gs[j].support.is_difference();
      Bound c = Bound::infinite();
      if (!df && !dg) c = plain_pair(fs[i], gs[j], cfg);
      else if (df && dg) c = difference_pair(fs[i], gs[j], zf[i], zg[j], cfg);
      prob.cost[i][j] = c.to_double();
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    prob.unmatched_left[i] = zf[i].to_double();
    prob.mult_left.push_back(fs[i].multiplicity);
  }
  for (std::size_t j = 0; j < gs.size(); ++j) {
    prob.unmatched_right[j] = zg[j].to_double();
    prob.mult_right.push_back(gs[j].multiplicity);
  }

  const assignment::Solution sol = assignment::solve(prob);

  SumBound out{Bound::zero(), {sol.pairs, sol.unmatched_left, sol.unmatched_right}};
  if (std::isinf(sol.bottleneck)) out.bound = Bound::infinite();
  else if (sol.bottleneck > 0) out.bound = Bound{Real{sol.bottleneck, Rounding::Up}};
  return out;
}

}  // namespace eulercert
