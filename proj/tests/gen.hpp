#pragma once

// Hand-rolled random generators and independent oracles shared by the tests
// and the acceptance runner.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "eulercert/certify.hpp"

namespace gen {

using namespace eulercert;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  // Multiple of 1/den in [lo, hi].
  Rational grid(int lo, int hi, int den) {
    Rational q(uniform(lo * den, hi * den), den);
    q.canonicalize();
    return q;
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline Point random_point(Rng& rng, std::size_t dim, int range = 4, int den = 2) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(rng.grid(-range, range, den));
  return Point(std::move(c));
}

inline Polytope random_polytope(Rng& rng, std::size_t dim, int max_vertices, int range = 4, int den = 2) {
  std::vector<Point> pts;
  const int n = rng.uniform(1, max_vertices);
  for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, dim, range, den));
  return Polytope::from_vertices(pts);
}

// Convex combination with random positive weights of all vertices: lies in
// the relative interior.
inline Point interior_point(Rng& rng, const Polytope& p) {
  std::vector<Rational> c(p.dimension());
  Rational total;
  for (const auto& v : p.vertices()) {
    const Rational w(rng.uniform(1, 5));
    total += w;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += w * v[i];
  }
  for (auto& x : c) x /= total;
  return Point(std::move(c));
}

inline ConstructibleFunction random_cf(Rng& rng, std::size_t dim, int max_terms, int max_vertices = 5,
                                       int range = 3) {
  ConstructibleFunction f(dim);
  const int n = rng.uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    int c = 0;
    while (c == 0) c = rng.uniform(-3, 3);
    f.add_term(c, random_polytope(rng, dim, max_vertices, range));
  }
  return f;
}

inline Support random_support(Rng& rng, const Polytope& outer) {
  if (outer.vertices().size() > 1 && rng.coin()) {
    Rational t(rng.uniform(1, 3), 4);
    t.canonicalize();
    return Support::difference(outer, homothet(outer, interior_point(rng, outer), t));
  }
  return Support::plain(outer);
}

inline SheafSum random_sheaf(Rng& rng, std::size_t dim, int max_summands, int max_mult = 2) {
  std::vector<Summand> s;
  const int n = rng.uniform(0, max_summands);
  for (int i = 0; i < n; ++i)
    s.push_back({random_support(rng, random_polytope(rng, dim, 4, 3)), rng.uniform(-2, 2), rng.uniform(1, max_mult)});
  return SheafSum(dim, std::move(s));
}

// --- oracles -------------------------------------------------------------

// Solves sum_i lambda_i v_i = x, sum lambda_i = 1 by exact elimination.
// Returns the unique solution, or nullopt if inconsistent or not unique.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& vs, const Point& x) {
  const std::size_t k = vs.size(), d = x.dimension();
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < d; ++r) m[r][i] = vs[i][r];
    m[d][i] = 1;
  }
  for (std::size_t r = 0; r < d; ++r) m[r][k] = x[r];
  m[d][k] = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = row;
    while (piv <= d && m[piv][col] == 0) ++piv;
    if (piv > d) return std::nullopt;  // dependent columns
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r <= d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  for (std::size_t r = row; r <= d; ++r)
    if (m[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k);
  for (std::size_t i = 0; i < k; ++i) lambda[i] = m[i][k] / m[i][i];
  return lambda;
}

// Caratheodory: x in conv(V) iff x is a convex combination of at most
// dim + 1 affinely independent points of V.
inline bool contains_oracle(const std::vector<Point>& pts, const Point& x) {
  const std::size_t d = x.dimension();
  std::vector<Point> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      const auto l = barycentric(pick, x);
      if (l && std::all_of(l->begin(), l->end(), [](const Rational& q) { return q >= 0; })) return true;
    }
    if (pick.size() == d + 1) return false;
    for (std::size_t i = start; i < pts.size(); ++i) {
      pick.push_back(pts[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline Coefficient evaluate_oracle(const ConstructibleFunction& f, const Point& x) {
  Coefficient v = 0;
  for (const auto& t : f.terms())
    if (contains_oracle(t.support.vertices(), x)) v += t.coeff;
  return v;
}

// Exhaustive bottleneck over partial bijections of the unit expansions.
inline double brute_sum_bound(const SheafSum& f, const SheafSum& g, const MetricConfig& cfg) {
  std::vector<Summand> a, b;
  for (const auto& s : f.summands())
    for (Coefficient m = 0; m < s.multiplicity; ++m) a.push_back({s.support, s.shift, 1});
  for (const auto& s : g.summands())
    for (Coefficient m = 0; m < s.multiplicity; ++m) b.push_back({s.support, s.shift, 1});
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  std::vector<double> za(a.size()), zb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    za[i] = pair_bound(a[i], std::nullopt, cfg).to_double();
    for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = pair_bound(a[i], b[j], cfg).to_double();
  }
  for (std::size_t j = 0; j < b.size(); ++j) zb[j] = pair_bound(std::nullopt, b[j], cfg).to_double();
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size());
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (acc >= best) return;
    if (i == a.size()) {
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j]) acc = std::max(acc, zb[j]);
      best = std::min(best, acc);
      return;
    }
    rec(i + 1, std::max(acc, za[i]));
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      rec(i + 1, std::max(acc, cost[i][j]));
      used[j] = false;
    }
  };
  if (a.empty() && b.empty()) return 0.0;
  rec(0, 0.0);
  return best;
}

}  // namespace gen
