#include "eulercert/lp.hpp"

#include <stdexcept>

namespace eulercert::lp {

namespace {

// Tableau rows 0..m-1 are constraints, last column is rhs. basis[r] is the
// variable basic in row r.
struct Tableau {
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of variables

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = t[row];
    const Rational p = pr[col];
    for (auto& v : pr) v /= p;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == row || sgn(t[r][col]) == 0) continue;
      const Rational f = t[r][col];
      for (std::size_t c = 0; c <= cols; ++c)
        if (sgn(pr[c]) != 0) t[r][c] -= f * pr[c];
    }
    basis[row] = col;
  }

  // Minimizes objective over the first `allowed` columns. Returns false when
  // unbounded.
  bool optimize(const std::vector<Rational>& objective, std::size_t allowed) {
    const std::size_t m = basis.size();
    for (;;) {
      // Reduced costs: c_j - c_B B^{-1} A_j; the tableau already stores B^{-1}A.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = objective[j];
        for (std::size_t r = 0; r < m; ++r)
          if (sgn(t[r][j]) != 0) reduced -= objective[basis[r]] * t[r][j];
        if (sgn(reduced) < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (sgn(t[r][col]) <= 0) continue;
        Rational ratio = t[r][cols] / t[r][col];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, col);
    }
  }
};

}  // namespace

std::optional<Solution> solve(const Problem& problem) {
  const std::size_t m = problem.rows.size();
  const std::size_t n = problem.num_vars;
  if (problem.rhs.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

  // Columns: n structural variables, then m artificials.
  Tableau tab;
  tab.cols = n + m;
  tab.t.assign(m, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (problem.rows[r].size() != n) throw std::invalid_argument("lp: row width mismatch");
    const bool flip = problem.rhs[r] < 0;
    for (std::size_t c = 0; c < n; ++c) tab.t[r][c] = flip ? Rational(-problem.rows[r][c]) : problem.rows[r][c];
    tab.t[r][n + r] = 1;
    tab.t[r][n + m] = flip ? Rational(-problem.rhs[r]) : problem.rhs[r];
    tab.basis[r] = n + r;
  }

  std::vector<Rational> phase1(n + m);
  for (std::size_t r = 0; r < m; ++r) phase1[n + r] = 1;
  tab.optimize(phase1, n + m);
  Rational infeas;
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] >= n) infeas += tab.t[r][n + m];
  if (sgn(infeas) != 0) return std::nullopt;

  // Drive remaining (zero-valued) artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(tab.t[r][c]) != 0) {
        tab.pivot(r, c);
        break;
      }
    }
  }

  Solution sol;
  if (!problem.cost.empty()) {
    std::vector<Rational> objective(n + m);
    for (std::size_t c = 0; c < n; ++c) objective[c] = problem.cost[c];
    // Artificials stuck in the basis sit on redundant rows with value 0;
    // giving them zero cost keeps them harmless.
    if (!tab.optimize(objective, n)) throw std::runtime_error("lp: unbounded objective");
  }
  sol.z.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] < n) sol.z[tab.basis[r]] = tab.t[r][n + m];
  if (!problem.cost.empty())
    for (std::size_t c = 0; c < n; ++c) sol.objective += problem.cost[c] * sol.z[c];
  return sol;
}

bool feasible(const Problem& problem) {
  Problem p = problem;
  p.cost.clear();
  return solve(p).has_value();
}

}  // namespace eulercert::lp
