#include "eulercert/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace eulercert::assignment {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Dinic max-flow; edges are stored in insertion order so results are
// deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n), level_(n), iter_(n) {}

  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, cap});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
    return edges_.size() - 2;
  }

  std::int64_t flow_on(std::size_t edge) const { return edges_[edge ^ 1].cap; }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (std::int64_t f = dfs(s, t, kInf)) total += f;
    }
    return total;
  }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (auto e : adj_[v]) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
    if (v == t) return pushed;
    for (auto& i = iter_[v]; i < adj_[v].size(); ++i) {
      const std::size_t e = adj_[v][i];
      Edge& ed = edges_[e];
      if (ed.cap <= 0 || level_[ed.to] != level_[v] + 1) continue;
      if (std::int64_t got = dfs(ed.to, t, std::min(pushed, ed.cap))) {
        ed.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

// Unit-expanded threshold graph collapsed onto item groups. Left units either
// match a right unit (cost <= theta) or go to the "left unmatched" sink
// (allowed when their own cost <= theta); right units not matched are fed
// by a dummy source; the dummy-to-dummy edge stands for the complete
// bipartite graph between the two dummy sides.
struct ThresholdFlow {
  FlowNetwork net;
  std::size_t source, sink;
  std::vector<std::vector<std::size_t>> pair_edge;  // SIZE_MAX when absent
  std::vector<std::size_t> left_unmatched_edge;
  std::vector<std::size_t> right_unmatched_edge;
  std::int64_t demand = 0;

  ThresholdFlow(const Problem& p, const std::vector<std::int64_t>& ml, const std::vector<std::int64_t>& mr,
                double theta)
      : net(ml.size() + mr.size() + 4) {
    const std::size_t L = ml.size(), R = mr.size();
    source = L + R + 2;
    sink = L + R + 3;
    const std::size_t dummy_left = L + R;       // absorbs unmatched right units
    const std::size_t dummy_right = L + R + 1;  // absorbs unmatched left units
    const std::int64_t total_left = std::accumulate(ml.begin(), ml.end(), std::int64_t{0});
    const std::int64_t total_right = std::accumulate(mr.begin(), mr.end(), std::int64_t{0});
    demand = total_left + total_right;
    pair_edge.assign(L, std::vector<std::size_t>(R, SIZE_MAX));
    left_unmatched_edge.assign(L, SIZE_MAX);
    right_unmatched_edge.assign(R, SIZE_MAX);
    for (std::size_t i = 0; i < L; ++i) {
      if (ml[i] == 0) continue;
      net.add_edge(source, i, ml[i]);
      for (std::size_t j = 0; j < R; ++j)
        if (mr[j] > 0 && p.cost[i][j] <= theta) pair_edge[i][j] = net.add_edge(i, L + j, kInf);
      if (p.unmatched_left[i] <= theta) left_unmatched_edge[i] = net.add_edge(i, dummy_right, kInf);
    }
    net.add_edge(source, dummy_left, total_right);
    for (std::size_t j = 0; j < R; ++j) {
      if (mr[j] == 0) continue;
      if (p.unmatched_right[j] <= theta) right_unmatched_edge[j] = net.add_edge(dummy_left, L + j, kInf);
      net.add_edge(L + j, sink, mr[j]);
    }
    net.add_edge(dummy_left, dummy_right, kInf);
    net.add_edge(dummy_right, sink, total_left);
  }

  bool saturate() { return net.max_flow(source, sink) == demand; }
};

bool feasible_with(const Problem& p, const std::vector<std::int64_t>& ml, const std::vector<std::int64_t>& mr,
                   double theta) {
  ThresholdFlow tf(p, ml, mr, theta);
  return tf.saturate();
}

void validate(const Problem& p) {
  const std::size_t L = p.mult_left.size(), R = p.mult_right.size();
  if (p.cost.size() != L || p.unmatched_left.size() != L || p.unmatched_right.size() != R)
    throw std::invalid_argument("assignment: inconsistent problem sizes");
  for (const auto& row : p.cost)
    if (row.size() != R) throw std::invalid_argument("assignment: ragged cost matrix");
  for (auto m : p.mult_left)
    if (m < 0) throw std::invalid_argument("assignment: negative multiplicity");
  for (auto m : p.mult_right)
    if (m < 0) throw std::invalid_argument("assignment: negative multiplicity");
}

Solution lexicographic(const Problem& p, double theta) {
  std::vector<std::int64_t> ml = p.mult_left, mr = p.mult_right;
  Solution sol;
  sol.bottleneck = theta;
  for (std::size_t i = 0; i < ml.size(); ++i) {
    while (ml[i] > 0) {
      --ml[i];
      bool placed = false;
      for (std::size_t j = 0; j < mr.size() && !placed; ++j) {
        if (mr[j] == 0 || !(p.cost[i][j] <= theta)) continue;
        --mr[j];
        if (feasible_with(p, ml, mr, theta)) {
          sol.pairs.emplace_back(i, j);
          placed = true;
        } else {
          ++mr[j];
        }
      }
      if (!placed) {
        // Feasibility of the previous state guarantees this option works.
        sol.unmatched_left.push_back(i);
      }
    }
  }
  for (std::size_t j = 0; j < mr.size(); ++j)
    for (std::int64_t k = 0; k < mr[j]; ++k) sol.unmatched_right.push_back(j);
  return sol;
}

Solution from_flow(const Problem& p, double theta) {
  ThresholdFlow tf(p, p.mult_left, p.mult_right, theta);
  if (!tf.saturate()) throw std::logic_error("assignment: threshold not feasible");
  Solution sol;
  sol.bottleneck = theta;
  for (std::size_t i = 0; i < p.mult_left.size(); ++i) {
    for (std::size_t j = 0; j < p.mult_right.size(); ++j) {
      if (tf.pair_edge[i][j] == SIZE_MAX) continue;
      for (std::int64_t k = tf.net.flow_on(tf.pair_edge[i][j]); k > 0; --k) sol.pairs.emplace_back(i, j);
    }
    if (tf.left_unmatched_edge[i] != SIZE_MAX)
      for (std::int64_t k = tf.net.flow_on(tf.left_unmatched_edge[i]); k > 0; --k) sol.unmatched_left.push_back(i);
  }
  for (std::size_t j = 0; j < p.mult_right.size(); ++j)
    if (tf.right_unmatched_edge[j] != SIZE_MAX)
      for (std::int64_t k = tf.net.flow_on(tf.right_unmatched_edge[j]); k > 0; --k) sol.unmatched_right.push_back(j);
  return sol;
}

}  // namespace

bool feasible(const Problem& problem, double threshold) {
  validate(problem);
  return feasible_with(problem, problem.mult_left, problem.mult_right, threshold);
}

Solution solve(const Problem& p, std::int64_t lex_unit_limit) {
  validate(p);
  std::vector<double> candidates{0.0};
  auto add = [&](double v) {
    if (std::isfinite(v)) candidates.push_back(v);
  };
  for (std::size_t i = 0; i < p.cost.size(); ++i) {
    if (p.mult_left[i] == 0) continue;
    add(p.unmatched_left[i]);
    for (std::size_t j = 0; j < p.mult_right.size(); ++j)
      if (p.mult_right[j] > 0) add(p.cost[i][j]);
  }
  for (std::size_t j = 0; j < p.mult_right.size(); ++j)
    if (p.mult_right[j] > 0) add(p.unmatched_right[j]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  double theta = std::numeric_limits<double>::infinity();
  if (feasible_with(p, p.mult_left, p.mult_right, candidates.back())) {
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (feasible_with(p, p.mult_left, p.mult_right, candidates[mid])) hi = mid;
      else lo = mid + 1;
    }
    theta = candidates[lo];
  }

  const std::int64_t units_left = std::accumulate(p.mult_left.begin(), p.mult_left.end(), std::int64_t{0});
  const std::int64_t units_right = std::accumulate(p.mult_right.begin(), p.mult_right.end(), std::int64_t{0});
  if (units_left <= lex_unit_limit && units_right <= lex_unit_limit) return lexicographic(p, theta);
  return from_flow(p, theta);
}

}  // namespace eulercert::assignment
