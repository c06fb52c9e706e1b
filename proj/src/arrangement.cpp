#include <algorithm>
#include <set>

#include "eulercert/geometry.hpp"

namespace eulercert {

namespace {

CellComplex arrangement_1d(const std::vector<Polytope>& polytopes) {
  std::vector<Rational> breaks;
  for (const auto& p : polytopes)
    for (const auto& v : p.vertices()) breaks.push_back(v[0]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  CellComplex cx;
  cx.dimension = 1;
  if (breaks.empty()) {
    cx.cells.push_back({1, Point{Rational(0)}, false, {}});
    return cx;
  }
  cx.cells.push_back({1, Point{breaks.front() - 1}, false, {}});
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    cx.cells.push_back({0, Point{breaks[i]}, true, {}});
    if (i + 1 < breaks.size())
      cx.cells.push_back({1, Point{(breaks[i] + breaks[i + 1]) / 2}, true, breaks[i + 1] - breaks[i]});
  }
  cx.cells.push_back({1, Point{breaks.back() + 1}, false, {}});
  return cx;
}

// Non-vertical line y = slope * x + intercept.
struct Line {
  Rational slope, intercept;
  Rational at(const Rational& x) const { return slope * x + intercept; }
  auto operator<=>(const Line& o) const {
    if (auto c = compare(slope, o.slope); c != 0) return c;
    return compare(intercept, o.intercept);
  }
  bool operator==(const Line& o) const = default;
};

CellComplex arrangement_2d(const std::vector<Polytope>& polytopes) {
  std::set<Line> lines;
  std::set<Rational> verticals;
  auto add = [&](const Halfspace& h) {
    const Rational& a = h.normal[0];
    const Rational& b = h.normal[1];
    if (sgn(b) == 0) {
      if (sgn(a) != 0) verticals.insert(h.offset / a);
      return;
    }
    lines.insert(Line{-a / b, h.offset / b});
  };
  for (const auto& p : polytopes) {
    for (const auto& h : p.equalities()) add(h);
    for (const auto& h : p.inequalities()) add(h);
  }
  const std::vector<Line> ls(lines.begin(), lines.end());

  std::set<Rational> critical = verticals;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (ls[i].slope != ls[j].slope)
        critical.insert((ls[j].intercept - ls[i].intercept) / (ls[i].slope - ls[j].slope));
  const std::vector<Rational> xs(critical.begin(), critical.end());

  CellComplex cx;
  cx.dimension = 2;
  const std::size_t m = xs.size();
  const std::size_t slabs = m + 1;

  std::vector<std::size_t> order(ls.size());
  for (std::size_t s = 0; s < slabs; ++s) {
    const bool bounded = m > 0 && s > 0 && s < m;
    Rational xr;
    if (m == 0) xr = 0;
    else if (s == 0) xr = xs.front() - 1;
    else if (s == m) xr = xs.back() + 1;
    else xr = (xs[s - 1] + xs[s]) / 2;

    if (ls.empty()) {
      cx.cells.push_back({2, Point{xr, Rational(0)}, false, {}});
      continue;
    }
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ls[a].at(xr) < ls[b].at(xr); });
    cx.cells.push_back({2, Point{xr, ls[order.front()].at(xr) - 1}, false, {}});
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Line& lo = ls[order[i]];
      cx.cells.push_back({1, Point{xr, lo.at(xr)}, bounded, {}});
      if (i + 1 == order.size()) break;
      const Line& up = ls[order[i + 1]];
      Cell face{2, Point{xr, (lo.at(xr) + up.at(xr)) / 2}, bounded, {}};
      if (bounded) {
        const Rational &x0 = xs[s - 1], &x1 = xs[s];
        face.volume = (x1 - x0) * ((up.at(x0) - lo.at(x0)) + (up.at(x1) - lo.at(x1))) / 2;
      }
      cx.cells.push_back(std::move(face));
    }
    cx.cells.push_back({2, Point{xr, ls[order.back()].at(xr) + 1}, false, {}});
  }

  for (const auto& x : xs) {
    if (ls.empty()) {
      cx.cells.push_back({1, Point{x, Rational(0)}, false, {}});
      continue;
    }
    std::vector<Rational> ys;
    ys.reserve(ls.size());
    for (const auto& l : ls) ys.push_back(l.at(x));
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    cx.cells.push_back({1, Point{x, ys.front() - 1}, false, {}});
    for (std::size_t i = 0; i < ys.size(); ++i) {
      cx.cells.push_back({0, Point{x, ys[i]}, true, {}});
      if (i + 1 < ys.size()) cx.cells.push_back({1, Point{x, (ys[i] + ys[i + 1]) / 2}, true, {}});
    }
    cx.cells.push_back({1, Point{x, ys.back() + 1}, false, {}});
  }
  return cx;
}

}  // namespace

CellComplex arrangement(const std::vector<Polytope>& polytopes, std::size_t dimension) {
  for (const auto& p : polytopes) require_dimension(p.dimension(), dimension, "arrangement");
  switch (dimension) {
    case 1: return arrangement_1d(polytopes);
    case 2: return arrangement_2d(polytopes);
    default:
      throw DimensionError("exact arrangement supports dimension 1 and 2 only (got " + std::to_string(dimension) + ")");
  }
}

}  // namespace eulercert
