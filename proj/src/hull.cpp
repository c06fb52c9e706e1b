// Convex hull construction: extreme points plus the H-representation used by
// membership tests, the arrangement and fiber slicing.

#include <algorithm>
#include <map>
#include <optional>

#include "eulercert/geometry.hpp"

namespace eulercert {

namespace {

struct AffineHull {
  std::vector<std::size_t> pivots;
  std::vector<Halfspace> equalities;
};

// Reduced row echelon form of the difference vectors p_i - p_0. Pivot columns
// give coordinates that parametrize the affine hull; the free columns give
// its defining equations.
AffineHull affine_hull(const std::vector<Point>& pts) {
  const std::size_t n = pts.front().dimension();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::optional<std::size_t> sel;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (sgn(rows[r][col]) != 0) { sel = r; break; }
    if (!sel) continue;
    std::swap(rows[rank], rows[*sel]);
    const Rational p = rows[rank][col];
    for (auto& v : rows[rank]) v /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  AffineHull hull;
  hull.pivots = pivots;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(pivots.begin(), pivots.end(), j) != pivots.end()) continue;
    std::vector<Rational> a(n);
    a[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) a[pivots[i]] = -rows[i][j];
    Halfspace h{a, dot(a, pts[0])};
    hull.equalities.push_back(std::move(h));
  }
  return hull;
}

Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

// Strict monotone chain over 2-d coordinates; returns indices of the extreme
// points in counter-clockwise order (collinear points dropped).
std::vector<std::size_t> hull_2d(const std::vector<std::pair<Rational, Rational>>& uv) {
  std::vector<std::size_t> idx(uv.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (uv[a].first != uv[b].first) return uv[a].first < uv[b].first;
    return uv[a].second < uv[b].second;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return uv[a] == uv[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    return cross2(uv[a].first - uv[o].first, uv[a].second - uv[o].second,
                  uv[b].first - uv[o].first, uv[b].second - uv[o].second);
  };
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && sgn(turn(h[k - 2], h[k - 1], idx[i])) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(turn(h[k - 2], h[k - 1], idx[i])) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

// Scales a hyperplane so that its first nonzero normal entry has absolute
// value one; equal planes then compare equal.
Halfspace normalized(Halfspace h) {
  for (const auto& a : h.normal) {
    if (sgn(a) != 0) {
      const Rational s = abs_q(a);
      for (auto& v : h.normal) v /= s;
      h.offset /= s;
      break;
    }
  }
  return h;
}

std::size_t index_of(const std::vector<Point>& verts, const Point& p) {
  return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
}

// Planar polytope in local coordinates (pivot columns).
void build_2d(Polytope::Data& d, const std::vector<Point>& pts) {
  const std::size_t u = d.pivots[0], v = d.pivots[1];
  std::vector<std::pair<Rational, Rational>> uv;
  uv.reserve(pts.size());
  for (const auto& p : pts) uv.emplace_back(p[u], p[v]);
  const auto ring = hull_2d(uv);
  for (auto i : ring) d.vertices.push_back(pts[i]);
  std::sort(d.vertices.begin(), d.vertices.end());
  for (auto i : ring) d.cycle.push_back(index_of(d.vertices, pts[i]));
  const std::size_t m = d.cycle.size();
  for (std::size_t e = 0; e < m; ++e) {
    const Point& a = d.vertices[d.cycle[e]];
    const Point& b = d.vertices[d.cycle[(e + 1) % m]];
    std::vector<Rational> normal(d.dimension);
    normal[u] = b[v] - a[v];
    normal[v] = a[u] - b[u];
    Halfspace h{normal, dot(normal, a)};
    d.inequalities.push_back(normalized(std::move(h)));
    d.facets.push_back({d.cycle[e], d.cycle[(e + 1) % m]});
  }
}

// Full-dimensional polytope in R^3: every supporting plane through three
// input points is a facet candidate; the facet polygons' extreme points are
// exactly the polytope's extreme points.
void build_3d(Polytope::Data& d, const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  std::map<std::pair<std::vector<Rational>, Rational>, Halfspace> planes;
  auto key_less = [](const Halfspace& h) { return std::make_pair(h.normal, h.offset); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point e1 = pts[j] - pts[i];
      for (std::size_t k = j + 1; k < m; ++k) {
        const Point e2 = pts[k] - pts[i];
        std::vector<Rational> nrm{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                                  e1[0] * e2[1] - e1[1] * e2[0]};
        if (sgn(nrm[0]) == 0 && sgn(nrm[1]) == 0 && sgn(nrm[2]) == 0) continue;
        const Rational off = dot(nrm, pts[i]);
        int pos = 0, neg = 0;
        for (const auto& p : pts) {
          const int s = cmp(dot(nrm, p), off);
          pos += s > 0;
          neg += s < 0;
          if (pos && neg) break;
        }
        if (pos && neg) continue;
        if (pos) {
          for (auto& a : nrm) a = -a;
        }
        Halfspace h = normalized(Halfspace{nrm, dot(nrm, pts[i])});
        planes.emplace(key_less(h), std::move(h));
      }
    }
  }
  // Extreme points: union of facet-polygon extreme points.
  std::vector<std::vector<Point>> facet_rings;
  std::vector<Point> extreme;
  for (const auto& [key, h] : planes) {
    std::vector<Point> on;
    for (const auto& p : pts)
      if (h.satisfied_eq(p)) on.push_back(p);
    std::size_t drop = 0;
    for (std::size_t c = 1; c < 3; ++c)
      if (abs_q(h.normal[c]) > abs_q(h.normal[drop])) drop = c;
    const std::size_t a = drop == 0 ? 1 : 0, b = drop == 2 ? 1 : 2;
    std::vector<std::pair<Rational, Rational>> uv;
    for (const auto& p : on) uv.emplace_back(p[a], p[b]);
    std::vector<Point> ring;
    for (auto i : hull_2d(uv)) ring.push_back(on[i]);
    extreme.insert(extreme.end(), ring.begin(), ring.end());
    facet_rings.push_back(std::move(ring));
    d.inequalities.push_back(h);
  }
  std::sort(extreme.begin(), extreme.end());
  extreme.erase(std::unique(extreme.begin(), extreme.end()), extreme.end());
  d.vertices = std::move(extreme);
  for (const auto& ring : facet_rings) {
    std::vector<std::size_t> ids;
    for (const auto& p : ring) ids.push_back(index_of(d.vertices, p));
    d.facets.push_back(std::move(ids));
  }
}

}  // namespace

Polytope Polytope::from_vertices(std::vector<Point> points) {
  if (points.empty()) throw GeometryError("polytope needs at least one point");
  const std::size_t n = points.front().dimension();
  if (n == 0 || n > kMaxDimension)
    throw DimensionError("unsupported dimension " + std::to_string(n) + " (expected 1..3)");
  for (const auto& p : points)
    if (p.dimension() != n) throw DimensionError("mixed point dimensions in polytope");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto data = std::make_shared<Data>();
  data->dimension = n;
  AffineHull hull = affine_hull(points);
  data->pivots = hull.pivots;
  data->equalities = std::move(hull.equalities);
  data->affine_dimension = static_cast<int>(data->pivots.size());

  switch (data->affine_dimension) {
    case 0:
      data->vertices = {points.front()};
      break;
    case 1: {
      const std::size_t u = data->pivots[0];
      auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                          [u](const Point& a, const Point& b) { return a[u] < b[u]; });
      data->vertices = {*lo, *hi};
      std::sort(data->vertices.begin(), data->vertices.end());
      std::vector<Rational> up(n), down(n);
      up[u] = 1;
      down[u] = -1;
      data->inequalities.push_back({up, (*hi)[u]});
      data->inequalities.push_back({down, -(*lo)[u]});
      data->facets.push_back({index_of(data->vertices, *hi)});
      data->facets.push_back({index_of(data->vertices, *lo)});
      break;
    }
    case 2:
      build_2d(*data, points);
      break;
    default:
      build_3d(*data, points);
      break;
  }
  return Polytope(std::move(data));
}

}  // namespace eulercert
