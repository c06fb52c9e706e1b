#include "eulercert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "eulercert/lp.hpp"

namespace eulercert {

void require_dimension(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected)
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(got) + " vs " +
                         std::to_string(expected) + ")");
}

Point operator+(const Point& a, const Point& b) {
  require_dimension(a.dimension(), b.dimension(), "point addition");
  Point r = a;
  for (std::size_t i = 0; i < r.dimension(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_dimension(a.dimension(), b.dimension(), "point subtraction");
  Point r = a;
  for (std::size_t i = 0; i < r.dimension(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(const Rational& s, const Point& p) {
  Point r = p;
  for (std::size_t i = 0; i < r.dimension(); ++i) r[i] *= s;
  return r;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.dimension() <=> b.dimension();
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * b[i];
  return s;
}

Rational dot(const std::vector<Rational>& a, const Point& b) { return dot(a, b.coords()); }

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

NormKind parse_norm(const std::string& name) {
  if (name == "l1") return NormKind::L1;
  if (name == "l2") return NormKind::L2;
  if (name == "linf") return NormKind::LInf;
  throw std::invalid_argument("unknown norm '" + name + "' (expected l1, l2 or linf)");
}

std::string to_string(NormKind norm) {
  switch (norm) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::LInf: return "linf";
  }
  return "l2";
}

// --- Real -------------------------------------------------------------------

Real Real::infinity() { return {std::numeric_limits<double>::infinity(), Rounding::Exact}; }

Real Real::from_rational(const Rational& q) {
  const double d = upper_double(q);
  return {d, cmp(Rational(d), q) == 0 ? Rounding::Exact : Rounding::Up};
}

Real Real::sqrt_of(const Rational& q, double tol) {
  Rational root;
  if (exact_sqrt(q, root)) return from_rational(root);
  return {add_up(sqrt_upper(q), tol), Rounding::Up};
}

bool Real::is_infinite() const { return std::isinf(value); }

Real Real::half() const { return divided_by(2); }

Real Real::divided_by(long long n) const {
  if (is_infinite()) return *this;
  const double q = div_up(value, static_cast<double>(n));
  const bool exact = dir == Rounding::Exact && cmp(Rational(q) * Rational(static_cast<double>(n)), Rational(value)) == 0;
  return {q, exact ? Rounding::Exact : Rounding::Up};
}

Real max(const Real& a, const Real& b) { return a.value >= b.value ? a : b; }

Real add(const Real& a, const Real& b) {
  const double s = add_up(a.value, b.value);
  const bool exact = a.dir == Rounding::Exact && b.dir == Rounding::Exact && !std::isinf(s) &&
                     cmp(Rational(s), Rational(a.value) + Rational(b.value)) == 0;
  return {s, exact || std::isinf(s) ? Rounding::Exact : Rounding::Up};
}

Real NormValue::to_real(double tol) const {
  return squared ? Real::sqrt_of(value, tol) : Real::from_rational(value);
}

NormValue norm_of(const Point& v, NormKind norm) {
  NormValue r;
  switch (norm) {
    case NormKind::L1:
      for (const auto& c : v.coords()) r.value += abs_q(c);
      break;
    case NormKind::LInf:
      for (const auto& c : v.coords()) r.value = std::max(r.value, abs_q(c));
      break;
    case NormKind::L2:
      for (const auto& c : v.coords()) r.value += c * c;
      r.squared = true;
      break;
  }
  return r;
}

// --- Polytope accessors -------------------------------------------------------

const std::vector<Point>& Polytope::vertices() const { return data_->vertices; }
std::size_t Polytope::dimension() const { return data_->dimension; }
int Polytope::affine_dimension() const { return data_->affine_dimension; }
const std::vector<Halfspace>& Polytope::equalities() const { return data_->equalities; }
const std::vector<Halfspace>& Polytope::inequalities() const { return data_->inequalities; }
const std::vector<std::vector<std::size_t>>& Polytope::facets() const { return data_->facets; }

std::strong_ordering operator<=>(const Polytope& a, const Polytope& b) {
  return a.vertices() <=> b.vertices();
}

Point Polytope::vertex_centroid() const {
  Point c = Point::zero(dimension());
  for (const auto& v : vertices()) c = c + v;
  return Rational(1, static_cast<unsigned long>(vertices().size())) * c;
}

std::vector<std::vector<std::size_t>> Polytope::triangulation() const {
  const auto& d = *data_;
  std::vector<std::vector<std::size_t>> simplices;
  switch (d.affine_dimension) {
    case 0:
      simplices.push_back({0});
      break;
    case 1:
      simplices.push_back({0, 1});
      break;
    case 2:
      for (std::size_t i = 1; i + 1 < d.cycle.size(); ++i)
        simplices.push_back({d.cycle[0], d.cycle[i], d.cycle[i + 1]});
      break;
    default:
      // Cone from vertex 0 over every facet not containing it.
      for (const auto& f : d.facets) {
        if (std::find(f.begin(), f.end(), std::size_t{0}) != f.end()) continue;
        for (std::size_t i = 1; i + 1 < f.size(); ++i) simplices.push_back({0, f[0], f[i], f[i + 1]});
      }
      break;
  }
  return simplices;
}

std::string to_string(const Polytope& p) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertices()[i]);
  }
  return s + "}";
}

// --- AffineMap ------------------------------------------------------------------

AffineMap::AffineMap(std::vector<std::vector<Rational>> matrix, Point offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (matrix_.size() != offset_.dimension())
    throw DimensionError("affine map: matrix has " + std::to_string(matrix_.size()) + " rows but offset has dimension " +
                         std::to_string(offset_.dimension()));
  if (matrix_.empty()) throw DimensionError("affine map: empty codomain");
  domain_ = matrix_.front().size();
  for (const auto& row : matrix_)
    if (row.size() != domain_) throw DimensionError("affine map: ragged matrix");
  if (domain_ == 0 || domain_ > kMaxDimension || offset_.dimension() > kMaxDimension)
    throw DimensionError("affine map: dimensions must be in 1..3");
}

AffineMap AffineMap::identity(std::size_t dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return AffineMap(std::move(m), Point::zero(dim));
}

Point AffineMap::operator()(const Point& x) const {
  require_dimension(x.dimension(), domain_, "affine map application");
  Point y = offset_;
  for (std::size_t i = 0; i < matrix_.size(); ++i) y[i] += dot(matrix_[i], x);
  return y;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  require_dimension(outer.domain_dimension(), inner.codomain_dimension(), "affine composition");
  const std::size_t m = outer.codomain_dimension(), k = inner.codomain_dimension(), n = inner.domain_dimension();
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < k; ++l) mat[i][j] += outer.matrix()[i][l] * inner.matrix()[l][j];
  return AffineMap(std::move(mat), outer(inner.offset()));
}

// --- predicates and constructions ------------------------------------------------

bool contains(const Polytope& p, const Point& x) {
  require_dimension(x.dimension(), p.dimension(), "contains");
  for (const auto& h : p.equalities())
    if (!h.satisfied_eq(x)) return false;
  for (const auto& h : p.inequalities())
    if (!h.satisfied_le(x)) return false;
  return true;
}

Polytope homothet(const Polytope& p, const Point& c, const Rational& t) {
  require_dimension(c.dimension(), p.dimension(), "homothet");
  if (t < 0 || t > 1) throw GeometryError("homothet ratio " + to_string(t) + " outside [0,1]");
  if (!contains(p, c)) throw GeometryError("homothet center " + to_string(c) + " not in polytope");
  if (sgn(t) == 0) return Polytope::point(c);
  if (t == 1) return p;
  // x -> (1-t) c + t x preserves lexicographic order, extreme points and the
  // combinatorics; only the offsets of the supporting hyperplanes move.
  const Rational s = 1 - t;
  const Point shift = s * c;
  auto data = std::make_shared<Polytope::Data>(*p.data_);
  for (auto& v : data->vertices) v = shift + t * v;
  for (auto& h : data->equalities) h.offset = t * h.offset + s * dot(h.normal, c);
  for (auto& h : data->inequalities) h.offset = t * h.offset + s * dot(h.normal, c);
  return Polytope(std::move(data));
}

NormValue reach_exact(const Polytope& p, const Point& c, NormKind norm) {
  require_dimension(c.dimension(), p.dimension(), "reach");
  NormValue best = norm_of(p.vertices().front() - c, norm);
  for (const auto& v : p.vertices()) best = std::max(best, norm_of(v - c, norm));
  return best;
}

Real reach(const Polytope& p, const Point& c, const MetricConfig& cfg) {
  return reach_exact(p, c, cfg.norm).to_real(cfg.tol_dist);
}

namespace {

// Squared Euclidean distance from x to conv(simplex), exact: the nearest point
// lies in the relative interior of some face, where it coincides with the
// orthogonal projection onto that face's affine hull.
Rational squared_distance_to_simplex(const std::vector<Point>& simplex, const Point& x) {
  const std::size_t k = simplex.size();
  if (k == 1) {
    const Point d = x - simplex[0];
    return dot(d.coords(), d.coords());
  }
  if (k == 2) {
    const Point e = simplex[1] - simplex[0];
    const Point rel = x - simplex[0];
    const Rational len2 = dot(e.coords(), e.coords());
    Rational t = dot(rel.coords(), e.coords()) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    const Point d = rel - t * e;
    return dot(d.coords(), d.coords());
  }
  std::optional<Rational> best;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<const Point*> face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) face.push_back(&simplex[i]);
    const Point& w0 = *face[0];
    const std::size_t m = face.size() - 1;
    std::vector<Point> dirs;
    for (std::size_t i = 1; i <= m; ++i) dirs.push_back(*face[i] - w0);
    const Point rel = x - w0;
    // Gram system G mu = r.
    std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) g[i][j] = dot(dirs[i].coords(), dirs[j].coords());
      g[i][m] = dot(dirs[i].coords(), rel.coords());
    }
    bool singular = false;
    for (std::size_t col = 0; col < m && !singular; ++col) {
      std::size_t piv = col;
      while (piv < m && sgn(g[piv][col]) == 0) ++piv;
      if (piv == m) { singular = true; break; }
      std::swap(g[piv], g[col]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col || sgn(g[r][col]) == 0) continue;
        const Rational f = g[r][col] / g[col][col];
        for (std::size_t c = col; c <= m; ++c) g[r][c] -= f * g[col][c];
      }
    }
    if (singular) continue;
    Rational sum;
    bool inside = true;
    Point proj = w0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational mu = g[i][m] / g[i][i];
      if (mu < 0) { inside = false; break; }
      sum += mu;
      proj = proj + mu * dirs[i];
    }
    if (!inside || sum > 1) continue;
    const Point diff = x - proj;
    const Rational d2 = dot(diff.coords(), diff.coords());
    if (!best || d2 < *best) best = d2;
  }
  return *best;
}

// min ||x - sum lambda_i v_i|| over the simplex of weights, as an exact LP.
Rational polyhedral_distance(const Polytope& p, const Point& x, NormKind norm) {
  const auto& verts = p.vertices();
  const std::size_t k = verts.size(), d = x.dimension();
  const std::size_t tcount = norm == NormKind::L1 ? d : 1;
  // Variables: lambda (k), t (tcount), slacks (2d).
  const std::size_t nv = k + tcount + 2 * d;
  lp::Problem prob;
  prob.num_vars = nv;
  std::vector<Rational> sum_row(nv);
  for (std::size_t i = 0; i < k; ++i) sum_row[i] = 1;
  prob.rows.push_back(sum_row);
  prob.rhs.push_back(1);
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t t = norm == NormKind::L1 ? k + j : k;
    // t >= x_j - p_j  <=>  p_j + t - s = x_j
    std::vector<Rational> up(nv), down(nv);
    for (std::size_t i = 0; i < k; ++i) {
      up[i] = verts[i][j];
      down[i] = -verts[i][j];
    }
    up[t] = 1;
    up[k + tcount + 2 * j] = -1;
    down[t] = 1;
    down[k + tcount + 2 * j + 1] = -1;
    prob.rows.push_back(up);
    prob.rhs.push_back(x[j]);
    prob.rows.push_back(down);
    prob.rhs.push_back(-x[j]);
  }
  prob.cost.assign(nv, Rational(0));
  for (std::size_t i = 0; i < tcount; ++i) prob.cost[k + i] = 1;
  auto sol = lp::solve(prob);
  return sol->objective;
}

}  // namespace

NormValue point_distance_exact(const Polytope& p, const Point& x, NormKind norm) {
  require_dimension(x.dimension(), p.dimension(), "point distance");
  NormValue r;
  r.squared = norm == NormKind::L2;
  if (contains(p, x)) return r;
  if (norm != NormKind::L2) {
    r.value = polyhedral_distance(p, x, norm);
    return r;
  }
  const auto& verts = p.vertices();
  // For a full-dimensional polytope and an outside point the nearest point is
  // on the boundary, so the facets suffice; otherwise use the triangulation.
  std::vector<std::vector<std::size_t>> pieces;
  if (static_cast<std::size_t>(p.affine_dimension()) == p.dimension()) {
    for (const auto& f : p.facets()) {
      if (f.size() <= 2) {
        pieces.push_back(f);
      } else {
        for (std::size_t i = 1; i + 1 < f.size(); ++i) pieces.push_back({f[0], f[i], f[i + 1]});
      }
    }
  } else {
    pieces = p.triangulation();
  }
  std::optional<Rational> best;
  std::vector<Point> pts;
  for (const auto& simplex : pieces) {
    pts.clear();
    for (auto i : simplex) pts.push_back(verts[i]);
    const Rational d2 = squared_distance_to_simplex(pts, x);
    if (!best || d2 < *best) best = d2;
  }
  r.value = *best;
  return r;
}

NormValue directed_hausdorff_exact(const Polytope& y, const Polytope& x, NormKind norm) {
  require_dimension(y.dimension(), x.dimension(), "directed_hausdorff");
  NormValue best;
  best.squared = norm == NormKind::L2;
  for (const auto& v : y.vertices()) best = std::max(best, point_distance_exact(x, v, norm));
  return best;
}

Real directed_hausdorff(const Polytope& y, const Polytope& x, const MetricConfig& cfg) {
  return directed_hausdorff_exact(y, x, cfg.norm).to_real(cfg.tol_dist);
}

Real hausdorff(const Polytope& a, const Polytope& b, const MetricConfig& cfg) {
  const NormValue ab = directed_hausdorff_exact(a, b, cfg.norm);
  const NormValue ba = directed_hausdorff_exact(b, a, cfg.norm);
  return std::max(ab, ba).to_real(cfg.tol_dist);
}

Polytope affine_image(const AffineMap& f, const Polytope& p) {
  require_dimension(p.dimension(), f.domain_dimension(), "affine_image");
  std::vector<Point> img;
  img.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) img.push_back(f(v));
  return Polytope::from_vertices(std::move(img));
}

Rational volume(const Polytope& p) {
  if (p.dimension() > kMaxDimension) throw DimensionError("volume: dimension > 3");
  if (static_cast<std::size_t>(p.affine_dimension()) < p.dimension()) return 0;
  const auto& v = p.vertices();
  Rational total;
  for (const auto& s : p.triangulation()) {
    Rational det;
    switch (p.dimension()) {
      case 1:
        det = v[s[1]][0] - v[s[0]][0];
        break;
      case 2: {
        const Point a = v[s[1]] - v[s[0]], b = v[s[2]] - v[s[0]];
        det = (a[0] * b[1] - a[1] * b[0]) / 2;
        break;
      }
      default: {
        const Point a = v[s[1]] - v[s[0]], b = v[s[2]] - v[s[0]], c = v[s[3]] - v[s[0]];
        det = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0])) /
              6;
        break;
      }
    }
    total += abs_q(det);
  }
  return total;
}

}  // namespace eulercert
