#pragma once

// Exact convex-polytope primitives in ambient dimension 1..3.
//
// Coordinates are rationals, so every combinatorial predicate (membership,
// equality, hull, arrangement) is decided exactly. Norm distances are exact
// rationals under L1/LInf; under L2 they are exact squared rationals whose
// square root is reported as a certified upper bound (see Real).

#include <compare>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulercert/rational.hpp"

namespace eulercert {

inline constexpr std::size_t kMaxDimension = 3;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(const Rational& s, const Point& p);

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
Rational dot(const std::vector<Rational>& a, const Point& b);
std::string to_string(const Point& p);

enum class NormKind { L1, L2, LInf };

NormKind parse_norm(const std::string& name);
std::string to_string(NormKind norm);

// Norm selection and rounding slack shared by every metric computation of a
// workspace.
struct MetricConfig {
  NormKind norm = NormKind::L2;
  double tol_dist = 1e-9;
};

enum class Rounding { Exact, Up, Down };

// Floating value with a rounding direction. Distance bounds are always
// Exact or Up, so they stay valid upper bounds of the true quantity.
struct Real {
  double value = 0.0;
  Rounding dir = Rounding::Exact;

  static Real exact_zero() { return {}; }
  static Real infinity();
  // Smallest double >= q; Exact when q is representable.
  static Real from_rational(const Rational& q);
  // sqrt(q) rounded up; exact when q is a rational square, otherwise the
  // verified upper double plus tol.
  static Real sqrt_of(const Rational& q, double tol);

  bool is_infinite() const;
  bool is_zero() const { return value == 0.0; }

  Real half() const;
  Real divided_by(long long n) const;
  friend Real max(const Real& a, const Real& b);
  friend Real add(const Real& a, const Real& b);
};

// Quantity measured in the workspace norm, kept exact for as long as
// possible: for L2 `value` holds the squared norm.
struct NormValue {
  Rational value;
  bool squared = false;

  Real to_real(double tol) const;
  friend bool operator<(const NormValue& a, const NormValue& b) { return a.value < b.value; }
};

NormValue norm_of(const Point& v, NormKind norm);

// a . x <= offset (inequality) or a . x == offset (equality).
struct Halfspace {
  std::vector<Rational> normal;
  Rational offset;

  bool satisfied_le(const Point& x) const { return cmp(dot(normal, x), offset) <= 0; }
  bool satisfied_eq(const Point& x) const { return cmp(dot(normal, x), offset) == 0; }
};

// Compact convex polytope stored by its exact extreme points in
// lexicographic order; equality is vertex-set equality. May be
// lower-dimensional (a point, a segment, a polygon in R^3, ...).
class Polytope {
 public:
  // Extreme points of conv(points). Throws GeometryError on an empty list,
  // DimensionError on mixed or unsupported dimensions.
  static Polytope from_vertices(std::vector<Point> points);
  static Polytope point(const Point& p) { return from_vertices({p}); }
  static Polytope segment(const Point& a, const Point& b) { return from_vertices({a, b}); }

  const std::vector<Point>& vertices() const;
  std::size_t dimension() const;
  int affine_dimension() const;

  const std::vector<Halfspace>& equalities() const;
  const std::vector<Halfspace>& inequalities() const;
  // Vertex indices of each facet (faces of codimension one inside the affine
  // hull), cyclically ordered when the facet is a polygon.
  const std::vector<std::vector<std::size_t>>& facets() const;

  // Simplices (as vertex index lists) of a triangulation of the polytope
  // within its affine hull.
  std::vector<std::vector<std::size_t>> triangulation() const;

  Point vertex_centroid() const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices() == b.vertices(); }
  friend std::strong_ordering operator<=>(const Polytope& a, const Polytope& b);

  struct Data;

 private:
  explicit Polytope(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Polytope homothet(const Polytope&, const Point&, const Rational&);
  std::shared_ptr<const Data> data_;
};

struct Polytope::Data {
  std::vector<Point> vertices;
  std::size_t dimension = 0;
  int affine_dimension = 0;
  std::vector<std::size_t> pivots;  // coordinates parametrizing the affine hull
  std::vector<Halfspace> equalities;
  std::vector<Halfspace> inequalities;
  std::vector<std::vector<std::size_t>> facets;  // parallel to inequalities
  std::vector<std::size_t> cycle;                // CCW order when affine_dimension == 2
};

std::string to_string(const Polytope& p);

// Affine map x -> matrix * x + offset from R^n to R^m.
class AffineMap {
 public:
  AffineMap(std::vector<std::vector<Rational>> matrix, Point offset);
  static AffineMap identity(std::size_t dim);

  std::size_t domain_dimension() const { return domain_; }
  std::size_t codomain_dimension() const { return offset_.dimension(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const Point& offset() const { return offset_; }

  Point operator()(const Point& x) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  std::vector<std::vector<Rational>> matrix_;
  Point offset_;
  std::size_t domain_ = 0;
};

// outer o inner: x -> outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

bool contains(const Polytope& p, const Point& x);

// Homothet of ratio t centered at c: vertices (1-t) c + t v.
Polytope homothet(const Polytope& p, const Point& c, const Rational& t);

// max_{v in P} ||v - c||.
NormValue reach_exact(const Polytope& p, const Point& c, NormKind norm);
Real reach(const Polytope& p, const Point& c, const MetricConfig& cfg);

// dist(x, P) in the workspace norm.
NormValue point_distance_exact(const Polytope& p, const Point& x, NormKind norm);

// Least eps with Y inside the eps-thickening of X.
NormValue directed_hausdorff_exact(const Polytope& y, const Polytope& x, NormKind norm);
Real directed_hausdorff(const Polytope& y, const Polytope& x, const MetricConfig& cfg);
Real hausdorff(const Polytope& a, const Polytope& b, const MetricConfig& cfg);

Polytope affine_image(const AffineMap& f, const Polytope& p);

// Lebesgue measure in the ambient dimension (0 for lower-dimensional sets).
Rational volume(const Polytope& p);

// Cells of a subdivision of the ambient space on which every input polytope
// is constant as a membership predicate.
struct Cell {
  int dimension = 0;
  Point representative;
  bool bounded = true;
  Rational volume;  // full-dimensional bounded cells only
};

struct CellComplex {
  std::size_t dimension = 0;
  std::vector<Cell> cells;
};

// Exact in ambient dimension 1 and 2; throws DimensionError otherwise.
// In the plane the subdivision is the vertical decomposition of the
// arrangement of all facet-supporting lines, a refinement of the
// arrangement itself.
CellComplex arrangement(const std::vector<Polytope>& polytopes, std::size_t dimension);

void require_dimension(std::size_t got, std::size_t expected, const char* what);

}  // namespace eulercert
