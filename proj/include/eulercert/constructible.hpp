#pragma once

// Compactly supported PL constructible functions, written as finite integer
// combinations of indicators of compact convex polytopes.

#include <cstdint>
#include <optional>
#include <vector>

#include "eulercert/geometry.hpp"

namespace eulercert {

using Coefficient = std::int64_t;

struct Term {
  Coefficient coeff = 0;
  Polytope support;

  friend bool operator==(const Term&, const Term&) = default;
};

class ConstructibleFunction {
 public:
  explicit ConstructibleFunction(std::size_t dimension) : dimension_(dimension) {}
  ConstructibleFunction(std::size_t dimension, std::vector<Term> terms);

  static ConstructibleFunction indicator(const Polytope& p, Coefficient coeff = 1);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(Coefficient coeff, const Polytope& support);

  ConstructibleFunction& operator+=(const ConstructibleFunction& other);
  friend ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) { return a += b; }
  friend ConstructibleFunction operator-(const ConstructibleFunction& a);
  friend ConstructibleFunction operator-(ConstructibleFunction a, const ConstructibleFunction& b);
  friend ConstructibleFunction operator*(Coefficient s, const ConstructibleFunction& f);

  // Structural equality of the term lists (compare normalized functions to
  // test equality as formal sums).
  friend bool operator==(const ConstructibleFunction&, const ConstructibleFunction&) = default;

 private:
  std::size_t dimension_;
  std::vector<Term> terms_;
};

// Merges terms with equal supports, drops zero coefficients and sorts terms by
// support; pointwise values are unchanged.
ConstructibleFunction normalize(const ConstructibleFunction& f);

Coefficient evaluate(const ConstructibleFunction& f, const Point& x);

// Sum of coefficients: every support is compact convex, so chi = 1.
Coefficient euler_integral(const ConstructibleFunction& f);

// Independent route: sum over bounded cells c of the arrangement of
// f(rep(c)) * (-1)^dim(c), i.e. the compactly supported Euler
// characteristic weighted by f. Dimension <= 2.
Coefficient oracle_integral(const ConstructibleFunction& f);

std::vector<Polytope> supports(const ConstructibleFunction& f);

enum class EqualityMode { Auto, Exact, Sampled };

struct EqualityOptions {
  EqualityMode mode = EqualityMode::Auto;  // Auto: exact for dim <= 2, sampled for dim 3
  int sample_density = 64;                 // random samples per unit volume (sampled mode)
};

enum class Verdict { Equal, NotEqual, ProbablyEqual };

struct EvalReport {
  Verdict verdict = Verdict::Equal;
  std::optional<Point> witness;

  bool holds() const { return verdict != Verdict::NotEqual; }
};

const char* to_string(Verdict v);

EvalReport equals(const ConstructibleFunction& f, const ConstructibleFunction& g, const EqualityOptions& opts = {});

// Deterministic sample set used by sampled equality: vertices, face
// barycenters and their perturbations, plus `density` uniform points per
// unit volume of the bounding box.
std::vector<Point> equality_samples(const std::vector<Polytope>& supports, std::size_t dimension, int density);

// Direct image along an affine map: sum C * 1_{f(X)}.
ConstructibleFunction pushforward(const ConstructibleFunction& phi, const AffineMap& f);

// (f_* phi)(y) from the definition: the fiber f^{-1}(y) meets a compact convex
// support in a compact convex (Euler characteristic 1) set or nothing, so
// the value is the sum of C over supports whose slice is nonempty. Slices are
// decided by exact linear feasibility on the H-representation.
Coefficient oracle_pushforward_at(const ConstructibleFunction& phi, const AffineMap& f, const Point& y);

}  // namespace eulercert
