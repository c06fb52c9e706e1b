#pragma once

// Decomposable sheaves: finite direct sums of shifted constant sheaves on
// compact convex polytopes (k_A[d]) or on nested differences Y \ X of such
// polytopes (k_{Y\X}[d]).

#include <map>
#include <optional>
#include <vector>

#include "eulercert/constructible.hpp"

namespace eulercert {

class Support {
 public:
  static Support plain(const Polytope& outer);
  // Locally closed difference Y \ X. Requires X inside Y, X != Y and equal
  // dimensions; throws GeometryError otherwise.
  static Support difference(const Polytope& outer, const Polytope& inner);

  const Polytope& outer() const { return outer_; }
  const std::optional<Polytope>& inner() const { return inner_; }
  bool is_difference() const { return inner_.has_value(); }
  std::size_t dimension() const { return outer_.dimension(); }

  friend bool operator==(const Support&, const Support&) = default;
  friend std::strong_ordering operator<=>(const Support& a, const Support& b);

 private:
  Support(Polytope outer, std::optional<Polytope> inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}
  Polytope outer_;
  std::optional<Polytope> inner_;
};

struct Summand {
  Support support;
  int shift = 0;
  Coefficient multiplicity = 1;

  friend bool operator==(const Summand&, const Summand&) = default;
};

class SheafSum {
 public:
  explicit SheafSum(std::size_t dimension) : dimension_(dimension) {}
  // Canonicalizes: merges equal (support, shift) and sorts.
  SheafSum(std::size_t dimension, std::vector<Summand> summands);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  Coefficient total_multiplicity() const;

  friend SheafSum direct_sum(const SheafSum& a, const SheafSum& b);
  friend bool operator==(const SheafSum&, const SheafSum&) = default;

 private:
  std::size_t dimension_;
  std::vector<Summand> summands_;
};

// Every summand shifted by `shift` and multiplied by `multiplicity`.
SheafSum shifted(const SheafSum& s, int shift, Coefficient multiplicity);

// Degree -> dimension of H^deg(V; S), zero entries omitted.
struct GlobalSections {
  std::map<int, Coefficient> dims;

  Coefficient euler_number() const;
  friend bool operator==(const GlobalSections&, const GlobalSections&) = default;
};

// Pointwise Euler characteristic of the stalks, normalized.
ConstructibleFunction local_euler(const SheafSum& s);

// A plain summand k_A[d] with A compact convex (hence contractible)
// contributes its multiplicity in degree -d. A difference summand k_{Y\X}
// contributes nothing: the restriction R Gamma(V; k_Y) -> R Gamma(V; k_X) is
// an isomorphism of one-dimensional complexes for nonempty convex X inside Y.
GlobalSections global_sections(const SheafSum& s);

}  // namespace eulercert
