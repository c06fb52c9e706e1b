#include "eulercert/constructible.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "eulercert/kernels.hpp"
#include "eulercert/lp.hpp"

namespace eulercert {

ConstructibleFunction::ConstructibleFunction(std::size_t dimension, std::vector<Term> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  for (const auto& t : terms_) require_dimension(t.support.dimension(), dimension_, "constructible function term");
}

ConstructibleFunction ConstructibleFunction::indicator(const Polytope& p, Coefficient coeff) {
  ConstructibleFunction f(p.dimension());
  f.add_term(coeff, p);
  return f;
}

void ConstructibleFunction::add_term(Coefficient coeff, const Polytope& support) {
  require_dimension(support.dimension(), dimension_, "constructible function term");
  if (coeff != 0) terms_.push_back({coeff, support});
}

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& other) {
  require_dimension(other.dimension_, dimension_, "constructible function sum");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

ConstructibleFunction operator-(const ConstructibleFunction& a) { return Coefficient{-1} * a; }

ConstructibleFunction operator-(ConstructibleFunction a, const ConstructibleFunction& b) { return a += -b; }

ConstructibleFunction operator*(Coefficient s, const ConstructibleFunction& f) {
  ConstructibleFunction r(f.dimension());
  for (const auto& t : f.terms()) r.add_term(s * t.coeff, t.support);
  return r;
}

ConstructibleFunction normalize(const ConstructibleFunction& f) {
  std::map<Polytope, Coefficient> merged;
  for (const auto& t : f.terms()) merged[t.support] += t.coeff;
  ConstructibleFunction r(f.dimension());
  for (const auto& [support, coeff] : merged) r.add_term(coeff, support);
  return r;
}

Coefficient evaluate(const ConstructibleFunction& f, const Point& x) {
  require_dimension(x.dimension(), f.dimension(), "evaluate");
  Coefficient v = 0;
  for (const auto& t : f.terms())
    if (contains(t.support, x)) v += t.coeff;
  return v;
}

Coefficient euler_integral(const ConstructibleFunction& f) {
  Coefficient s = 0;
  for (const auto& t : f.terms()) s += t.coeff;
  return s;
}

std::vector<Polytope> supports(const ConstructibleFunction& f) {
  std::vector<Polytope> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back(t.support);
  return out;
}

Coefficient oracle_integral(const ConstructibleFunction& f) {
  if (f.dimension() > 2) throw DimensionError("oracle_integral: exact mode requires dimension <= 2");
  return kernels::weighted_cell_sum(f, arrangement(supports(f), f.dimension()));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not-equal";
    case Verdict::ProbablyEqual: return "probably-equal";
  }
  return "equal";
}

std::vector<Point> equality_samples(const std::vector<Polytope>& polys, std::size_t dimension, int density) {
  std::vector<Point> special;
  for (const auto& p : polys) {
    const auto& v = p.vertices();
    special.insert(special.end(), v.begin(), v.end());
    special.push_back(p.vertex_centroid());
    for (const auto& facet : p.facets()) {
      Point c = Point::zero(dimension);
      for (auto i : facet) c = c + v[i];
      special.push_back(Rational(1, static_cast<unsigned long>(facet.size())) * c);
      for (std::size_t i = 0; i < facet.size() && facet.size() > 2; ++i)
        special.push_back(Rational(1, 2) * (v[facet[i]] + v[facet[(i + 1) % facet.size()]]));
    }
  }
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());

  std::vector<Point> out = special;
  // Perturb every special point in each of the 3^n - 1 sign directions.
  const Rational delta(1, 1 << 16);
  std::size_t dirs = 1;
  for (std::size_t i = 0; i < dimension; ++i) dirs *= 3;
  for (const auto& s : special) {
    for (std::size_t code = 0; code < dirs; ++code) {
      Point q = s;
      std::size_t c = code;
      bool moved = false;
      for (std::size_t i = 0; i < dimension; ++i, c /= 3) {
        const int step = static_cast<int>(c % 3) - 1;
        if (step) {
          q[i] += step * delta;
          moved = true;
        }
      }
      if (moved) out.push_back(std::move(q));
    }
  }

  if (special.empty()) return out;
  Point lo = special.front(), hi = special.front();
  for (const auto& s : special)
    for (std::size_t i = 0; i < dimension; ++i) {
      lo[i] = std::min(lo[i], s[i]);
      hi[i] = std::max(hi[i], s[i]);
    }
  Rational box = 1;
  for (std::size_t i = 0; i < dimension; ++i) box *= hi[i] - lo[i];
  const Rational wanted = box * density;
  const std::size_t count =
      std::max<std::size_t>(static_cast<std::size_t>(density), static_cast<std::size_t>(upper_double(wanted)));
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  constexpr unsigned kGrid = 1u << 20;
  std::uniform_int_distribution<unsigned> pick(0, kGrid);
  for (std::size_t k = 0; k < count; ++k) {
    Point q = Point::zero(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      Rational u(pick(rng), kGrid);
      u.canonicalize();
      q[i] = lo[i] + (hi[i] - lo[i]) * u;
    }
    out.push_back(std::move(q));
  }
  return out;
}

EvalReport equals(const ConstructibleFunction& f, const ConstructibleFunction& g, const EqualityOptions& opts) {
  require_dimension(g.dimension(), f.dimension(), "equals");
  const ConstructibleFunction diff = normalize(f - g);
  const bool sampled =
      opts.mode == EqualityMode::Sampled || (opts.mode == EqualityMode::Auto && f.dimension() > 2);
  if (!sampled && f.dimension() > 2) throw DimensionError("equals: exact mode requires dimension <= 2");
  if (diff.empty()) return {Verdict::Equal, std::nullopt};

  std::vector<Point> probes;
  if (sampled) {
    probes = equality_samples(supports(diff), f.dimension(), opts.sample_density);
  } else {
    const CellComplex cx = arrangement(supports(diff), f.dimension());
    probes.reserve(cx.cells.size());
    for (const auto& c : cx.cells) probes.push_back(c.representative);
  }
  if (auto i = kernels::first_nonzero(diff, probes)) return {Verdict::NotEqual, probes[*i]};
  return {sampled ? Verdict::ProbablyEqual : Verdict::Equal, std::nullopt};
}

ConstructibleFunction pushforward(const ConstructibleFunction& phi, const AffineMap& f) {
  require_dimension(f.domain_dimension(), phi.dimension(), "pushforward");
  ConstructibleFunction out(f.codomain_dimension());
  for (const auto& t : phi.terms()) out.add_term(t.coeff, affine_image(f, t.support));
  return normalize(out);
}

namespace {

// Is {x : x in P, A x + b = y} nonempty? Variables x = x+ - x-, one slack per
// facet inequality.
bool slice_nonempty(const Polytope& p, const AffineMap& f, const Point& y) {
  const std::size_t n = p.dimension();
  const auto& ineq = p.inequalities();
  const std::size_t nv = 2 * n + ineq.size();
  lp::Problem prob;
  prob.num_vars = nv;
  auto free_row = [&](const std::vector<Rational>& a) {
    std::vector<Rational> row(nv);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    return row;
  };
  for (const auto& h : p.equalities()) {
    prob.rows.push_back(free_row(h.normal));
    prob.rhs.push_back(h.offset);
  }
  for (std::size_t k = 0; k < ineq.size(); ++k) {
    auto row = free_row(ineq[k].normal);
    row[2 * n + k] = 1;
    prob.rows.push_back(std::move(row));
    prob.rhs.push_back(ineq[k].offset);
  }
  for (std::size_t i = 0; i < f.codomain_dimension(); ++i) {
    prob.rows.push_back(free_row(f.matrix()[i]));
    prob.rhs.push_back(y[i] - f.offset()[i]);
  }
  return lp::feasible(prob);
}

}  // namespace

Coefficient oracle_pushforward_at(const ConstructibleFunction& phi, const AffineMap& f, const Point& y) {
  require_dimension(f.domain_dimension(), phi.dimension(), "oracle_pushforward_at");
  require_dimension(y.dimension(), f.codomain_dimension(), "oracle_pushforward_at");
  Coefficient v = 0;
  for (const auto& t : phi.terms())
    if (slice_nonempty(t.support, f, y)) v += t.coeff;
  return v;
}

}  // namespace eulercert
