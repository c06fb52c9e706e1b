#include "eulercert/sheafsum.hpp"

#include <algorithm>

namespace eulercert {

Support Support::plain(const Polytope& outer) { return Support(outer, std::nullopt); }

Support Support::difference(const Polytope& outer, const Polytope& inner) {
  require_dimension(inner.dimension(), outer.dimension(), "difference support");
  if (inner == outer) throw GeometryError("difference support: inner equals outer " + to_string(outer));
  for (const auto& v : inner.vertices())
    if (!contains(outer, v))
      throw GeometryError("difference support: inner " + to_string(inner) + " not contained in outer " +
                          to_string(outer));
  return Support(outer, inner);
}

std::strong_ordering operator<=>(const Support& a, const Support& b) {
  if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
  if (a.inner_.has_value() != b.inner_.has_value())
    return a.inner_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a.inner_) return std::strong_ordering::equal;
  return *a.inner_ <=> *b.inner_;
}

SheafSum::SheafSum(std::size_t dimension, std::vector<Summand> summands) : dimension_(dimension) {
  for (const auto& s : summands) {
    require_dimension(s.support.dimension(), dimension_, "sheaf summand");
    if (s.multiplicity < 1) throw std::invalid_argument("sheaf summand multiplicity must be >= 1");
  }
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    if (auto c = a.support <=> b.support; c != 0) return c < 0;
    return a.shift < b.shift;
  });
  for (auto& s : summands) {
    if (!summands_.empty() && summands_.back().support == s.support && summands_.back().shift == s.shift)
      summands_.back().multiplicity += s.multiplicity;
    else
      summands_.push_back(std::move(s));
  }
}

Coefficient SheafSum::total_multiplicity() const {
  Coefficient m = 0;
  for (const auto& s : summands_) m += s.multiplicity;
  return m;
}

SheafSum direct_sum(const SheafSum& a, const SheafSum& b) {
  require_dimension(b.dimension_, a.dimension_, "direct sum");
  std::vector<Summand> all = a.summands_;
  all.insert(all.end(), b.summands_.begin(), b.summands_.end());
  return SheafSum(a.dimension_, std::move(all));
}

SheafSum shifted(const SheafSum& s, int shift, Coefficient multiplicity) {
  std::vector<Summand> out = s.summands();
  for (auto& m : out) {
    m.shift += shift;
    m.multiplicity *= multiplicity;
  }
  return SheafSum(s.dimension(), std::move(out));
}

Coefficient GlobalSections::euler_number() const {
  Coefficient e = 0;
  for (const auto& [deg, dim] : dims) e += (deg % 2 == 0) ? dim : -dim;
  return e;
}

ConstructibleFunction local_euler(const SheafSum& s) {
  ConstructibleFunction f(s.dimension());
  for (const auto& m : s.summands()) {
    const Coefficient sign = (m.shift % 2 == 0) ? 1 : -1;
    f.add_term(sign * m.multiplicity, m.support.outer());
    if (m.support.inner()) f.add_term(-sign * m.multiplicity, *m.support.inner());
  }
  return normalize(f);
}

GlobalSections global_sections(const SheafSum& s) {
  GlobalSections g;
  for (const auto& m : s.summands())
    if (!m.support.is_difference()) g.dims[-m.shift] += m.multiplicity;
  return g;
}

}  // namespace eulercert
