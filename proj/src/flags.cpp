#include "eulercert/flags.hpp"

namespace eulercert {

Flag build_flag(const Polytope& base, const Point& center, int steps, const MetricConfig& cfg) {
  if (steps < 1) throw std::invalid_argument("flag needs at least one step (got " + std::to_string(steps) + ")");
  require_dimension(center.dimension(), base.dimension(), "build_flag");
  if (!contains(base, center)) throw GeometryError("flag center " + to_string(center) + " not in " + to_string(base));
  Flag fl{base, center, steps, {}, reach(base, center, cfg).divided_by(steps)};
  fl.levels.reserve(static_cast<std::size_t>(steps) + 1);
  fl.levels.push_back(Polytope::point(center));
  for (int i = 1; i < steps; ++i) {
    Rational t(i, steps);
    t.canonicalize();
    fl.levels.push_back(homothet(base, center, t));
  }
  fl.levels.push_back(base);
  return fl;
}

SheafSum graded_sheaf(const Flag& flag) {
  std::vector<Summand> parts;
  parts.push_back({Support::plain(flag.levels.front()), 0, 1});
  for (std::size_t i = 1; i < flag.levels.size(); ++i) {
    if (flag.levels[i] == flag.levels[i - 1]) continue;
    parts.push_back({Support::difference(flag.levels[i], flag.levels[i - 1]), 0, 1});
  }
  return SheafSum(flag.base.dimension(), std::move(parts));
}

}  // namespace eulercert
