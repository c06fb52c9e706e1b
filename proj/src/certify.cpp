#include "eulercert/certify.hpp"

#include <algorithm>
#include <sstream>

namespace eulercert {

IntegralMismatch::IntegralMismatch(Coefficient l, Coefficient r)
    : std::invalid_argument("integral mismatch: " + std::to_string(l) + " != " + std::to_string(r)), lhs(l), rhs(r) {}

int flag_steps(const Real& reach, const Rational& epsilon) {
  if (reach.is_zero()) return 1;
  const Rational ratio = Rational(reach.value) / (2 * epsilon);
  mpz_class n;
  mpz_cdiv_q(n.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  if (!n.fits_sint_p()) throw std::invalid_argument("epsilon too small: flag would need " + n.get_str() + " steps");
  return std::max(1, static_cast<int>(n.get_si()));
}

CertificateStep concentrate_basepoints(const ConstructibleFunction& phi, const std::vector<Point>& basepoints,
                                       const Rational& epsilon, const Settings& settings) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive (got " + to_string(epsilon) + ")");
  const ConstructibleFunction norm = normalize(phi);
  if (basepoints.size() != norm.terms().size())
    throw std::invalid_argument("expected " + std::to_string(norm.terms().size()) + " basepoints, got " +
                                std::to_string(basepoints.size()));
  const std::size_t dim = phi.dimension();
  SheafSum f(dim), g(dim);
  ConstructibleFunction chi_g(dim);
  for (std::size_t a = 0; a < norm.terms().size(); ++a) {
    const Term& t = norm.terms()[a];
    const Point& x = basepoints[a];
    require_dimension(x.dimension(), dim, "basepoint");
    if (!contains(t.support, x))
      throw GeometryError("basepoint " + to_string(x) + " not in term support " + to_string(t.support));
    const int shift = t.coeff > 0 ? 0 : 1;
    const Coefficient mult = t.coeff > 0 ? t.coeff : -t.coeff;
    const Flag fl = build_flag(t.support, x, flag_steps(reach(t.support, x, settings.metric), epsilon), settings.metric);
    f = direct_sum(f, shifted(graded_sheaf(fl), shift, mult));
    g = direct_sum(g, SheafSum(dim, {{Support::plain(Polytope::point(x)), shift, mult}}));
    chi_g.add_term(t.coeff, Polytope::point(x));
  }
  const Bound b = sum_bound(f, g, settings.metric).bound;
  if (b.to_double() > add_up(upper_double(epsilon), settings.metric.tol_dist))
    throw std::logic_error("concentration step bound " + to_string(b) + " exceeds epsilon " + to_string(epsilon));
  return {std::move(f), std::move(g), b.is_zero() ? Rational(0) : epsilon, norm, normalize(chi_g)};
}

namespace {

// Basepoint of each normalized segment term [x_a, x]: its endpoint other than
// x (x itself for a degenerate segment).
std::vector<Point> segment_basepoints(const ConstructibleFunction& segments, const Point& x) {
  std::vector<Point> out;
  for (const auto& t : segments.terms()) {
    const auto& v = t.support.vertices();
    out.push_back(v.front() == x ? v.back() : v.front());
  }
  return out;
}

}  // namespace

Certificate concentrate_to_point(const ConstructibleFunction& phi, const Point& x, const Rational& epsilon,
                                 const Settings& settings) {
  require_dimension(x.dimension(), phi.dimension(), "concentration target");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive (got " + to_string(epsilon) + ")");
  const ConstructibleFunction norm = normalize(phi);
  std::vector<Point> centers;
  ConstructibleFunction segments(phi.dimension());
  for (const auto& t : norm.terms()) {
    centers.push_back(t.support.vertex_centroid());
    segments.add_term(t.coeff, Polytope::segment(centers.back(), x));
  }
  const ConstructibleFunction psi = normalize(segments);

  Certificate c{epsilon, norm, ConstructibleFunction(phi.dimension()), {}};
  c.steps.push_back(concentrate_basepoints(norm, centers, epsilon, settings));
  c.steps.push_back(concentrate_basepoints(psi, segment_basepoints(psi, x), epsilon, settings).reversed());
  c.steps.push_back(concentrate_basepoints(psi, std::vector<Point>(psi.terms().size(), x), epsilon, settings));
  c.target = c.steps.back().chi_g;
  return c;
}

Certificate reversed(const Certificate& c) {
  Certificate r{c.epsilon, c.target, c.source, {}};
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) r.steps.push_back(it->reversed());
  return r;
}

Certificate link(const ConstructibleFunction& phi, const ConstructibleFunction& psi, const Rational& epsilon,
                 const Settings& settings) {
  require_dimension(psi.dimension(), phi.dimension(), "link");
  const Coefficient a = euler_integral(phi), b = euler_integral(psi);
  if (a != b) throw IntegralMismatch(a, b);
  const Point origin = Point::zero(phi.dimension());
  Certificate out = concentrate_to_point(phi, origin, epsilon, settings);
  const Certificate back = reversed(concentrate_to_point(psi, origin, epsilon, settings));
  out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
  out.target = back.target;
  return out;
}

namespace {

std::vector<std::string> check_step(const Certificate& c, std::size_t k, const Settings& settings,
                                    Coefficient integral) {
  std::vector<std::string> items;
  const CertificateStep& s = c.steps[k];
  const std::string at = " at step " + std::to_string(k + 1);
  const std::size_t dim = c.source.dimension();
  if (s.f.dimension() != dim || s.g.dimension() != dim || s.chi_f.dimension() != dim || s.chi_g.dimension() != dim) {
    items.push_back("dimension mismatch" + at);
    return items;
  }
  if (!equals(local_euler(s.f), s.chi_f, settings.equality).holds()) items.push_back("chi_F mismatch" + at);
  if (!equals(local_euler(s.g), s.chi_g, settings.equality).holds()) items.push_back("chi_G mismatch" + at);
  if (euler_integral(s.chi_f) != integral || euler_integral(s.chi_g) != integral)
    items.push_back("Euler integral changes" + at);
  if (s.declared_bound < 0) items.push_back("negative bound" + at);
  if (s.declared_bound > c.epsilon) items.push_back("bound exceeds epsilon" + at);
  const Bound recomputed = sum_bound(s.f, s.g, settings.metric).bound;
  if (recomputed.to_double() > add_up(upper_double(s.declared_bound), settings.metric.tol_dist))
    items.push_back("bound understated" + at + " (declared " + decimal_up(s.declared_bound) + ", recomputed " +
                    to_string(recomputed) + ")");
  if (k + 1 < c.steps.size() && !equals(s.chi_g, c.steps[k + 1].chi_f, settings.equality).holds())
    items.push_back("chain broken between steps " + std::to_string(k + 1) + " and " + std::to_string(k + 2));
  return items;
}

VerifyReport finish(const Certificate& c, const Settings& settings, std::vector<std::vector<std::string>> per_step) {
  VerifyReport r;
  if (c.epsilon <= 0) r.failures.push_back("epsilon must be positive");
  if (c.target.dimension() != c.source.dimension()) r.failures.push_back("source/target dimension mismatch");
  if (c.steps.empty()) {
    r.failures.push_back("certificate has no steps");
  } else if (c.steps.front().chi_f.dimension() == c.source.dimension() &&
             c.steps.back().chi_g.dimension() == c.target.dimension() &&
             c.target.dimension() == c.source.dimension()) {
    if (!equals(c.source, c.steps.front().chi_f, settings.equality).holds())
      r.failures.push_back("source does not match chi_F of step 1");
    if (!equals(c.target, c.steps.back().chi_g, settings.equality).holds())
      r.failures.push_back("target does not match chi_G of step " + std::to_string(c.steps.size()));
  }
  for (auto& items : per_step) r.failures.insert(r.failures.end(), items.begin(), items.end());
  r.pass = r.failures.empty();
  return r;
}

}  // namespace

VerifyReport verify(const Certificate& c, const Settings& settings) {
  const Coefficient integral = euler_integral(c.source);
  std::vector<std::vector<std::string>> per_step(c.steps.size());
  const auto n = static_cast<std::ptrdiff_t>(c.steps.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    per_step[static_cast<std::size_t>(k)] = check_step(c, static_cast<std::size_t>(k), settings, integral);
  return finish(c, settings, std::move(per_step));
}

VerifyReport verify_serial(const Certificate& c, const Settings& settings) {
  const Coefficient integral = euler_integral(c.source);
  std::vector<std::vector<std::string>> per_step;
  for (std::size_t k = 0; k < c.steps.size(); ++k) per_step.push_back(check_step(c, k, settings, integral));
  return finish(c, settings, std::move(per_step));
}

MetricKind parse_metric(const std::string& name) {
  if (name == "l1") return MetricKind::L1;
  if (name == "sup") return MetricKind::Sup;
  if (name == "gap") return MetricKind::IntegralGap;
  throw std::invalid_argument("unknown metric '" + name + "' (expected l1, sup or gap)");
}

Real metric_eval(MetricKind kind, const ConstructibleFunction& phi, const ConstructibleFunction& psi) {
  require_dimension(psi.dimension(), phi.dimension(), "metric_eval");
  if (kind == MetricKind::IntegralGap) {
    const Coefficient gap = euler_integral(phi) - euler_integral(psi);
    return Real::from_rational(Rational(gap < 0 ? -gap : gap));
  }
  if (phi.dimension() > 2) throw DimensionError("metric_eval: L1 and SUP need dimension <= 2");
  const ConstructibleFunction diff = normalize(phi - psi);
  if (diff.empty()) return Real::exact_zero();
  const CellComplex cx = arrangement(supports(diff), diff.dimension());
  Rational acc;
  for (const auto& cell : cx.cells) {
    if (kind == MetricKind::L1 && (!cell.bounded || static_cast<std::size_t>(cell.dimension) != cx.dimension))
      continue;
    Coefficient v = evaluate(diff, cell.representative);
    if (v < 0) v = -v;
    if (kind == MetricKind::L1) acc += Rational(v) * cell.volume;
    else acc = std::max(acc, Rational(v));
  }
  return Real::from_rational(acc);
}

std::vector<ProbeRow> probe_metric(MetricKind kind, const ConstructibleFunction& phi, const Point& x,
                                   const std::vector<Rational>& schedule, const Settings& settings) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0) throw std::invalid_argument("probe schedule values must be positive");
    if (i && schedule[i] >= schedule[i - 1]) throw std::invalid_argument("probe schedule must be strictly decreasing");
  }
  const ConstructibleFunction target = normalize(ConstructibleFunction::indicator(Polytope::point(x), euler_integral(phi)));
  const Real delta = metric_eval(kind, phi, target);
  std::vector<ProbeRow> rows;
  for (const auto& eps : schedule) {
    const Certificate c = concentrate_to_point(phi, x, eps, settings);
    Rational worst;
    for (const auto& s : c.steps) worst = std::max(worst, s.declared_bound);
    rows.push_back({eps, worst, delta});
  }
  return rows;
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream out;
  out << "epsilon,dc_bound,delta\n";
  for (const auto& r : rows)
    out << decimal_up(r.epsilon) << ',' << decimal_up(r.dc_bound) << ',' << decimal_up(r.delta.value) << '\n';
  return out.str();
}

}  // namespace eulercert
