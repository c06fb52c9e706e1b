// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "gen.hpp"

using namespace eulercert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string note;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const MetricConfig kL2{};
const Settings kSettings{};

Polytope sweep_polytope(gen::Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 2));
  return gen::random_polytope(rng, dim, 10, 4, 2);
}

// 1 and 2 share one sweep.
void flag_sweep(Outcome& telescoping, Outcome& bound) {
  gen::Rng rng(101);
  for (int k = 0; k < 500; ++k) {
    const Polytope base = sweep_polytope(rng);
    const Point c = gen::interior_point(rng, base);
    for (int n : {1, 2, 4, 16, 64}) {
      const Flag fl = build_flag(base, c, n, kL2);
      const SheafSum s = graded_sheaf(fl);
      const ConstructibleFunction chi = local_euler(s);
      const ConstructibleFunction want = ConstructibleFunction::indicator(base);
      if (!(normalize(chi) == normalize(want)) || !equals(chi, want).holds() ||
          equals(chi, want).verdict != Verdict::Equal)
        telescoping.fail("instance " + std::to_string(k) + " n=" + std::to_string(n) + ": " + to_string(base));
      const SheafSum point(base.dimension(), {{Support::plain(Polytope::point(c)), 0, 1}});
      const double got = sum_bound(s, point, kL2).bound.to_double();
      const double limit = reach(base, c, kL2).value / (2.0 * n) + 1e-9;
      if (!(got <= limit))
        bound.fail("instance " + std::to_string(k) + " n=" + std::to_string(n) + ": " + std::to_string(got) + " > " +
                   std::to_string(limit));
    }
  }
}

void vanishing(Outcome& out) {
  gen::Rng rng(303);
  int made = 0;
  while (made < 200) {
    const Polytope y = sweep_polytope(rng);
    if (y.vertices().size() < 2) continue;
    ++made;
    const Point c = gen::interior_point(rng, y);
    const int n = rng.uniform(2, 9);
    const int i = rng.uniform(1, n - 1);
    Rational t(i, n);
    t.canonicalize();
    const Polytope x = homothet(y, c, t);
    const double pb = pair_bound(Summand{Support::difference(y, x), 0, 1}, std::nullopt, kL2).to_double();
    const double dh = directed_hausdorff(y, x, kL2).value;
    if (std::abs(pb - dh / 2) > 1e-9) out.fail("pair " + std::to_string(made) + ": pair_bound != h/2");
    const Flag fl = build_flag(y, c, n, kL2);
    const double r = reach(y, c, kL2).value;
    for (int lvl = 1; lvl <= n; ++lvl) {
      const double h = directed_hausdorff(fl.levels[lvl], fl.levels[lvl - 1], kL2).value;
      if (std::abs(h - r / n) > 1e-9)
        out.fail("chain " + std::to_string(made) + " level " + std::to_string(lvl) + ": " + std::to_string(h) +
                 " vs " + std::to_string(r / n));
    }
  }
}

void integral_identity(Outcome& out) {
  gen::Rng rng(404);
  for (int k = 0; k < 500; ++k) {
    const SheafSum s = gen::random_sheaf(rng, static_cast<std::size_t>(rng.uniform(1, 2)), 8, 3);
    const GlobalSections gs = global_sections(s);
    Coefficient alt = 0;
    for (const auto& [deg, d] : gs.dims) alt += (deg % 2 == 0 ? d : -d);
    if (euler_integral(local_euler(s)) != alt || gs.euler_number() != alt)
      out.fail("sheaf " + std::to_string(k));
  }
}

void integral_oracle(Outcome& out) {
  gen::Rng rng(505);
  for (int k = 0; k < 500; ++k) {
    const ConstructibleFunction f = gen::random_cf(rng, static_cast<std::size_t>(rng.uniform(1, 2)), 6);
    if (euler_integral(f) != oracle_integral(f)) out.fail("function " + std::to_string(k));
  }
}

AffineMap random_map(gen::Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (auto& r : m)
    for (auto& a : r) a = rng.grid(-2, 2, 2);
  return AffineMap(m, gen::random_point(rng, rows, 2, 2));
}

void functoriality(Outcome& out) {
  gen::Rng rng(606);
  for (int k = 0; k < 200; ++k) {
    const ConstructibleFunction phi = gen::random_cf(rng, 2, 4);
    const AffineMap f = random_map(rng, 2, 2), g = random_map(rng, 1, 2);
    const ConstructibleFunction two_step = pushforward(pushforward(phi, f), g);
    const ConstructibleFunction one_step = pushforward(phi, compose(g, f));
    if (equals(two_step, one_step).verdict != Verdict::Equal) out.fail("instance " + std::to_string(k) + ": g_* f_* != (gf)_*");
    const ConstructibleFunction fphi = pushforward(phi, f);
    const CellComplex cx2 = arrangement(supports(fphi), 2);
    for (const auto& cell : cx2.cells)
      if (evaluate(fphi, cell.representative) != oracle_pushforward_at(phi, f, cell.representative))
        out.fail("instance " + std::to_string(k) + ": f_* at " + to_string(cell.representative));
    const CellComplex cx1 = arrangement(supports(one_step), 1);
    for (const auto& cell : cx1.cells)
      if (evaluate(one_step, cell.representative) != oracle_pushforward_at(phi, compose(g, f), cell.representative))
        out.fail("instance " + std::to_string(k) + ": (gf)_* at " + to_string(cell.representative));
  }
}

void end_to_end(Outcome& out) {
  gen::Rng rng(707);
  for (int k = 0; k < 50; ++k) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const ConstructibleFunction phi = gen::random_cf(rng, dim, 4, 4, 2);
    ConstructibleFunction psi = gen::random_cf(rng, dim, 4, 4, 2);
    const Coefficient gap = euler_integral(phi) - euler_integral(psi);
    if (gap != 0) psi.add_term(gap, Polytope::point(gen::random_point(rng, dim, 2, 2)));
    std::size_t steps = 0;
    for (int e = 1; e <= 8; ++e) {
      const Rational eps(1, 1 << e);
      const Certificate c = link(phi, psi, eps, kSettings);
      const VerifyReport r = verify(c, kSettings);
      if (!r.pass) out.fail("pair " + std::to_string(k) + " eps 2^-" + std::to_string(e) + ": " + r.failures.front());
      if (e == 1) steps = c.steps.size();
      if (c.steps.size() != steps) out.fail("pair " + std::to_string(k) + ": step count changes with epsilon");
      for (const auto& s : c.steps) {
        if (s.declared_bound > eps) out.fail("pair " + std::to_string(k) + ": declared bound above epsilon");
        if (sum_bound(s.f, s.g, kL2).bound.to_double() > upper_double(eps) + 1e-9)
          out.fail("pair " + std::to_string(k) + ": recomputed bound above epsilon");
      }
    }
  }
}

void probe_table(Outcome& out) {
  const ConstructibleFunction square = ConstructibleFunction::indicator(Polytope::from_vertices(
      {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}));
  std::vector<Rational> schedule;
  for (int k = 1; k <= 10; ++k) schedule.push_back(Rational(1, 1 << k));
  const auto l1 = probe_metric(MetricKind::L1, square, Point{0, 0}, schedule, kSettings);
  const auto gap = probe_metric(MetricKind::IntegralGap, square, Point{0, 0}, schedule, kSettings);
  if (l1.size() != 10 || gap.size() != 10) out.fail("wrong row count");
  for (std::size_t k = 0; k < l1.size(); ++k) {
    if (std::abs(l1[k].dc_bound.get_d() - schedule[k].get_d()) > 1e-9) out.fail("dc_bound row " + std::to_string(k + 1));
    if (std::abs(l1[k].delta.value - 1.0) > 1e-9) out.fail("L1 delta row " + std::to_string(k + 1));
    if (gap[k].delta.value != 0.0) out.fail("gap delta row " + std::to_string(k + 1));
  }
}

void matcher(Outcome& out) {
  gen::Rng rng(909);
  int positive = 0, zero = 0, infinite = 0;
  // Small pool so that equal supports and translates occur.
  std::vector<Polytope> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(gen::random_polytope(rng, 2, 4, 2, 2));
  const Point v = gen::random_point(rng, 2, 1, 2);
  for (int i = 0; i < 5; ++i) {
    std::vector<Point> moved;
    for (const auto& p : pool[static_cast<std::size_t>(i)].vertices()) moved.push_back(p + v);
    pool.push_back(Polytope::from_vertices(moved));
  }
  auto translate = [&](const Polytope& p) {
    std::vector<Point> moved;
    for (const auto& q : p.vertices()) moved.push_back(q + v);
    return Polytope::from_vertices(moved);
  };
  auto diff_support = [&](const Polytope& p) {
    return p.vertices().size() > 1 ? gen::random_support(rng, p) : Support::plain(p);
  };
  // G is built unit by unit from F: kept, translated, replaced or dropped,
  // so finite and positive bottlenecks dominate.
  auto pair = [&] {
    std::vector<Summand> a, b;
    const int units = rng.uniform(0, 6);
    for (int u = 0; u < units; ++u) {
      const Polytope& p = pool[static_cast<std::size_t>(rng.uniform(0, 9))];
      const Support s = rng.uniform(0, 3) ? diff_support(p) : Support::plain(p);
      const int shift = rng.uniform(0, 1);
      a.push_back({s, shift, 1});
      switch (rng.uniform(0, 3)) {
        case 0: b.push_back({s, shift, 1}); break;
        case 1:
          if (s.is_difference()) b.push_back({Support::difference(translate(s.outer()), translate(*s.inner())), shift, 1});
          else b.push_back({Support::plain(translate(s.outer())), shift, 1});
          break;
        case 2:
          if (s.is_difference()) b.push_back({diff_support(s.outer()), rng.uniform(0, 1), 1});
          else b.push_back({Support::plain(pool[static_cast<std::size_t>(rng.uniform(0, 9))]), shift, 1});
          break;
        default:
          if (!s.is_difference()) b.push_back({s, shift, 1});
      }
    }
    if (b.size() < 6 && rng.coin()) b.push_back({diff_support(pool[static_cast<std::size_t>(rng.uniform(0, 9))]), 0, 1});
    return std::pair{SheafSum(2, a), SheafSum(2, b)};
  };
  for (int k = 0; k < 200; ++k) {
    const auto [f, g] = pair();
    const double got = sum_bound(f, g, kL2).bound.to_double();
    const double want = gen::brute_sum_bound(f, g, kL2);
    if (got != want) out.fail("pair " + std::to_string(k) + ": " + std::to_string(got) + " vs " + std::to_string(want));
    ++(std::isinf(want) ? infinite : want == 0 ? zero : positive);
  }
  out.note = std::to_string(positive) + " positive, " + std::to_string(zero) + " zero, " + std::to_string(infinite) +
             " infinite";
}

template <class F>
double timed(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int id, const char* name, const Outcome& o, double secs, double limit) {
  const bool ok = o.pass && secs < limit;
  std::printf("%s criterion %d (%s) %.1fs%s%s%s\n", ok ? "PASS" : "FAIL", id, name, secs,
              secs < limit ? "" : " over time budget", o.note.empty() ? "" : (" [" + o.note + "]").c_str(),
              o.pass ? "" : (": " + o.detail).c_str());
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  Outcome c1, c2, c3, c4, c5, c6, c7, c8, c9;
  const double t12 = timed([&] { flag_sweep(c1, c2); });
  ok &= report(1, "telescoping identity", c1, t12, 60);
  ok &= report(2, "flag bound", c2, t12, 60);
  ok &= report(3, "vanishing rule", c3, timed([&] { vanishing(c3); }), 600);
  ok &= report(4, "integral identity", c4, timed([&] { integral_identity(c4); }), 30);
  ok &= report(5, "Euler integral oracle", c5, timed([&] { integral_oracle(c5); }), 600);
  ok &= report(6, "functoriality", c6, timed([&] { functoriality(c6); }), 600);
  ok &= report(7, "end-to-end link and verify", c7, timed([&] { end_to_end(c7); }), 300);
  ok &= report(8, "probe table", c8, timed([&] { probe_table(c8); }), 60);
  ok &= report(9, "matcher optimality", c9, timed([&] { matcher(c9); }), 600);
  return ok ? 0 : 1;
}
