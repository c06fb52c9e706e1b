#include <doctest.h>

#include "gen.hpp"

using namespace eulercert;

namespace {

const Polytope Q = Polytope::from_vertices({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}});

Rational r(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Polytope seg(const Rational& a, const Rational& b) { return Polytope::segment(Point{a}, Point{b}); }

ConstructibleFunction cf(std::size_t dim, std::vector<Term> terms) { return ConstructibleFunction(dim, std::move(terms)); }

const Polytope inner = Polytope::from_vertices(
    {Point{r(1, 4), r(1, 4)}, Point{r(3, 4), r(1, 4)}, Point{r(3, 4), r(3, 4)}, Point{r(1, 4), r(3, 4)}});
const AffineMap proj_x({{1, 0}}, Point{0});

}  // namespace

TEST_CASE("normalize examples") {
  const auto twice = normalize(cf(2, {{1, Q}, {1, Q}}));
  REQUIRE(twice.terms().size() == 1);
  CHECK(twice.terms()[0].coeff == 2);
  CHECK(normalize(cf(2, {{1, Q}, {-1, Q}})).empty());
  CHECK(normalize(cf(1, {{2, seg(0, 1)}, {3, seg(1, 2)}})).terms().size() == 2);
}

TEST_CASE("evaluate examples") {
  const auto f = cf(2, {{1, Q}, {-1, homothet(Q, Point{0, 0}, r(1, 2))}});
  CHECK(evaluate(f, Point{r(3, 4), r(3, 4)}) == 1);
  CHECK(evaluate(f, Point{r(1, 4), r(1, 4)}) == 0);
  CHECK(evaluate(f, Point{5, 5}) == 0);
}

TEST_CASE("euler_integral and oracle_integral examples") {
  CHECK(euler_integral(cf(2, {{2, Q}, {-3, Polytope::segment(Point{0, 0}, Point{1, 1})}})) == -1);
  CHECK(euler_integral(ConstructibleFunction(2)) == 0);
  CHECK(euler_integral(cf(2, {{1, Q}, {-1, homothet(Q, Point{0, 0}, r(1, 2))}})) == 0);
  CHECK(oracle_integral(ConstructibleFunction::indicator(Q)) == 1);
  CHECK(oracle_integral(cf(1, {{1, seg(0, 1)}, {1, seg(2, 3)}})) == 2);
  CHECK(oracle_integral(ConstructibleFunction(2)) == 0);
  CHECK_THROWS_AS(oracle_integral(ConstructibleFunction(3)), DimensionError);
}

TEST_CASE("equals examples") {
  const auto pieces = cf(1, {{1, seg(0, 1)}, {1, seg(1, 2)}, {-1, Polytope::point(Point{1})}});
  CHECK(equals(pieces, ConstructibleFunction::indicator(seg(0, 2))).verdict == Verdict::Equal);
  CHECK(equals(ConstructibleFunction::indicator(Q), ConstructibleFunction::indicator(Q)).verdict == Verdict::Equal);
  const EvalReport ne = equals(ConstructibleFunction::indicator(seg(0, 1)), ConstructibleFunction::indicator(seg(0, 2)));
  CHECK(ne.verdict == Verdict::NotEqual);
  REQUIRE(ne.witness);
  CHECK((*ne.witness)[0] > 1);
  CHECK((*ne.witness)[0] <= 2);
  CHECK(equals(pieces, ConstructibleFunction::indicator(seg(0, 2)), {EqualityMode::Sampled, 64}).verdict ==
        Verdict::ProbablyEqual);
  // Structurally equal after normalize is a proof, whatever the mode.
  CHECK(equals(ConstructibleFunction::indicator(Q), ConstructibleFunction::indicator(Q), {EqualityMode::Sampled, 64})
            .verdict == Verdict::Equal);
  CHECK_THROWS_AS(equals(cf(3, {{1, Polytope::point(Point{0, 0, 0})}}), ConstructibleFunction(3), {EqualityMode::Exact, 64}),
                  DimensionError);
}

TEST_CASE("sampled equality in three dimensions") {
  const Polytope cube = Polytope::from_vertices({Point{0, 0, 0}, Point{2, 0, 0}, Point{0, 2, 0}, Point{2, 2, 0},
                                                 Point{0, 0, 2}, Point{2, 0, 2}, Point{0, 2, 2}, Point{2, 2, 2}});
  const Polytope lower = Polytope::from_vertices({Point{0, 0, 0}, Point{2, 0, 0}, Point{0, 2, 0}, Point{2, 2, 0},
                                                  Point{0, 0, 1}, Point{2, 0, 1}, Point{0, 2, 1}, Point{2, 2, 1}});
  const Polytope upper = Polytope::from_vertices({Point{0, 0, 1}, Point{2, 0, 1}, Point{0, 2, 1}, Point{2, 2, 1},
                                                  Point{0, 0, 2}, Point{2, 0, 2}, Point{0, 2, 2}, Point{2, 2, 2}});
  const Polytope mid = Polytope::from_vertices({Point{0, 0, 1}, Point{2, 0, 1}, Point{0, 2, 1}, Point{2, 2, 1}});
  const auto split = cf(3, {{1, lower}, {1, upper}, {-1, mid}});
  CHECK(equals(split, ConstructibleFunction::indicator(cube)).verdict == Verdict::ProbablyEqual);
  const EvalReport missing = equals(cf(3, {{1, lower}, {1, upper}}), ConstructibleFunction::indicator(cube));
  CHECK(missing.verdict == Verdict::NotEqual);
  REQUIRE(missing.witness);
  CHECK((*missing.witness)[2] == 1);
}

TEST_CASE("pushforward and oracle examples") {
  CHECK(normalize(pushforward(ConstructibleFunction::indicator(Q), proj_x)) ==
        ConstructibleFunction::indicator(seg(0, 1)));
  gen::Rng rng(3);
  const auto phi = gen::random_cf(rng, 2, 5);
  CHECK(normalize(pushforward(phi, AffineMap::identity(2))) == normalize(phi));
  const auto g = cf(2, {{1, Q}, {-1, inner}});
  CHECK(equals(pushforward(g, proj_x), cf(1, {{1, seg(0, 1)}, {-1, seg(r(1, 4), r(3, 4))}})).verdict == Verdict::Equal);
  CHECK(oracle_pushforward_at(ConstructibleFunction::indicator(Q), proj_x, Point{r(1, 2)}) == 1);
  CHECK(oracle_pushforward_at(ConstructibleFunction::indicator(Q), proj_x, Point{2}) == 0);
  CHECK(oracle_pushforward_at(g, proj_x, Point{r(1, 2)}) == 0);
}

TEST_CASE("property: normalize preserves values") {
  gen::Rng rng(21);
  for (int k = 0; k < 60; ++k) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 3));
    ConstructibleFunction f = gen::random_cf(rng, dim, 5, 5, 2);
    // Repeat supports so that merging and cancellation happen.
    for (const auto& t : std::vector<Term>(f.terms())) if (rng.coin()) f.add_term(rng.uniform(-3, 3), t.support);
    const ConstructibleFunction n = normalize(f);
    for (int s = 0; s < 10000; ++s) {
      const Point x = gen::random_point(rng, dim, 3, 4);
      if (evaluate(n, x) != evaluate(f, x)) {
        CHECK(evaluate(n, x) == evaluate(f, x));
        break;
      }
    }
    for (const auto& t : f.terms())
      for (const auto& v : t.support.vertices()) CHECK(evaluate(n, v) == gen::evaluate_oracle(f, v));
  }
}

TEST_CASE("property: euler_integral is linear") {
  gen::Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = gen::random_cf(rng, dim, 6), g = gen::random_cf(rng, dim, 6);
    CHECK(euler_integral(f + g) == euler_integral(f) + euler_integral(g));
    CHECK(euler_integral(-f) == -euler_integral(f));
    CHECK(euler_integral(normalize(f)) == euler_integral(f));
  }
}

TEST_CASE("property: oracle integral and evaluation") {
  gen::Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto f = gen::random_cf(rng, dim, 6);
    CHECK(euler_integral(f) == oracle_integral(f));
    for (const auto& c : arrangement(supports(f), dim).cells)
      CHECK(evaluate(f, c.representative) == gen::evaluate_oracle(f, c.representative));
  }
}

TEST_CASE("property: equality decisions") {
  gen::Rng rng(24);
  for (int k = 0; k < 150; ++k) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto f = gen::random_cf(rng, dim, 4);
    // Split a term along a homothet: 1_P = 1_{P} + 1_{H} - 1_{H}.
    const Polytope h = homothet(f.terms()[0].support, gen::interior_point(rng, f.terms()[0].support), r(1, 2));
    const auto same = f + cf(dim, {{2, h}, {-2, h}});
    CHECK(equals(f, same).verdict == Verdict::Equal);
    const auto g = gen::random_cf(rng, dim, 4);
    const EvalReport rep = equals(f, g);
    bool differ = false;
    for (const auto& c : arrangement(supports(f + g), dim).cells)
      differ |= gen::evaluate_oracle(f, c.representative) != gen::evaluate_oracle(g, c.representative);
    CHECK((rep.verdict == Verdict::NotEqual) == differ);
    if (rep.witness) CHECK(evaluate(f, *rep.witness) != evaluate(g, *rep.witness));
    // Sampled mode never reports a false difference.
    CHECK(equals(f, same, {EqualityMode::Sampled, 16}).holds());
    if (rep.verdict == Verdict::NotEqual) CHECK(equals(f, g, {EqualityMode::Sampled, 16}).verdict == Verdict::NotEqual);
  }
}

TEST_CASE("property: pushforward functoriality and integral") {
  gen::Rng rng(25);
  for (int k = 0; k < 60; ++k) {
    const auto phi = gen::random_cf(rng, 2, 4);
    std::vector<std::vector<Rational>> a(2, std::vector<Rational>(2)), b(1, std::vector<Rational>(2));
    for (auto& row : a) for (auto& x : row) x = rng.grid(-2, 2, 2);
    for (auto& row : b) for (auto& x : row) x = rng.grid(-2, 2, 2);
    const AffineMap f(a, gen::random_point(rng, 2, 2)), g(b, gen::random_point(rng, 1, 2));
    CHECK(equals(pushforward(phi, compose(g, f)), pushforward(pushforward(phi, f), g)).verdict == Verdict::Equal);
    CHECK(euler_integral(pushforward(phi, f)) == euler_integral(phi));
    const auto img = pushforward(phi, f);
    for (const auto& c : arrangement(supports(img), 2).cells)
      CHECK(evaluate(img, c.representative) == oracle_pushforward_at(phi, f, c.representative));
  }
}
