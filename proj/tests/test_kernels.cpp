#include <doctest.h>

#include "eulercert/kernels.hpp"
#include "gen.hpp"

using namespace eulercert;

TEST_CASE("parallel kernels match their serial references") {
  gen::Rng rng(71);
  for (int k = 0; k < 30; ++k) {
    const auto f = gen::random_cf(rng, 2, 6);
    const auto pts = equality_samples(supports(f), 2, 16);
    CHECK(kernels::evaluate_many(f, pts) == kernels::evaluate_many_serial(f, pts));
    CHECK(kernels::first_nonzero(f, pts) == kernels::first_nonzero_serial(f, pts));
    const auto cx = arrangement(supports(f), 2);
    CHECK(kernels::weighted_cell_sum(f, cx) == kernels::weighted_cell_sum_serial(f, cx));
    CHECK(kernels::weighted_cell_sum(f, cx) == oracle_integral(f));
    const auto vals = kernels::evaluate_many(f, pts);
    for (std::size_t i = 0; i < pts.size(); i += 97) CHECK(vals[i] == gen::evaluate_oracle(f, pts[i]));
  }
  const ConstructibleFunction zero(2);
  const std::vector<Point> none;
  CHECK_FALSE(kernels::first_nonzero(zero, none));
}

TEST_CASE("sample set covers vertices") {
  gen::Rng rng(72);
  const auto f = gen::random_cf(rng, 3, 3);
  const auto pts = equality_samples(supports(f), 3, 8);
  for (const auto& t : f.terms())
    for (const auto& v : t.support.vertices()) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
  // Deterministic.
  CHECK(pts == equality_samples(supports(f), 3, 8));
}
