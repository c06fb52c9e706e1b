// Parallel vs serial timing of the evaluation kernels and of verify.
#include <chrono>
#include <cstdio>
#include <random>

#include "eulercert/certify.hpp"
#include "eulercert/kernels.hpp"

using namespace eulercert;

namespace {

template <class F>
double seconds(F&& body, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

ConstructibleFunction random_cf(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> coord(-8, 8), coeff(-3, 3), nv(1, 6);
  ConstructibleFunction f(2);
  for (int t = 0; t < terms; ++t) {
    std::vector<Point> pts;
    for (int k = nv(rng); k > 0; --k) pts.push_back(Point{Rational(coord(rng)), Rational(coord(rng))});
    f.add_term(coeff(rng), Polytope::from_vertices(pts));
  }
  return f;
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  const ConstructibleFunction f = random_cf(rng, 12);
  const std::vector<Point> pts = equality_samples(supports(f), 2, 256);
  const CellComplex cx = arrangement(supports(f), 2);

  std::printf("kernel               points/cells  serial_s     parallel_s\n");
  std::printf("evaluate_many        %-12zu  %.6f     %.6f\n", pts.size(),
              seconds([&] { kernels::evaluate_many_serial(f, pts); }, 5),
              seconds([&] { kernels::evaluate_many(f, pts); }, 5));
  std::printf("weighted_cell_sum    %-12zu  %.6f     %.6f\n", cx.cells.size(),
              seconds([&] { kernels::weighted_cell_sum_serial(f, cx); }, 5),
              seconds([&] { kernels::weighted_cell_sum(f, cx); }, 5));

  ConstructibleFunction g(2);
  g.add_term(euler_integral(f), Polytope::point(Point{Rational(1), Rational(1)}));
  const Settings s{};
  const Certificate c = link(f, g, Rational(1, 16), s);
  std::printf("verify (%zu steps)    %-12s  %.6f     %.6f\n", c.steps.size(), "-",
              seconds([&] { verify_serial(c, s); }, 1), seconds([&] { verify(c, s); }, 1));
  return 0;
}
