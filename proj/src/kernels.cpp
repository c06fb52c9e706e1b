#include "eulercert/kernels.hpp"

#include <limits>

namespace eulercert::kernels {

std::vector<Coefficient> evaluate_many(const ConstructibleFunction& f, std::span<const Point> points) {
  std::vector<Coefficient> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = evaluate(f, points[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Coefficient> evaluate_many_serial(const ConstructibleFunction& f, std::span<const Point> points) {
  std::vector<Coefficient> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(evaluate(f, p));
  return out;
}

std::optional<std::size_t> first_nonzero(const ConstructibleFunction& f, std::span<const Point> points) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::ptrdiff_t best = n;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (i < best && evaluate(f, points[static_cast<std::size_t>(i)]) != 0) best = i;
  }
  if (best == n) return std::nullopt;
  return static_cast<std::size_t>(best);
}

std::optional<std::size_t> first_nonzero_serial(const ConstructibleFunction& f, std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (evaluate(f, points[i]) != 0) return i;
  return std::nullopt;
}

Coefficient weighted_cell_sum(const ConstructibleFunction& f, const CellComplex& cx) {
  const auto n = static_cast<std::ptrdiff_t>(cx.cells.size());
  Coefficient total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Cell& c = cx.cells[static_cast<std::size_t>(i)];
    if (!c.bounded) continue;
    const Coefficient v = evaluate(f, c.representative);
    total += (c.dimension % 2 == 0) ? v : -v;
  }
  return total;
}

Coefficient weighted_cell_sum_serial(const ConstructibleFunction& f, const CellComplex& cx) {
  Coefficient total = 0;
  for (const auto& c : cx.cells) {
    if (!c.bounded) continue;
    const Coefficient v = evaluate(f, c.representative);
    total += (c.dimension % 2 == 0) ? v : -v;
  }
  return total;
}

}  // namespace eulercert::kernels
