#pragma once

// Data-parallel evaluation kernels. Each OpenMP kernel has a serial
// reference with identical results, kept for tests and benchmarks.

#include <optional>
#include <span>
#include <vector>

#include "eulercert/constructible.hpp"

namespace eulercert::kernels {

std::vector<Coefficient> evaluate_many(const ConstructibleFunction& f, std::span<const Point> points);
std::vector<Coefficient> evaluate_many_serial(const ConstructibleFunction& f, std::span<const Point> points);

// Index of the first point where f is nonzero.
std::optional<std::size_t> first_nonzero(const ConstructibleFunction& f, std::span<const Point> points);
std::optional<std::size_t> first_nonzero_serial(const ConstructibleFunction& f, std::span<const Point> points);

// sum_c f(rep c) * weight(c) over bounded cells, weight (-1)^dim.
Coefficient weighted_cell_sum(const ConstructibleFunction& f, const CellComplex& cx);
Coefficient weighted_cell_sum_serial(const ConstructibleFunction& f, const CellComplex& cx);

}  // namespace eulercert::kernels
