#pragma once

#include <optional>
#include <span>
#include <vector>

#include "satake/lattice.hpp"
#include "satake/rational.hpp"

namespace satake::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

/// Exact simplex (Bland's rule): minimize cost·x subject to A x = b, x >= 0.
/// Returns an optimal vertex, or nullopt when infeasible. An empty cost vector
/// means pure feasibility. Throws std::logic_error if the objective is unbounded.
std::optional<Vec> solve_lp(const Mat& a, const Vec& b, const Vec& cost);

/// Is v a nonnegative rational combination of the generators?
bool in_cone(const LatticeVector& v, std::span<const LatticeVector> generators);

std::size_t rank(std::span<const LatticeVector> vectors);

/// Is v in the Q-span of the vectors?
bool in_span(const LatticeVector& v, std::span<const LatticeVector> vectors);

/// Basis of {x : <row, x> = 0 for every row} over Q, each scaled to a
/// primitive integer vector. `dim` is the ambient dimension.
std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t dim);

/// Coordinates of v in the basis (must be linearly independent); nullopt when v
/// is outside their span.
std::optional<Vec> coordinates(const LatticeVector& v, std::span<const LatticeVector> basis);

}  // namespace satake::linalg
