#pragma once

// Exact feasibility linear programming over Q (phase-one simplex, Bland's rule).

#include <optional>

#include "polyfam/rational.hpp"

namespace polyfam::lp {

/// A point of {y : a y = b, y >= 0}, or nullopt if the set is empty.
std::optional<Point> feasible_nonnegative(const Matrix& a, const Point& b);

/// A point of {x : a x >= b} with x free, or nullopt if the set is empty.
std::optional<Point> feasible_inequalities(const Matrix& a, const Point& b);

/// True iff {x : <n_i, x> >= 0 for all i} = {0}, i.e. every polyhedron with
/// these normals is bounded. Uses Stiemke's alternative: rank n and a strictly
/// positive dependency among the normals.
bool recession_cone_trivial(const IntMatrix& normals, std::size_t dim);

}  // namespace polyfam::lp
