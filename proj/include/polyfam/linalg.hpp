#pragma once

// Exact dense linear algebra over Q and lattice computations over Z.

#include <optional>
#include <vector>

#include "polyfam/rational.hpp"

namespace polyfam::linalg {

struct EchelonForm {
  Matrix rows;                     // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
std::size_t rank_fraction_free(const Matrix& m);
Rational determinant(Matrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<Point> solve_square(Matrix a, Point b);
/// Some solution of a (possibly rectangular) system, or nullopt when inconsistent.
std::optional<Point> solve_any(const Matrix& a, const Point& b);
/// Basis of {x : a x = 0}, one vector per free column.
Matrix nullspace(const Matrix& a, std::size_t cols);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_rank(const std::vector<Point>& points);

/// Basis of the lattice {x in Z^n : a x = 0}. Rows of `a` may be rational.
/// Computed by unimodular column reduction (column Hermite form).
IntMatrix integer_kernel(const Matrix& a, std::size_t cols);

/// Integer solutions of a x = b: x = origin + sum_k y_k basis[k].
struct IntegerAffineLattice {
  Point origin;     // integral
  IntMatrix basis;  // lattice basis of the homogeneous solutions
};
std::optional<IntegerAffineLattice> integer_affine_solve(const Matrix& a, const Point& b, std::size_t cols);

Matrix transpose(const Matrix& m);
Matrix to_matrix(const IntMatrix& m);

}  // namespace polyfam::linalg
