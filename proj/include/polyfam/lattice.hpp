#pragma once

// Lattice-point counting and Ehrhart quasi-polynomials.

#include <cstdint>
#include <vector>

#include "polyfam/polytope.hpp"

namespace polyfam {

struct EhrhartQuasiPolynomial {
  std::int64_t period = 1;
  int degree = 0;
  /// constituents[r][i] is the coefficient of m^i for m = r mod period.
  std::vector<Point> constituents;

  Rational evaluate(std::int64_t m) const;
};

/// Number of integer points of P.
std::int64_t count(const Polytope& p);
/// Number of integer points in the relative interior of P.
std::int64_t count_interior(const Polytope& p);

/// Integer points of a bounded half-space system, with every inequality
/// strict when `strict` is set. Throws UnboundedRegion if the real solution
/// set is nonempty and unbounded.
std::int64_t count_solutions(std::size_t ambient_dim, const std::vector<HalfSpace>& hrep, bool strict);

/// Fits L(m) = count(mP) constituent by constituent; throws HoldoutMismatch
/// when a constituent fails its extra dilation.
EhrhartQuasiPolynomial ehrhart(const Polytope& p, std::int64_t period);

/// L_P(-m) == (-1)^dim count_interior(mP) for 1 <= m <= m_max.
bool check_reciprocity(const Polytope& p, std::int64_t m_max);

/// Worker threads used by counting (default 1).
void set_counting_jobs(unsigned jobs);
unsigned counting_jobs();

}  // namespace polyfam
