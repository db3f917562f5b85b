#pragma once

// Linear families of polytopes: a parameter cone C with lattice Gamma and a
// parametric H-representation Delta(g) = {x : <w_j, x> >= (L g)_j}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyfam/fan.hpp"
#include "polyfam/polytope.hpp"
#include "polyfam/verdict.hpp"

namespace polyfam {

class ParameterCone {
 public:
  ParameterCone() = default;
  /// Cone {g : <h, g> >= 0 for h in rows}. Throws InvalidArgument unless it
  /// is full-dimensional. `lattice` defaults to Z^d.
  static ParameterCone from_inequalities(std::size_t dim, const IntMatrix& rows, IntMatrix lattice = {});
  /// Cone spanned by the given vectors (must be full-dimensional).
  static ParameterCone from_generators(std::size_t dim, const std::vector<Point>& generators, IntMatrix lattice = {});

  std::size_t dim() const { return dim_; }
  /// Irredundant facet inequalities, sorted.
  const IntMatrix& hrep() const { return hrep_; }
  /// Integer basis of the lineality space.
  const IntMatrix& lineality() const { return lineality_; }
  /// Extreme rays of the pointed part (orthogonal to the lineality space).
  const IntMatrix& rays() const { return rays_; }
  /// Lattice basis (rows).
  const IntMatrix& lattice() const { return lattice_; }

  /// +-lineality basis followed by the pointed rays.
  IntMatrix generators() const;
  /// Sum of the generators; an interior point.
  IntVector deep_point() const;

  bool contains(const Point& g) const;
  bool contains_interior(const Point& g) const;
  bool in_lattice(const Point& g) const;

  friend bool operator==(const ParameterCone&, const ParameterCone&) = default;

 private:
  std::size_t dim_ = 0;
  IntMatrix hrep_;
  IntMatrix lineality_;
  IntMatrix rays_;
  IntMatrix lattice_;
};

struct LinearFamily {
  std::string kind = "custom";
  ParameterCone cone;
  std::size_t ambient_dim = 0;
  IntMatrix normals;
  Matrix offset_map;  // one row per normal, cone.dim() columns
  /// Human-readable coordinate names (optional, used in reports).
  std::vector<std::string> coordinate_names;

  std::size_t param_dim() const { return cone.dim(); }
  std::vector<HalfSpace> halfspaces(const Point& g) const;
  /// Instantiates Delta(g); throws OutsideCone unless g lies in C.
  Polytope evaluate(const Point& g) const;
  /// Instantiates without the cone check (may be empty).
  Polytope evaluate_unchecked(const Point& g) const;
};

/// Throws InvalidArgument on inconsistent shapes or non-primitive normals.
void validate(const LinearFamily& f);

/// Samples pairs from C and checks Delta(c1 g1 + c2 g2) = c1 Delta(g1) + c2 Delta(g2)
/// exactly, plus constancy of facet normals on interior samples.
Verdict verify_linearity(const LinearFamily& f, std::int64_t budget, std::uint64_t seed = 0);

/// Normal fan of Delta(g*) with g* the deep point of C. Throws
/// LinearityNotCertified if verify_linearity refutes the family.
Fan family_fan(const LinearFamily& f, std::int64_t budget = 20);

LinearFamily toric_family(const Fan& fan);

/// Gelfand-Zetlin family of GL(n), increasing convention. Coordinates are
/// x_{i,k} (entry i of row k), rows k = n-1 down to 1.
LinearFamily gz_family(std::size_t n);
/// Interlacing half-spaces for a fixed top row, without a cone check.
std::vector<HalfSpace> gz_halfspaces(const IntVector& lambda);

struct StrictShiftResult {
  bool equal = false;
  std::int64_t strict_count = 0;
  std::int64_t shifted_count = 0;
  IntVector shifted_lambda;
};

/// Integer solutions with every interlacing inequality strict versus the
/// non-strict count for the top row shifted by (n-1, n-3, ..., -(n-1)).
StrictShiftResult gz_strict_shift_check(const IntVector& lambda);

/// Family over a Weyl-invariant toric base in lambda-space with GZ fibers.
/// Parameters are one support number per Weyl orbit of base rays.
LinearFamily fibered_family(const LinearFamily& base, std::size_t multiplicity = 1);
/// Orbits of the base normals under coordinate permutations, as index lists.
std::vector<std::vector<std::size_t>> weyl_orbits(const IntMatrix& normals);

struct Chamber {
  ParameterCone cone;
  LinearFamily family;
};

struct ChamberedFamily {
  std::vector<Chamber> chambers;
  /// The fiber family over the whole image cone, ignoring chambers.
  LinearFamily naive;
  /// z = right_inverse * g + sum_k y_k fiber_basis[k].
  Matrix right_inverse;
  IntMatrix fiber_basis;
};

/// Fibers of a projection restricted to a cone, organized by chambers.
ChamberedFamily projected_family(const ParameterCone& source, const Matrix& projection);

}  // namespace polyfam
