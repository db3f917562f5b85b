#pragma once

// Exact rational convex polytopes with synchronized H- and V-representations.
//
// A half-space {x : <normal, x> >= -offset} always carries a primitive integer
// normal. Polytopes are canonical: vertices are sorted lexicographically and
// the irredundant H-representation (facets plus equality pairs for the affine
// span) is sorted by (normal, offset), so equality is structural.

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "polyfam/rational.hpp"

namespace polyfam {

struct HalfSpace {
  IntVector normal;
  Rational offset;

  bool contains(const Point& x) const { return dot(normal, x) >= -offset; }
  bool on_boundary(const Point& x) const { return dot(normal, x) == -offset; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

bool operator<(const HalfSpace& lhs, const HalfSpace& rhs);

enum class Membership { BoundaryInclusive, RelativeInterior };

class Polytope {
 public:
  struct Facet {
    HalfSpace halfspace;
    std::vector<std::size_t> vertex_ids;  // indices into vrep(), ascending
  };

  /// The empty polytope in R^n.
  static Polytope empty_set(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Affine dimension; -1 for the empty polytope.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }

  const std::vector<Point>& vrep() const { return vertices_; }
  /// Facets sorted by half-space, each with its incident vertices.
  const std::vector<Facet>& facet_list() const { return facets_; }
  /// Opposite half-space pairs cutting out the affine span.
  const std::vector<HalfSpace>& equalities() const { return equalities_; }
  const std::vector<HalfSpace>& hrep() const { return hrep_; }

  friend bool operator==(const Polytope& lhs, const Polytope& rhs) {
    return lhs.ambient_dim_ == rhs.ambient_dim_ && lhs.vertices_ == rhs.vertices_ && lhs.hrep_ == rhs.hrep_;
  }

 private:
  friend Polytope make_canonical(std::size_t, std::vector<Point>, const std::vector<std::vector<std::size_t>>&);
  friend Polytope scale(const Polytope&, const Rational&);
  friend Polytope translate(const Polytope&, const Point&);

  void rebuild_hrep();

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<HalfSpace> equalities_;
  std::vector<HalfSpace> hrep_;
};

/// Canonical polytope from its extreme points (sorted, unique) and a list of
/// vertex-index sets, each the tight set of some valid inequality; those of
/// affine rank dim-1 become facets.
Polytope make_canonical(std::size_t ambient_dim, std::vector<Point> vertices,
                        const std::vector<std::vector<std::size_t>>& tight_sets);

/// Solution set of the half-spaces; throws UnboundedRegion on any recession direction.
Polytope vertices(std::size_t ambient_dim, const std::vector<HalfSpace>& hrep);
/// Convex hull of a nonempty point list.
Polytope halfspaces(const std::vector<Point>& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
/// Exact test of r == p + q without building the hull of the vertex sums.
bool equals_minkowski_sum(const Polytope& r, const Polytope& p, const Polytope& q);

/// min { <x, xi> : x in P }.
Rational support_value(const Polytope& p, const IntVector& xi);
Rational support_value(const Polytope& p, const Point& xi);

Polytope scale(const Polytope& p, const Rational& c);
Polytope translate(const Polytope& p, const Point& t);
bool contains(const Polytope& p, const Point& x, Membership mode = Membership::BoundaryInclusive);

/// Euclidean volume (unit cube = 1); zero unless full-dimensional.
Rational volume(const Polytope& p);

/// One entry per facet: (primitive inward normal, facet polytope).
std::vector<std::pair<IntVector, Polytope>> facets(const Polytope& p);

/// (n-1)-volume of a facet in unimodular coordinates of the hyperplane lattice.
Rational facet_lattice_volume(const Polytope& facet, const IntVector& normal);

}  // namespace polyfam
