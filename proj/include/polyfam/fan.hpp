#pragma once

// Rational fans, normal fans and virtual polytopes as support-number vectors.

#include <cstdint>
#include <vector>

#include "polyfam/polytope.hpp"

namespace polyfam {

struct Fan {
  std::size_t ambient_dim = 0;
  IntMatrix rays;                                // primitive, distinct
  std::vector<std::vector<std::size_t>> max_cones;  // ascending ray indices

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct FanProperties {
  bool complete = false;
  bool simplicial = false;
  bool smooth = false;
  /// False when completeness rests on random coverage samples (dims >= 4).
  bool complete_certain = true;
};

/// Throws InvalidArgument unless rays are primitive and distinct, cones are
/// strictly convex and no two maximal cones share interior points.
void validate(const Fan& fan);

Fan normal_fan(const Polytope& p);
bool is_normal_to(const Polytope& p, const Fan& fan);
/// a_i = -min <v_i, x> over P, so that polytope_of(fan, a) == P.
Point support_numbers(const Polytope& p, const Fan& fan);
/// {x : <v_i, x> >= -a_i}.
Polytope polytope_of(const Fan& fan, const Point& a);

FanProperties fan_properties(const Fan& fan, std::uint64_t seed = 0);

/// Number of cones with k rays for k = 0..n in a simplicial fan.
std::vector<std::int64_t> f_vector(const Fan& fan);
/// h_k = sum_{i<=k} (-1)^{k-i} C(n-i, k-i) f_i.
std::vector<std::int64_t> h_vector(const Fan& fan);

/// True iff a lies in the region where polytope_of(fan, a) is normal to the
/// fan and reproduces a as its support numbers.
bool in_normality_region(const Fan& fan, const Point& a);

struct VirtualPolytope {
  Fan fan;
  Point support_numbers;
};

VirtualPolytope make_virtual(const Fan& fan, const Point& support_numbers);
VirtualPolytope virtual_add(const VirtualPolytope& u, const VirtualPolytope& w);
VirtualPolytope virtual_subtract(const VirtualPolytope& u, const VirtualPolytope& w);
VirtualPolytope virtual_scale(const VirtualPolytope& u, const Rational& c);

struct Realization {
  Polytope positive;
  Polytope negative;
  std::int64_t shift = 0;
};

/// u = supp(positive) - supp(negative) with negative = polytope_of(fan, M(1,...,1))
/// for the least M >= 0 putting both vectors in the normality region.
Realization realize(const VirtualPolytope& u, std::int64_t max_shift = 1000);

}  // namespace polyfam
