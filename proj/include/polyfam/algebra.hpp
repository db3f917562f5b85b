#pragma once

// Volume polynomials of families and fans, and the degree-one comparison of
// the anticanonical parameter with the all-ones support vector.

#include <cstdint>
#include <vector>

#include "polyfam/family.hpp"
#include "polyfam/fan.hpp"
#include "polyfam/polynomial.hpp"

namespace polyfam {

/// f(g) = vol(Delta(g)) on C, interpolated at generator combinations in C°
/// with weights in {1..n+1} (widened on each of up to 5 resamples).
HomogeneousPolynomial volume_polynomial(const LinearFamily& f);

/// Volume of polytope_of(fan, a) as a polynomial in the support numbers, on
/// the chamber of simple polytopes reached by a small seeded perturbation of
/// `near`. All rays must stay facets.
HomogeneousPolynomial fan_volume_polynomial(const Fan& fan, const Point& near, std::uint64_t seed = 0);

struct SupportEmbedding {
  Fan fan;
  /// s x d matrix: iota(g) = matrix * g gives the support numbers on the fan rays.
  Matrix matrix;
  Point apply(const Point& g) const;
};

/// Support numbers of Delta(g) on the rays of family_fan(f), by finite
/// differences at the deep point. Throws EmbeddingNotLinear if the linear
/// extension disagrees with direct evaluation.
SupportEmbedding support_embedding(const LinearFamily& f);

/// class_equal(f_Sigma, iota(kappa), (1,...,1)).
bool anticanonical_class_check(const LinearFamily& f, const Point& kappa);

/// h-vector of a simplicial complete fan; oracle for graded_dimensions.
std::vector<std::int64_t> h_vector_oracle(const Fan& fan);

/// Lattice vectors of translations mapped to support-number directions.
std::vector<Point> translation_classes(const Fan& fan);

}  // namespace polyfam
