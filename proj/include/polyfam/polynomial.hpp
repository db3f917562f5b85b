#pragma once

// Homogeneous polynomials with exact rational coefficients and the graded
// algebra D / Ann(f) they define.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "polyfam/rational.hpp"

namespace polyfam {

using Exponent = std::vector<int>;

class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial() = default;
  HomogeneousPolynomial(std::size_t num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  /// Nonzero terms, ordered by exponent.
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const;
  /// Adds c to the coefficient of x^e; throws unless |e| equals the degree.
  void add_term(const Exponent& e, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  Rational evaluate(const Point& x) const;
  /// Partial derivative d/dx_i.
  HomogeneousPolynomial partial(std::size_t i) const;

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  int degree_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// All exponents of total degree k in d variables, lexicographically descending.
std::vector<Exponent> monomials(std::size_t d, int k);
Rational monomial_value(const Exponent& e, const Point& x);

/// L_v f = sum_i v_i df/dx_i.
HomogeneousPolynomial directional_derivative(const HomogeneousPolynomial& f, const Point& v);

struct GradedAlgebraSummary {
  std::vector<std::int64_t> dims;
  bool duality_ok = false;
};

/// dim A_k as the rank of the degree-k catalecticant matrix of f.
GradedAlgebraSummary graded_dimensions(const HomogeneousPolynomial& f);

/// True iff L_{v-w} f = 0.
bool class_equal(const HomogeneousPolynomial& f, const Point& v, const Point& w);

/// Fits the homogeneous degree-n polynomial through exact values. Candidates
/// are drawn from `next_candidate` (nullopt when exhausted) and kept greedily
/// while they raise the rank of the monomial evaluation matrix; three further
/// candidates serve as holdouts. Throws SingularInterpolation when candidates
/// run out and HoldoutMismatch when a holdout disagrees.
HomogeneousPolynomial interpolate_homogeneous(std::size_t num_vars, int degree,
                                              const std::function<std::optional<Point>()>& next_candidate,
                                              const std::function<Rational(const Point&)>& value);

}  // namespace polyfam
