#pragma once

// JSON encodings of the domain objects. Rationals travel as "p/q" strings;
// readers also accept plain integers.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "polyfam/algebra.hpp"
#include "polyfam/anticanonical.hpp"
#include "polyfam/family.hpp"
#include "polyfam/fan.hpp"
#include "polyfam/lattice.hpp"
#include "polyfam/polynomial.hpp"
#include "polyfam/polytope.hpp"

namespace polyfam::io {

using Json = nlohmann::ordered_json;

/// Malformed or incomplete input document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& q);
Json point_json(const Point& p);
Json int_vector_json(const IntVector& v);
Json int_matrix_json(const IntMatrix& m);

Rational read_rational(const Json& j);
Point read_point(const Json& j);
IntVector read_int_vector(const Json& j);
IntMatrix read_int_matrix(const Json& j);
/// Comma-separated rationals, as used on the command line.
Point parse_point_list(const std::string& text);

Json to_json(const Polytope& p);
/// Uses "vrep" when present and non-empty, otherwise "hrep".
Polytope polytope_from_json(const Json& j);

Json to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json to_json(const ParameterCone& c);
ParameterCone cone_from_json(const Json& j);

Json to_json(const LinearFamily& f);
LinearFamily family_from_json(const Json& j);

Json to_json(const HomogeneousPolynomial& f);
HomogeneousPolynomial polynomial_from_json(const Json& j);

Json to_json(const EhrhartQuasiPolynomial& e);
Json to_json(const Verdict& v);
Json to_json(const AnticanonicalVerdict& v);
Json to_json(const AnticanonicalSearch& s);
Json to_json(const RaySumResult& r);
Json to_json(const GradedAlgebraSummary& s);

/// Reports written by the CLI wrap objects under "result"; readers unwrap
/// them so a report can be fed back as input.
Json unwrap(const Json& j, const char* key);

Json read_file(const std::string& path);

}  // namespace polyfam::io
