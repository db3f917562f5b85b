#pragma once

// Exact scalar and vector types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyfam {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense rational vector (a point, a parameter, a support-number vector).
using Point = std::vector<Rational>;
/// Small integer vector: normals, rays, exponents, lattice points.
using IntVector = std::vector<std::int64_t>;
/// Row-major dense rational matrix.
using Matrix = std::vector<Point>;
using IntMatrix = std::vector<IntVector>;

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
/// Formats as "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& value);

Rational dot(const Point& lhs, const Point& rhs);
Rational dot(const IntVector& lhs, const Point& rhs);
std::int64_t dot(const IntVector& lhs, const IntVector& rhs);

Point to_point(const IntVector& v);
Point add(const Point& lhs, const Point& rhs);
Point subtract(const Point& lhs, const Point& rhs);
Point scaled(const Point& v, const Rational& c);

bool is_zero(const Point& v);
bool is_zero(const IntVector& v);
bool is_integral(const Point& v);

/// Converts an integral point; throws std::invalid_argument otherwise.
IntVector to_int_vector(const Point& v);
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& q);

std::int64_t gcd_of(const IntVector& v);
/// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Smallest positive multiple of a rational vector that is integral and primitive.
IntVector primitive_direction(const Point& v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string format_point(const Point& p);
std::string format_int_vector(const IntVector& v);

}  // namespace polyfam
