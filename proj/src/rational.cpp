#include "polyfam/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyfam {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational dot(const Point& lhs, const Point& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) s += lhs[i] * rhs[i];
  return s;
}

Rational dot(const IntVector& lhs, const Point& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != 0) s += Rational(static_cast<long>(lhs[i])) * rhs[i];
  }
  return s;
}

std::int64_t dot(const IntVector& lhs, const IntVector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("dot: size mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) s += lhs[i] * rhs[i];
  return s;
}

Point to_point(const IntVector& v) {
  Point p;
  p.reserve(v.size());
  for (auto x : v) p.emplace_back(static_cast<long>(x));
  return p;
}

Point add(const Point& lhs, const Point& rhs) {
  Point r(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) r[i] = lhs[i] + rhs[i];
  return r;
}

Point subtract(const Point& lhs, const Point& rhs) {
  Point r(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) r[i] = lhs[i] - rhs[i];
  return r;
}

Point scaled(const Point& v, const Rational& c) {
  Point r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

bool is_zero(const Point& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const Point& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw std::invalid_argument("not an integer: " + q.get_str());
  return to_int64(q.get_num());
}

IntVector to_int_vector(const Point& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(to_int64(x));
  return r;
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVector primitive(const IntVector& v) {
  auto g = gcd_of(v);
  if (g <= 1) return v;
  IntVector r(v);
  for (auto& x : r) x /= g;
  return r;
}

IntVector primitive_direction(const Point& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> nums;
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    nums.push_back(z);
  }
  IntVector r;
  for (auto& z : nums) r.push_back(g == 0 ? 0 : to_int64(Integer(z / g)));
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string format_point(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get_str();
  os << ')';
  return os.str();
}

std::string format_int_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace polyfam
