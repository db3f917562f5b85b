#pragma once

// Helpers and independent oracles shared by the unit suites. Nothing here
// calls into the code paths it is used to check.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "polyfam/polytope.hpp"

namespace testing {

using polyfam::HalfSpace;
using polyfam::IntVector;
using polyfam::Point;
using polyfam::Polytope;
using polyfam::Rational;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Point pt(std::initializer_list<long> xs) {
  Point p;
  for (auto x : xs) p.emplace_back(x);
  return p;
}

inline HalfSpace hs(IntVector normal, Rational offset) { return HalfSpace{std::move(normal), std::move(offset)}; }

inline Polytope hull(std::initializer_list<Point> pts) { return polyfam::halfspaces(std::vector<Point>(pts)); }

inline Polytope box(std::size_t n, long lo, long hi) {
  std::vector<HalfSpace> h;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0), me(n, 0);
    e[i] = 1;
    me[i] = -1;
    h.push_back(hs(e, q(-lo)));
    h.push_back(hs(me, q(hi)));
  }
  return polyfam::vertices(n, h);
}

/// Lattice points of a half-space system by plain box enumeration.
inline std::int64_t box_count(const std::vector<HalfSpace>& h, const IntVector& lo, const IntVector& hi, bool strict) {
  const std::size_t n = lo.size();
  IntVector x(lo);
  std::int64_t count = 0;
  while (true) {
    Point p = polyfam::to_point(x);
    bool ok = true;
    for (const auto& s : h) {
      Rational v = polyfam::dot(s.normal, p) + s.offset;
      if (v < 0 || (strict && v == 0)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return count;
}

/// Random lattice polytope of full dimension `dim` from points in [-r, r]^dim.
inline Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t dim, long r) {
  std::uniform_int_distribution<long> coord(-r, r);
  std::uniform_int_distribution<int> extra(0, 4);
  while (true) {
    std::vector<Point> pts;
    const int count = static_cast<int>(dim) + 1 + extra(rng);
    for (int i = 0; i < count; ++i) {
      Point p;
      for (std::size_t c = 0; c < dim; ++c) p.emplace_back(coord(rng));
      pts.push_back(std::move(p));
    }
    auto poly = polyfam::halfspaces(pts);
    if (poly.is_full_dimensional()) return poly;
  }
}

/// Brute-force Gelfand-Zetlin pattern count with top row `top` (increasing
/// convention: a row entry lies between the two entries above it).
inline std::int64_t gz_pattern_count(const IntVector& top, bool strict) {
  if (top.size() <= 1) return 1;
  const std::size_t k = top.size() - 1;
  std::int64_t total = 0;
  IntVector row(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      total += gz_pattern_count(row, strict);
      return;
    }
    const auto lo = top[i] + (strict ? 1 : 0);
    const auto hi = top[i + 1] - (strict ? 1 : 0);
    for (auto v = lo; v <= hi; ++v) {
      row[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace testing
