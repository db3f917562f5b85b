#include <random>

#include "doctest.h"
#include "polyfam/error.hpp"
#include "polyfam/lattice.hpp"
#include "support.hpp"

using namespace polyfam;
using namespace testing;

namespace {

Polytope p2_triangle() { return hull({pt({-1, -1}), pt({2, -1}), pt({-1, 2})}); }

IntVector lower_corner(const Polytope& p) {
  IntVector lo(p.ambient_dim());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    Rational m = p.vrep().front()[i];
    for (const auto& v : p.vrep()) m = std::min(m, v[i]);
    lo[i] = to_int64(floor_of(m));
  }
  return lo;
}

IntVector upper_corner(const Polytope& p) {
  IntVector hi(p.ambient_dim());
  for (std::size_t i = 0; i < hi.size(); ++i) {
    Rational m = p.vrep().front()[i];
    for (const auto& v : p.vrep()) m = std::max(m, v[i]);
    hi[i] = to_int64(ceil_of(m));
  }
  return hi;
}

std::int64_t oracle_count(const Polytope& p, bool strict) {
  if (p.is_empty()) return 0;
  return box_count(p.hrep(), lower_corner(p), upper_corner(p), strict);
}

// Interlacing system for a 3-row pattern, coordinates (x12, x22, x11).
std::vector<HalfSpace> gz3_system(long l1, long l2, long l3) {
  return {hs({1, 0, 0}, q(-l1)),  hs({-1, 0, 0}, q(l2)), hs({0, 1, 0}, q(-l2)),
          hs({0, -1, 0}, q(l3)),  hs({-1, 0, 1}, q(0)),  hs({0, 1, -1}, q(0))};
}

}  // namespace

TEST_SUITE("lattice-points") {
  TEST_CASE("counts") {
    CHECK(count(hull({pt({0}), pt({3})})) == 4);
    CHECK(count(p2_triangle()) == 10);
    CHECK(oracle_count(p2_triangle(), false) == 10);
    CHECK(count(Polytope::empty_set(3)) == 0);
    CHECK(count(hull({pt({0, 0})})) == 1);
    CHECK(count(hull({Point{q(1, 2), q(0)}})) == 0);
  }

  TEST_CASE("interior counts") {
    CHECK(count_interior(p2_triangle()) == 1);
    CHECK(count_interior(hull({pt({0}), pt({1})})) == 0);
    auto gz = vertices(3, gz3_system(0, 2, 4));
    CHECK(count_interior(gz) == 1);
    CHECK(contains(gz, pt({1, 3, 2}), Membership::RelativeInterior));
    CHECK(count_interior(gz) == oracle_count(gz, true));
    CHECK(count_solutions(3, gz3_system(0, 2, 4), true) == 1);
  }

  TEST_CASE("lower-dimensional polytopes count along their affine span") {
    auto diagonal = hull({pt({0, 0, 0}), pt({4, 2, 6})});
    CHECK(count(diagonal) == 3);
    CHECK(count_interior(diagonal) == 1);
    auto off_lattice = hull({Point{q(1, 2), q(0)}, Point{q(1, 2), q(5)}});
    CHECK(count(off_lattice) == 0);
    auto edge = hull({pt({2, -1}), pt({-1, 2})});
    CHECK(count(edge) == 4);
    CHECK(count_interior(edge) == 2);
    auto tilted = hull({pt({0, 0, 0}), pt({3, -3, 0}), pt({0, 3, -3})});
    CHECK(count(tilted) == box_count(tilted.hrep(), {0, -3, -3}, {3, 3, 0}, false));
  }

  TEST_CASE("unbounded systems are rejected by count_solutions") {
    CHECK_THROWS_AS(count_solutions(2, {hs({1, 0}, q(0)), hs({-1, 0}, q(2))}, false), Error);
    CHECK(count_solutions(2, {hs({1, 0}, q(-3)), hs({-1, 0}, q(2)), hs({0, 1}, q(0))}, false) == 0);
  }

  TEST_CASE("Ehrhart polynomials") {
    auto square = box(2, 0, 1);
    auto sq = ehrhart(square, 1);
    CHECK(sq.constituents.size() == 1);
    CHECK(sq.constituents[0] == Point{q(1), q(2), q(1)});

    auto seg = ehrhart(hull({pt({0}), pt({3})}), 1);
    CHECK(seg.constituents[0] == Point{q(1), q(3)});

    auto half = ehrhart(hull({Point{q(0)}, Point{q(1, 2)}}), 2);
    REQUIRE(half.constituents.size() == 2);
    CHECK(half.constituents[0] == Point{q(1), q(1, 2)});
    CHECK(half.constituents[1] == Point{q(1, 2), q(1, 2)});
    const std::int64_t expected[] = {1, 1, 2, 2, 3, 3};
    for (std::int64_t m = 0; m < 6; ++m) CHECK(half.evaluate(m) == expected[m]);
  }

  TEST_CASE("a wrong period is caught by the holdout") {
    // [0,1/3] with period 1 is rejected outright; [0,2/3] with period 3 fits.
    CHECK_THROWS_AS(ehrhart(hull({Point{q(0)}, Point{q(1, 3)}}), 1), Error);
    auto ok = ehrhart(hull({Point{q(0)}, Point{q(2, 3)}}), 3);
    for (std::int64_t m = 0; m < 12; ++m) CHECK(ok.evaluate(m) == (2 * m) / 3 + 1);
  }

  TEST_CASE("reciprocity examples") {
    CHECK(check_reciprocity(box(2, 0, 1), 3));
    CHECK(check_reciprocity(p2_triangle(), 3));
    CHECK_THROWS_AS(check_reciprocity(hull({pt({0, 0}), pt({1, 0})}), 2), Error);
  }

  TEST_CASE("property: counts agree with box enumeration on a fuzz corpus") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
      auto p = random_lattice_polytope(rng, 1 + trial % 3, 3);
      const auto n = count(p);
      const auto ni = count_interior(p);
      CHECK(n == oracle_count(p, false));
      CHECK(ni == oracle_count(p, true));
      CHECK(ni <= n);
      IntVector shift(p.ambient_dim());
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<std::int64_t>(i) * 5 - 7;
      CHECK(count(translate(p, to_point(shift))) == n);
    }
  }

  TEST_CASE("property: reciprocity on 50 random lattice polytopes in dims 1-3") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      auto p = random_lattice_polytope(rng, 1 + trial % 3, 2);
      CHECK(check_reciprocity(p, 3));
      auto poly = ehrhart(p, 1);
      // Leading coefficient is the volume; dilation error is bounded by the
      // lower coefficients.
      CHECK(poly.constituents[0].back() == volume(p));
      Rational bound = 0;
      for (std::size_t i = 0; i + 1 < poly.constituents[0].size(); ++i) bound += abs(poly.constituents[0][i]);
      for (std::int64_t m = 1; m <= 4; ++m) {
        Rational mn = 1;
        for (std::size_t i = 0; i < p.ambient_dim(); ++i) mn *= m;
        Rational err = abs(Rational(count(scale(p, Rational(m)))) / mn - volume(p));
        CHECK(err <= bound / m);
      }
    }
  }

  TEST_CASE("parallel counting matches the serial count") {
    auto big = box(3, -6, 6);
    set_counting_jobs(3);
    const auto parallel = count(big);
    set_counting_jobs(1);
    CHECK(parallel == 13 * 13 * 13);
    CHECK(count(big) == parallel);
  }
}
