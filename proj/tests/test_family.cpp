#include <random>
#include <set>

#include "doctest.h"
#include "polyfam/error.hpp"
#include "polyfam/family.hpp"
#include "polyfam/golden.hpp"
#include "polyfam/lattice.hpp"
#include "support.hpp"

using namespace polyfam;
using namespace testing;

namespace {

Point qv(std::initializer_list<long> xs) { return pt(xs); }

// Brute-force triples lambda1 <= x <= lambda2 inside [lo, hi].
std::int64_t box_fiber_count(long lo, long hi) {
  std::int64_t n = 0;
  for (long a = lo; a <= hi; ++a)
    for (long x = a; x <= hi; ++x)
      for (long b = x; b <= hi; ++b) ++n;
  return n;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("parameter cones") {
    auto c = ParameterCone::from_inequalities(2, {{1, 0}, {0, 1}, {2, 2}});
    CHECK(c.hrep() == IntMatrix{{0, 1}, {1, 0}});
    CHECK(c.rays() == IntMatrix{{0, 1}, {1, 0}});
    CHECK(c.lineality().empty());
    CHECK(c.contains_interior(qv({1, 1})));
    CHECK_FALSE(c.contains_interior(qv({0, 1})));
    CHECK_THROWS_AS(ParameterCone::from_inequalities(2, {{1, 0}, {-1, 0}}), Error);
    auto g = ParameterCone::from_generators(2, {qv({1, 0}), qv({1, 1})});
    CHECK(g.hrep() == IntMatrix{{0, 1}, {1, -1}});
    auto half = ParameterCone::from_inequalities(2, {{1, 1}});
    CHECK(half.lineality().size() == 1);
    CHECK(half.rays() == IntMatrix{{1, 1}});
    auto even = ParameterCone::from_inequalities(1, {{1}}, {{2}});
    CHECK(even.in_lattice(qv({4})));
    CHECK_FALSE(even.in_lattice(qv({3})));
  }

  TEST_CASE("evaluation") {
    auto p2 = golden::family_named("toric-p2");
    CHECK(p2.evaluate(qv({1, 1, 1})) == hull({pt({-1, -1}), pt({2, -1}), pt({-1, 2})}));
    auto gz2 = gz_family(2);
    auto seg = gz2.evaluate(qv({0, 3}));
    CHECK(seg == hull({pt({0}), pt({3})}));
    CHECK(count(seg) == 4);
    for (const auto& name : golden::family_names()) {
      auto f = golden::family_named(name);
      CHECK(f.evaluate(Point(f.param_dim(), Rational(0))) == hull({Point(f.ambient_dim, Rational(0))}));
    }
    CHECK_THROWS_AS(gz2.evaluate(qv({3, 0})), Error);
  }

  TEST_CASE("toric nef cones") {
    auto p2 = toric_family(golden::projective_plane());
    CHECK(p2.cone.hrep() == IntMatrix{{1, 1, 1}});
    CHECK(p2.cone.contains_interior(qv({1, 1, 1})));
    CHECK(toric_family(golden::product_of_lines()).cone.hrep() == IntMatrix{{0, 1, 0, 1}, {1, 0, 1, 0}});
    CHECK(toric_family(golden::line()).cone.hrep() == IntMatrix{{1, 1}});
    auto f2 = toric_family(golden::hirzebruch(2));
    CHECK(f2.cone.contains(qv({1, 1, 1, 1})));
    CHECK_FALSE(f2.cone.contains_interior(qv({1, 1, 1, 1})));
    CHECK_THROWS_AS(toric_family(Fan{2, {{1, 0}}, {{0}}}), Error);
  }

  TEST_CASE("nef cone oracle: interior parameters give polytopes with every ray as a facet") {
    auto f1 = toric_family(golden::hirzebruch(1));
    for (long a = -1; a <= 2; ++a)
      for (long b = -1; b <= 2; ++b)
        for (long c = -1; c <= 2; ++c)
          for (long d = -1; d <= 2; ++d) {
            Point x = qv({a, b, c, d});
            auto p = f1.evaluate_unchecked(x);
            const bool all_facets = p.is_full_dimensional() && p.facet_list().size() == 4;
            CHECK(all_facets == f1.cone.contains_interior(x));
          }
  }

  TEST_CASE("Gelfand-Zetlin family") {
    auto gz3 = gz_family(3);
    CHECK(gz3.ambient_dim == 3);
    CHECK(gz3.coordinate_names == std::vector<std::string>{"x12", "x22", "x11"});
    CHECK(count(gz3.evaluate(qv({0, 2, 4}))) == 27);
    CHECK(gz_pattern_count({0, 2, 4}, false) == 27);
    CHECK(gz3.evaluate(qv({0, 0, 0})) == hull({pt({0, 0, 0})}));
    CHECK(gz3.cone.lineality() == IntMatrix{{1, 1, 1}});
  }

  TEST_CASE("property: GZ counts match pattern enumeration on 30 random dominant weights") {
    auto gz3 = gz_family(3);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> step(0, 3), base(-3, 3);
    for (int t = 0; t < 30; ++t) {
      const long a = base(rng), b = a + step(rng), c = b + step(rng);
      CHECK(count(gz3.evaluate(qv({a, b, c}))) == gz_pattern_count({a, b, c}, false));
    }
  }

  TEST_CASE("strict-shift examples") {
    auto r = gz_strict_shift_check({0, 3});
    CHECK(r.strict_count == 2);
    CHECK(r.shifted_lambda == IntVector{1, 2});
    CHECK(r.shifted_count == 2);
    CHECK(r.equal);
    auto r3 = gz_strict_shift_check({0, 2, 4});
    CHECK(r3.strict_count == 1);
    CHECK(r3.shifted_count == 1);
    auto r0 = gz_strict_shift_check({0, 1});
    CHECK(r0.strict_count == 0);
    CHECK(r0.shifted_count == 0);
    CHECK(r0.equal);
    CHECK_THROWS_AS(gz_strict_shift_check({2, 1}), Error);
  }

  TEST_CASE("property: strict counts match the pattern oracle for n = 2, 3") {
    for (long a = -2; a <= 2; ++a)
      for (long b = a; b <= 2; ++b)
        for (long c = b; c <= 2; ++c) {
          auto r = gz_strict_shift_check({a, b, c});
          CHECK(r.strict_count == gz_pattern_count({a, b, c}, true));
          CHECK(r.equal);
        }
  }

  TEST_CASE("linearity certification") {
    for (const auto& name : {"toric-p2", "gz3", "fibered-gl2"}) {
      auto v = verify_linearity(golden::family_named(name), 20);
      CHECK_MESSAGE(v.verified(), name);
      CHECK(v.checks >= 20);
    }
    auto naive = golden::min_projection().naive;
    auto v = verify_linearity(naive, 20);
    REQUIRE(v.refuted());
    REQUIRE(v.witness.size() == 3);
    // The witness straddles the wall t1 = t2 or touches it.
    const auto& g1 = v.witness[0];
    const auto& g2 = v.witness[1];
    CHECK((g1[0] - g1[1]) * (g2[0] - g2[1]) <= 0);
  }

  TEST_CASE("min(t1, t2) is not additive across the wall") {
    auto naive = golden::min_projection().naive;
    auto p = naive.evaluate(qv({1, 2}));
    auto q2 = naive.evaluate(qv({2, 1}));
    CHECK(p == hull({pt({0}), pt({1})}));
    CHECK(q2 == hull({pt({0}), pt({1})}));
    CHECK_FALSE(minkowski_sum(p, q2) == naive.evaluate(qv({3, 3})));
  }

  TEST_CASE("family fans") {
    CHECK(family_fan(toric_family(golden::projective_plane())).rays.size() == 3);
    auto line = family_fan(gz_family(2));
    CHECK(std::set<IntVector>(line.rays.begin(), line.rays.end()) == std::set<IntVector>{{1}, {-1}});
    // Normal fan of the GZ polytope at lambda = (0,1,2)t, frozen from the oracle run.
    auto gz3 = family_fan(gz_family(3));
    CHECK(gz3.rays == IntMatrix{{-1, 0, 0}, {-1, 0, 1}, {0, -1, 0}, {0, 1, -1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(gz3.max_cones == std::vector<std::vector<std::size_t>>{
                               {1, 4, 5}, {3, 4, 5}, {1, 2, 5}, {2, 3, 5}, {0, 1, 3, 4}, {0, 1, 2}, {0, 2, 3}});
    CHECK(gz3 == normal_fan(gz_family(3).evaluate(qv({0, 5, 10}))));
    auto props = fan_properties(gz3);
    CHECK(props.complete);
    CHECK_FALSE(props.simplicial);
    CHECK_THROWS_AS(family_fan(golden::min_projection().naive), Error);
  }

  TEST_CASE("fibered family") {
    auto base = golden::box_base();
    CHECK(weyl_orbits(base.normals) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
    auto f = fibered_family(base, 1);
    CHECK(f.param_dim() == 2);
    CHECK(f.ambient_dim == 3);
    CHECK(count(f.evaluate(qv({1, 1}))) == 10);
    CHECK(box_fiber_count(-1, 1) == 10);
    CHECK(count(f.evaluate(qv({0, 0}))) == 1);
    for (long a = 1; a <= 2; ++a)
      for (long b = 1; b <= 2; ++b)
        CHECK(minkowski_sum(f.evaluate(qv({a, a})), f.evaluate(qv({b, b}))) == f.evaluate(qv({a + b, a + b})));
    auto doubled = fibered_family(base, 2);
    CHECK(doubled.ambient_dim == 4);
    // Sum over dominant pairs in [-1,1] of (fiber size)^2: 3*1 + 2*4 + 1*9.
    CHECK(count(doubled.evaluate(qv({1, 1}))) == 20);
    // The P2 ray set is permutation invariant; the F1 ray set is not.
    CHECK(weyl_orbits(golden::projective_plane().rays).size() == 2);
    CHECK_THROWS_AS(fibered_family(toric_family(golden::hirzebruch(1)), 1), Error);
    try {
      fibered_family(toric_family(golden::hirzebruch(1)), 1);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FanNotWeylInvariant);
    }
  }

  TEST_CASE("projected families") {
    auto id = projected_family(ParameterCone::from_inequalities(2, {{1, 0}, {0, 1}}),
                               {qv({1, 0}), qv({0, 1})});
    REQUIRE(id.chambers.size() == 1);
    CHECK(id.naive.ambient_dim == 0);
    CHECK(id.chambers[0].family.evaluate(qv({2, 3})).dim() == 0);

    auto cone = ParameterCone::from_generators(2, {qv({1, 0}), qv({1, 1})});
    auto seg = projected_family(cone, {qv({1, 0})});
    REQUIRE(seg.chambers.size() == 1);
    auto fiber = seg.chambers[0].family.evaluate(qv({4}));
    CHECK(count(fiber) == 5);
    CHECK(volume(fiber) == 4);

    auto mp = golden::min_projection();
    REQUIRE(mp.chambers.size() == 2);
    CHECK(mp.chambers[0].cone.hrep() == IntMatrix{{-1, 1}, {1, 0}});
    CHECK(mp.chambers[1].cone.hrep() == IntMatrix{{0, 1}, {1, -1}});
    CHECK(volume(mp.chambers[0].family.evaluate(qv({2, 5}))) == 2);
    CHECK(volume(mp.chambers[1].family.evaluate(qv({5, 2}))) == 2);
    for (const auto& ch : mp.chambers) CHECK(verify_linearity(ch.family, 20).verified());

    auto unbounded = ParameterCone::from_inequalities(2, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(projected_family(unbounded, {qv({1, 0})}), Error);
  }

  TEST_CASE("property: linearity on 20 samples with coefficients 1..3") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(1, 3), pick(0, 2);
    for (const auto& name : golden::family_names()) {
      auto f = golden::family_named(name);
      auto gens = f.cone.generators();
      std::uniform_int_distribution<std::size_t> which(0, gens.size() - 1);
      for (int t = 0; t < 20; ++t) {
        Point g1 = add(to_point(gens[which(rng)]), to_point(gens[which(rng)]));
        Point g2 = to_point(gens[which(rng)]);
        const long c1 = coef(rng), c2 = coef(rng);
        CHECK(f.evaluate(add(scaled(g1, Rational(c1)), scaled(g2, Rational(c2)))) ==
              minkowski_sum(scale(f.evaluate(g1), Rational(c1)), scale(f.evaluate(g2), Rational(c2))));
      }
    }
  }
}
