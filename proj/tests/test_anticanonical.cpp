#include "doctest.h"
#include "polyfam/algebra.hpp"
#include "polyfam/anticanonical.hpp"
#include "polyfam/error.hpp"
#include "polyfam/golden.hpp"
#include "polyfam/lattice.hpp"
#include "support.hpp"

using namespace polyfam;
using namespace testing;

TEST_SUITE("anticanonical") {
  TEST_CASE("verification examples") {
    auto p2 = is_anticanonical(golden::family_named("toric-p2"), pt({1, 1, 1}), 5);
    CHECK(p2.verified());
    CHECK_FALSE(p2.tested.empty());
    CHECK(is_anticanonical(golden::family_named("gz2"), pt({-1, 1}), 6).verified());
    for (long k = -3; k <= 3; ++k) {
      CAPTURE(k);
      auto v = is_anticanonical(golden::tripled_segment(), pt({k}), 5);
      REQUIRE(v.refuted());
      // Independent recount of the witness: [0, 3(g-k)] against the open [0, 3g].
      const long g = v.witness->gamma[0].get_num().get_si();
      CHECK(v.witness->count == 3 * (g - k) + 1);
      CHECK(v.witness->interior == 3 * g - 1);
    }
    CHECK_THROWS_AS(is_anticanonical(golden::family_named("toric-p2"), {q(1, 2), q(1), q(1)}, 5), Error);
  }

  TEST_CASE("test set shape") {
    auto f = golden::family_named("gz2");
    auto t = anticanonical_test_set(f, pt({-1, 1}), 2);
    for (const auto& g : t) {
      CHECK(f.cone.contains_interior(g));
      CHECK(f.cone.contains(subtract(g, pt({-1, 1}))));
    }
    CHECK(std::is_sorted(t.begin(), t.end()));
  }

  TEST_CASE("refutations re-check by independent recount") {
    auto f = golden::family_named("gz3");
    auto v = is_anticanonical(f, pt({-1, 0, 1}), 4);
    REQUIRE(v.refuted());
    const Point g = v.witness->gamma;
    CHECK(box_count(f.halfspaces(subtract(g, pt({-1, 0, 1}))), IntVector(3, -12), IntVector(3, 12), false) == v.witness->count);
    CHECK(box_count(f.halfspaces(g), IntVector(3, -12), IntVector(3, 12), true) == v.witness->interior);
  }

  TEST_CASE("search") {
    CHECK(find_anticanonical(golden::family_named("toric-p2"), 3, 5).candidates == std::vector<Point>{pt({1, 1, 1})});
    CHECK(find_anticanonical(golden::tripled_segment(), 10, 5).candidates.empty());
    CHECK(find_anticanonical(golden::family_named("gz2"), 3, 4).candidates == std::vector<Point>{pt({-1, 1})});
    CHECK(find_anticanonical(golden::family_named("gz3"), 3, 4).candidates == std::vector<Point>{pt({-2, 0, 2})});
  }

  TEST_CASE("single interior point and Fano") {
    CHECK(single_interior_point_check(golden::family_named("toric-p2"), pt({1, 1, 1})));
    CHECK(single_interior_point_check(golden::family_named("toric-p1xp1"), pt({1, 1, 1, 1})));
    auto gz3 = golden::family_named("gz3");
    CHECK(single_interior_point_check(gz3, pt({-2, 0, 2})));
    CHECK(contains(gz3.evaluate(pt({-2, 0, 2})), pt({-1, 1, 0}), Membership::RelativeInterior));
    CHECK_THROWS_AS(single_interior_point_check(gz3, pt({0, 0, 0})), Error);
    CHECK(is_fano(golden::family_named("toric-p2"), pt({1, 1, 1})));
    CHECK(is_fano(gz3, pt({-2, 0, 2})));
    CHECK_FALSE(is_fano(golden::family_named("toric-f2"), pt({1, 1, 1, 1})));
  }

  TEST_CASE("ray-sum identity") {
    auto p2 = ray_sum_check(golden::family_named("toric-p2"), pt({1, 1, 1}), {pt({2, 2, 2})});
    CHECK(p2.ok);
    CHECK(p2.samples[0].derivative == q(18));
    CHECK(p2.samples[0].facet_volumes == q(18));
    auto box = ray_sum_check(golden::family_named("toric-p1xp1"), pt({1, 1, 1, 1}), {pt({1, 1, 1, 1})});
    CHECK(box.samples[0].derivative == q(8));
    CHECK(box.ok);
    auto gz2 = ray_sum_check(golden::family_named("gz2"), pt({-1, 1}), {pt({0, 3})});
    CHECK(gz2.samples[0].derivative == q(2));
    CHECK(gz2.ok);
    CHECK(ray_sum_check(golden::family_named("gz3"), pt({-2, 0, 2})).ok);
    CHECK_FALSE(ray_sum_check(golden::family_named("gz3"), pt({-1, 0, 1})).ok);
    CHECK_THROWS_AS(ray_sum_check(golden::family_named("projected-min-naive"), pt({1, 1})), Error);
  }

  TEST_CASE("verified implies ray-sum and class check") {
    for (const auto& [name, kappa] : std::vector<std::pair<std::string, Point>>{
             {"toric-p2", pt({1, 1, 1})}, {"toric-f1", pt({1, 1, 1, 1})}, {"gz2", pt({-1, 1})}, {"gz3", pt({-2, 0, 2})}}) {
      CAPTURE(name);
      auto f = golden::family_named(name);
      REQUIRE(is_anticanonical(f, kappa, 4).verified());
      CHECK(ray_sum_check(f, kappa).ok);
      CHECK(anticanonical_class_check(f, kappa));
    }
  }
}
