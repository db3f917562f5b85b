#include <random>

#include "doctest.h"
#include "polyfam/algebra.hpp"
#include "polyfam/error.hpp"
#include "polyfam/golden.hpp"
#include "support.hpp"

using namespace polyfam;
using namespace testing;

namespace {

// (sum of the listed variables)^2 / 2 expanded by hand.
HomogeneousPolynomial half_square(std::size_t d) {
  HomogeneousPolynomial f(d, 2);
  for (std::size_t i = 0; i < d; ++i) {
    Exponent e(d, 0);
    e[i] = 2;
    f.add_term(e, q(1, 2));
    for (std::size_t j = i + 1; j < d; ++j) {
      Exponent m(d, 0);
      m[i] = m[j] = 1;
      f.add_term(m, q(1));
    }
  }
  return f;
}

HomogeneousPolynomial linear(std::initializer_list<long> coeffs) {
  HomogeneousPolynomial f(coeffs.size(), 1);
  std::size_t i = 0;
  for (long c : coeffs) {
    Exponent e(coeffs.size(), 0);
    e[i++] = 1;
    f.add_term(e, q(c));
  }
  return f;
}

}  // namespace

TEST_SUITE("volume-algebra") {
  TEST_CASE("polynomial basics") {
    HomogeneousPolynomial f(2, 2);
    f.add_term({2, 0}, q(1));
    f.add_term({2, 0}, q(-1));
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.add_term({1, 0}, q(1)), Error);
    CHECK(monomials(3, 2).size() == 6);
    CHECK(monomials(2, 2) == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(half_square(3).evaluate(pt({1, 1, 1})) == q(9, 2));
  }

  TEST_CASE("volume polynomials of toric families") {
    CHECK(volume_polynomial(golden::family_named("toric-line")) == linear({1, 1}));
    auto p2 = volume_polynomial(golden::family_named("toric-p2"));
    CHECK(p2 == half_square(3));
    CHECK(p2.evaluate(pt({1, 1, 1})) == q(9, 2));
    HomogeneousPolynomial box(4, 2);
    box.add_term({1, 1, 0, 0}, q(1));
    box.add_term({1, 0, 0, 1}, q(1));
    box.add_term({0, 1, 1, 0}, q(1));
    box.add_term({0, 0, 1, 1}, q(1));
    CHECK(volume_polynomial(golden::family_named("toric-p1xp1")) == box);
    CHECK(volume_polynomial(golden::family_named("segment3")) == linear({3}));
  }

  TEST_CASE("volume polynomial agrees with direct volumes on the cone") {
    for (const auto& name : {"toric-f1", "gz3", "fibered-gl2", "projected-min-1"}) {
      CAPTURE(name);
      auto f = golden::family_named(name);
      auto poly = volume_polynomial(f);
      std::mt19937_64 rng(5);
      std::uniform_int_distribution<int> w(0, 3);
      const auto gens = f.cone.generators();
      for (int trial = 0; trial < 10; ++trial) {
        Point g(f.param_dim(), Rational(0));
        for (const auto& gen : gens) g = add(g, scaled(to_point(gen), q(w(rng))));
        CHECK(poly.evaluate(g) == volume(f.evaluate(g)));
      }
    }
  }

  TEST_CASE("directional derivatives") {
    CHECK(directional_derivative(linear({1, 1}), pt({1, 1})).coefficient({0, 0}) == q(2));
    auto d = directional_derivative(half_square(3), pt({1, 1, 1}));
    CHECK(d == linear({3, 3, 3}));
    CHECK(directional_derivative(half_square(3), pt({0, 0, 0})).is_zero());
  }

  TEST_CASE("graded dimensions") {
    auto p2 = graded_dimensions(half_square(3));
    CHECK(p2.dims == std::vector<std::int64_t>{1, 1, 1});
    CHECK(p2.duality_ok);
    auto box = graded_dimensions(volume_polynomial(golden::family_named("toric-p1xp1")));
    CHECK(box.dims == std::vector<std::int64_t>{1, 2, 1});
    HomogeneousPolynomial cube(1, 4);
    cube.add_term({4}, q(1));
    CHECK(graded_dimensions(cube).dims == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(graded_dimensions(HomogeneousPolynomial(2, 2)), Error);
  }

  TEST_CASE("class equality") {
    CHECK(class_equal(linear({1, 1}), pt({2, 0}), pt({1, 1})));
    CHECK(class_equal(half_square(3), pt({1, 0, -1}), pt({0, 0, 0})));
    CHECK_FALSE(class_equal(half_square(3), pt({1, 1, 1}), pt({0, 0, 0})));
  }

  TEST_CASE("h-vector oracle matches graded dimensions on smooth golden fans") {
    for (const auto& name : golden::fan_names()) {
      CAPTURE(name);
      const Fan fan = golden::fan_named(name);
      auto poly = volume_polynomial(toric_family(fan));
      auto dims = graded_dimensions(poly);
      CHECK(dims.duality_ok);
      CHECK(dims.dims.front() == 1);
      CHECK(dims.dims.back() == 1);
      if (fan_properties(fan).smooth) CHECK(dims.dims == h_vector_oracle(fan));
    }
    CHECK(h_vector_oracle(golden::hirzebruch(1)) == std::vector<std::int64_t>{1, 2, 1});
  }

  TEST_CASE("translation classes vanish") {
    for (const auto& name : golden::fan_names()) {
      CAPTURE(name);
      const Fan fan = golden::fan_named(name);
      auto poly = volume_polynomial(toric_family(fan));
      for (const auto& t : translation_classes(fan)) CHECK(class_equal(poly, t, Point(t.size(), Rational(0))));
    }
  }

  TEST_CASE("Euler identity") {
    for (const auto& name : {"toric-p2", "toric-f1", "gz3", "fibered-gl2"}) {
      CAPTURE(name);
      auto poly = volume_polynomial(golden::family_named(name));
      HomogeneousPolynomial euler(poly.num_vars(), poly.degree());
      for (std::size_t i = 0; i < poly.num_vars(); ++i) {
        const auto d = poly.partial(i);
        for (const auto& [e, c] : d.terms()) {
          Exponent r = e;
          ++r[i];
          euler.add_term(r, c);
        }
      }
      HomogeneousPolynomial scaled_poly(poly.num_vars(), poly.degree());
      for (const auto& [e, c] : poly.terms()) scaled_poly.add_term(e, c * poly.degree());
      CHECK(euler == scaled_poly);
    }
  }

  TEST_CASE("support embedding") {
    auto gz2 = golden::family_named("gz2");
    auto e = support_embedding(gz2);
    // Delta(l) = [l1, l2]: the ray +1 carries -l1 and the ray -1 carries l2.
    for (std::size_t i = 0; i < e.fan.rays.size(); ++i) {
      const Point img = e.apply(pt({3, 7}));
      CHECK(img[i] == (e.fan.rays[i][0] == 1 ? q(-3) : q(7)));
    }
    auto p2 = golden::family_named("toric-p2");
    auto ep = support_embedding(p2);
    CHECK(ep.apply(pt({2, 1, 0})).size() == 3);
  }

  TEST_CASE("anticanonical class check") {
    CHECK(anticanonical_class_check(golden::family_named("toric-p2"), pt({1, 1, 1})));
    CHECK(anticanonical_class_check(golden::family_named("toric-p2"), pt({2, 1, 0})));
    CHECK_FALSE(anticanonical_class_check(golden::family_named("toric-p2"), pt({2, 2, 2})));
    CHECK(anticanonical_class_check(golden::family_named("gz2"), pt({-1, 1})));
    CHECK(anticanonical_class_check(golden::family_named("gz3"), pt({-2, 0, 2})));
    CHECK_FALSE(anticanonical_class_check(golden::family_named("gz3"), pt({-1, 0, 1})));
  }
}
