// One PASS/FAIL line per acceptance criterion. Every comparison is exact;
// a criterion also fails when it exceeds its runtime limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyfam/algebra.hpp"
#include "polyfam/anticanonical.hpp"
#include "polyfam/error.hpp"
#include "polyfam/golden.hpp"
#include "polyfam/lattice.hpp"
#include "support.hpp"

using namespace polyfam;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int number, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < limit_s, "runtime over " + std::to_string(limit_s) + " s");
  if (!out.ok) ++failures;
  std::cout << "criterion " << number << ": " << (out.ok ? "PASS" : "FAIL") << " (" << std::fixed
            << std::setprecision(2) << secs << " s)";
  const std::string note = out.note.str();
  if (!note.empty()) std::cout << " " << note;
  std::cout << std::endl;
}

Point ones(std::size_t d) { return Point(d, Rational(1)); }

Point rho2(std::size_t n) {
  Point k;
  for (std::size_t i = 0; i < n; ++i) k.emplace_back(2 * static_cast<long>(i) - static_cast<long>(n - 1));
  return k;
}

const std::vector<std::string> kToric{"toric-p2", "toric-p1xp1", "toric-f1"};

}  // namespace

int main() {
  // 1. Toric anticanonical: kappa = (1,...,1) verified and found uniquely.
  for (const auto& name : kToric) {
    criterion(1, 5.0, [&](Outcome& o) {
      const auto f = golden::family_named(name);
      const Point k = ones(f.param_dim());
      o.require(is_anticanonical(f, k, 5).verified(), name + " verify");
      const auto s = find_anticanonical(f, 3, 5);
      o.require(s.candidates == std::vector<Point>{k}, name + " search returned " + std::to_string(s.candidates.size()) + " candidates");
      o.note << (o.ok ? name + " kappa " + format_point(k) : "");
    });
  }

  // 2. Delta(kappa) has exactly one interior lattice point.
  criterion(2, 1.0, [](Outcome& o) {
    for (const auto& name : kToric) {
      const auto f = golden::family_named(name);
      o.require(count_interior(f.evaluate(ones(f.param_dim()))) == 1, name);
      o.require(single_interior_point_check(f, ones(f.param_dim())), name + " check");
    }
  });

  // 3. [0, 3g] has no anticanonical parameter.
  criterion(3, 1.0, [](Outcome& o) {
    o.require(find_anticanonical(golden::tripled_segment(), 10, 5).candidates.empty(), "candidates found");
  });

  // 4. Strict GZ count equals the shifted non-strict count.
  criterion(4, 60.0, [](Outcome& o) {
    std::int64_t checked = 0;
    for (std::size_t n : {2, 3, 4}) {
      IntVector l(n, -4);
      while (true) {
        if (std::is_sorted(l.begin(), l.end())) {
          const auto r = gz_strict_shift_check(l);
          ++checked;
          if (!r.equal) o.require(false, "lambda " + format_int_vector(l));
        }
        std::size_t j = 0;
        while (j < n && l[j] == 4) l[j] = -4, ++j;
        if (j == n) break;
        ++l[j];
      }
    }
    o.note << checked << " dominant weights";
  });

  // 5. GZ anticanonical parameter is 2rho (increasing convention) and Fano.
  criterion(5, 30.0, [](Outcome& o) {
    for (std::size_t n : {2, 3}) {
      const auto f = gz_family(n);
      const auto s = find_anticanonical(f, 3, 4);
      o.require(s.candidates == std::vector<Point>{rho2(n)}, "n=" + std::to_string(n) + " search");
      o.require(is_fano(f, rho2(n)), "n=" + std::to_string(n) + " Fano");
    }
  });

  // 6. Ray-sum identity at 5 interior samples, and the degree-one class check.
  criterion(6, 10.0, [](Outcome& o) {
    std::vector<std::pair<LinearFamily, Point>> cases;
    for (const auto& name : kToric) {
      auto f = golden::family_named(name);
      cases.emplace_back(f, ones(f.param_dim()));
    }
    cases.emplace_back(gz_family(2), rho2(2));
    cases.emplace_back(gz_family(3), rho2(3));
    for (const auto& [f, k] : cases) {
      const auto r = ray_sum_check(f, k);
      o.require(r.ok && r.samples.size() == 5, f.kind + " ray sum at " + format_point(k));
      o.require(anticanonical_class_check(f, k), f.kind + " class check at " + format_point(k));
    }
  });

  // 7. Graded dimensions against the h-vector oracle; duality; translations.
  criterion(7, 5.0, [](Outcome& o) {
    const std::vector<std::pair<std::string, std::vector<std::int64_t>>> expected{
        {"p2", {1, 1, 1}}, {"p1xp1", {1, 2, 1}}, {"f1", {1, 2, 1}}};
    for (const auto& [name, dims] : expected) {
      const Fan fan = golden::fan_named(name);
      const auto g = graded_dimensions(volume_polynomial(toric_family(fan)));
      o.require(g.dims == dims && h_vector_oracle(fan) == dims, name + " dims");
    }
    for (const auto& name : golden::family_names()) {
      const auto g = graded_dimensions(volume_polynomial(golden::family_named(name)));
      o.require(g.duality_ok && g.dims.front() == 1 && g.dims.back() == 1, name + " duality");
    }
    for (const auto& name : golden::fan_names()) {
      const Fan fan = golden::fan_named(name);
      const auto poly = volume_polynomial(toric_family(fan));
      for (const auto& t : translation_classes(fan))
        o.require(class_equal(poly, t, Point(t.size(), Rational(0))), name + " translation");
    }
  });

  // 8. Ehrhart-Macdonald reciprocity on a seeded corpus.
  criterion(8, 60.0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = testing::random_lattice_polytope(rng, 1 + trial % 3, 2);
      o.require(check_reciprocity(p, 3), "polytope " + std::to_string(trial));
    }
  });

  // 9. Linearity of the golden families; the naive projected family fails.
  criterion(9, 30.0, [](Outcome& o) {
    for (const auto& name : golden::family_names())
      o.require(verify_linearity(golden::family_named(name), 20).verified(), name);
    const auto naive = verify_linearity(golden::family_named("projected-min-naive"), 20);
    o.require(naive.refuted() && !naive.witness.empty(), "naive projected family not refuted");
    if (o.ok) o.note << "naive witness " << format_point(naive.witness[0]) << " " << format_point(naive.witness[1]);
  });

  // 10. Fibered family search and comparison with the claimed (1,...,1).
  criterion(10, 120.0, [](Outcome& o) {
    for (std::size_t m : {1, 2}) {
      const auto f = fibered_family(golden::box_base(), m);
      const auto c = fibered_comparison(f, m, 4, 4);
      o.require(c.search.candidates.size() <= 1, "uniqueness");
      o.require(!c.note.empty(), "report");
      o.note << (m == 1 ? "" : " ") << "[multiplicity " << m << ": " << c.note << "]";
    }
  });

  return failures == 0 ? 0 : 1;
}
