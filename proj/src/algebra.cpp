#include "polyfam/algebra.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "polyfam/error.hpp"

namespace polyfam {

namespace {

constexpr int kResamples = 5;

/// Integer weight vectors in {1..w}^g in order of increasing total weight.
std::vector<std::vector<std::int64_t>> graded_weights(std::size_t g, std::int64_t w) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(g);
  const std::int64_t total_max = static_cast<std::int64_t>(g) * w;
  for (std::int64_t total = static_cast<std::int64_t>(g); total <= total_max; ++total) {
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (i + 1 == g) {
        if (left >= 1 && left <= w) {
          cur[i] = left;
          out.push_back(cur);
        }
        return;
      }
      for (std::int64_t v = 1; v <= w && v <= left; ++v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    if (g == 0) break;
    rec(0, total);
  }
  return out;
}

/// Ray indices tight at each vertex of polytope_of(fan, a), sorted.
std::vector<std::vector<std::size_t>> incidence(const Fan& fan, const Point& a, const Polytope& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& v : p.vrep()) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
      if (dot(fan.rays[i], v) == -a[i]) tight.push_back(i);
    out.push_back(std::move(tight));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool simple_with_all_facets(const Fan& fan, const std::vector<std::vector<std::size_t>>& inc) {
  std::vector<std::size_t> seen(fan.rays.size(), 0);
  for (const auto& t : inc) {
    if (t.size() != fan.ambient_dim) return false;
    for (auto i : t) ++seen[i];
  }
  return std::all_of(seen.begin(), seen.end(), [&](std::size_t c) { return c >= fan.ambient_dim; });
}

}  // namespace

HomogeneousPolynomial volume_polynomial(const LinearFamily& f) {
  const auto gens = f.cone.generators();
  const int n = static_cast<int>(f.ambient_dim);
  for (int attempt = 0; attempt < kResamples; ++attempt) {
    const auto weights = graded_weights(gens.size(), n + 1 + attempt);
    std::set<Point> seen;
    std::size_t next = 0;
    auto candidate = [&]() -> std::optional<Point> {
      while (next < weights.size()) {
        const auto& w = weights[next++];
        Point g(f.param_dim(), Rational(0));
        for (std::size_t i = 0; i < gens.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) g[j] += Rational(static_cast<long>(w[i] * gens[i][j]));
        if (!f.cone.contains_interior(g) || !seen.insert(g).second) continue;
        return g;
      }
      return std::nullopt;
    };
    try {
      return interpolate_homogeneous(f.param_dim(), n, candidate,
                                     [&](const Point& g) { return volume(f.evaluate(g)); });
    } catch (const Error& e) {
      if (e.code() != Errc::SingularInterpolation || attempt + 1 == kResamples) throw;
    }
  }
  fail(Errc::SingularInterpolation, "no interpolation nodes in general position");
}

HomogeneousPolynomial fan_volume_polynomial(const Fan& fan, const Point& near, std::uint64_t seed) {
  const std::size_t s = fan.rays.size();
  if (near.size() != s) fail(Errc::DimensionMismatch, "one support number per ray expected");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(1, 97);
  for (int attempt = 0; attempt < kResamples; ++attempt) {
    Point base = near;
    for (auto& x : base) {
      Rational d(small(rng), 1000);
      d.canonicalize();
      x += d;
    }
    const Polytope p0 = polytope_of(fan, base);
    if (!p0.is_full_dimensional()) continue;
    const auto type = incidence(fan, base, p0);
    if (!simple_with_all_facets(fan, type)) continue;
    std::uniform_int_distribution<int> step(-3, 3);
    const Rational eta(1, 1000000);
    std::size_t drawn = 0;
    const std::size_t limit = 200 * monomials(s, static_cast<int>(fan.ambient_dim)).size() + 200;
    auto candidate = [&]() -> std::optional<Point> {
      while (drawn++ < limit) {
        Point a = base;
        for (auto& x : a) x += eta * step(rng);
        const Polytope p = polytope_of(fan, a);
        if (incidence(fan, a, p) != type) continue;
        return a;
      }
      return std::nullopt;
    };
    try {
      return interpolate_homogeneous(s, static_cast<int>(fan.ambient_dim), candidate,
                                     [&](const Point& a) { return volume(polytope_of(fan, a)); });
    } catch (const Error& e) {
      if (e.code() != Errc::SingularInterpolation || attempt + 1 == kResamples) throw;
    }
  }
  fail(Errc::SingularInterpolation, "no simple chamber found near the given support numbers");
}

Point SupportEmbedding::apply(const Point& g) const {
  Point out;
  for (const auto& row : matrix) out.push_back(dot(row, g));
  return out;
}

SupportEmbedding support_embedding(const LinearFamily& f) {
  SupportEmbedding e;
  e.fan = family_fan(f);
  const std::size_t d = f.param_dim();
  const Point star = to_point(f.cone.deep_point());
  auto numbers = [&](const Point& g) {
    const Polytope p = f.evaluate(g);
    Point a;
    for (const auto& r : e.fan.rays) a.push_back(-support_value(p, r));
    return a;
  };
  const Point a_star = numbers(star);
  e.matrix.assign(e.fan.rays.size(), Point(d));
  for (std::size_t j = 0; j < d; ++j) {
    Rational eps = 1;
    Point g = star;
    g[j] += eps;
    while (!f.cone.contains(g)) {
      eps /= 2;
      g = star;
      g[j] += eps;
    }
    const Point a = numbers(g);
    for (std::size_t i = 0; i < a.size(); ++i) e.matrix[i][j] = (a[i] - a_star[i]) / eps;
  }
  if (e.apply(star) != a_star) fail(Errc::EmbeddingNotLinear, "support numbers are not linear at the deep point");
  for (const auto& gen : f.cone.generators()) {
    Point g = add(star, to_point(gen));
    if (numbers(g) != e.apply(g))
      fail(Errc::EmbeddingNotLinear, "support numbers are not linear at " + format_point(g));
  }
  return e;
}

bool anticanonical_class_check(const LinearFamily& f, const Point& kappa) {
  if (kappa.size() != f.param_dim()) fail(Errc::DimensionMismatch, "kappa length");
  const auto e = support_embedding(f);
  const auto poly = fan_volume_polynomial(e.fan, e.apply(to_point(f.cone.deep_point())));
  return class_equal(poly, e.apply(kappa), Point(e.fan.rays.size(), Rational(1)));
}

std::vector<std::int64_t> h_vector_oracle(const Fan& fan) { return h_vector(fan); }

std::vector<Point> translation_classes(const Fan& fan) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < fan.ambient_dim; ++k) {
    Point v;
    for (const auto& r : fan.rays) v.push_back(Rational(static_cast<long>(r[k])));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace polyfam
