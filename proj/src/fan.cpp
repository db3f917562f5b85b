#include "polyfam/fan.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <map>
#include <random>

#include "polyfam/error.hpp"
#include "polyfam/linalg.hpp"
#include "polyfam/lp.hpp"

namespace polyfam {

namespace {

Matrix cone_rays(const Fan& fan, const std::vector<std::size_t>& cone) {
  Matrix m;
  for (auto i : cone) m.push_back(to_point(fan.rays.at(i)));
  return m;
}

// Inward facet normals of a full-dimensional cone, with the rays on each facet.
struct ConeFacets {
  IntMatrix normals;
  std::vector<std::vector<std::size_t>> walls;
};

std::optional<ConeFacets> cone_facets(const Fan& fan, const std::vector<std::size_t>& cone) {
  const auto rays = cone_rays(fan, cone);
  if (linalg::rank(rays) < fan.ambient_dim) return std::nullopt;
  std::vector<Point> pts = rays;
  pts.emplace_back(fan.ambient_dim, Rational(0));
  const auto hull = halfspaces(pts);
  ConeFacets out;
  for (const auto& f : hull.facet_list()) {
    if (f.halfspace.offset != 0) continue;
    out.normals.push_back(f.halfspace.normal);
    std::vector<std::size_t> wall;
    for (auto i : cone)
      if (dot(f.halfspace.normal, fan.rays[i]) == 0) wall.push_back(i);
    out.walls.push_back(std::move(wall));
  }
  return out;
}

bool strictly_convex(const Matrix& rays) {
  if (rays.empty()) return true;
  return lp::feasible_inequalities(rays, Point(rays.size(), Rational(1))).has_value();
}

bool interiors_meet(const IntMatrix& a, const IntMatrix& b) {
  Matrix rows = linalg::to_matrix(a);
  for (const auto& r : b) rows.push_back(to_point(r));
  return lp::feasible_inequalities(rows, Point(rows.size(), Rational(1))).has_value();
}

bool in_cone(const IntMatrix& normals, const IntVector& x) {
  for (const auto& h : normals)
    if (dot(h, x) < 0) return false;
  return true;
}

void check_cone_indices(const Fan& fan) {
  for (const auto& r : fan.rays)
    if (r.size() != fan.ambient_dim) fail(Errc::DimensionMismatch, "ray length differs from ambient dimension");
  for (const auto& c : fan.max_cones)
    for (auto i : c)
      if (i >= fan.rays.size()) fail(Errc::InvalidArgument, "cone references a missing ray");
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool common_minimizer(const Polytope& p, const Fan& fan, const std::vector<std::size_t>& cone) {
  for (const auto& v : p.vrep()) {
    bool ok = true;
    for (auto i : cone)
      if (dot(fan.rays[i], v) != support_value(p, fan.rays[i])) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool normal_unchecked(const Polytope& p, const Fan& fan) {
  if (p.is_empty()) return false;
  for (const auto& cone : fan.max_cones)
    if (!common_minimizer(p, fan, cone)) return false;
  return true;
}

}  // namespace

void validate(const Fan& fan) {
  check_cone_indices(fan);
  std::set<IntVector> seen;
  for (const auto& r : fan.rays) {
    if (is_zero(r) || gcd_of(r) != 1) fail(Errc::InvalidArgument, "ray " + format_int_vector(r) + " is not primitive");
    if (!seen.insert(r).second) fail(Errc::InvalidArgument, "duplicate ray " + format_int_vector(r));
  }
  std::vector<ConeFacets> full;
  for (const auto& c : fan.max_cones) {
    if (!strictly_convex(cone_rays(fan, c))) fail(Errc::InvalidArgument, "cone is not strictly convex");
    if (auto f = cone_facets(fan, c)) full.push_back(std::move(*f));
  }
  for (std::size_t i = 0; i < full.size(); ++i)
    for (std::size_t j = i + 1; j < full.size(); ++j)
      if (interiors_meet(full[i].normals, full[j].normals))
        fail(Errc::InvalidArgument, "maximal cones overlap in their interiors");
}

Fan normal_fan(const Polytope& p) {
  if (!p.is_full_dimensional()) fail(Errc::NotFullDimensional, "normal fan needs a full-dimensional polytope");
  Fan fan;
  fan.ambient_dim = p.ambient_dim();
  for (const auto& f : p.facet_list()) fan.rays.push_back(f.halfspace.normal);
  for (std::size_t v = 0; v < p.vrep().size(); ++v) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < p.facet_list().size(); ++i) {
      const auto& ids = p.facet_list()[i].vertex_ids;
      if (std::binary_search(ids.begin(), ids.end(), v)) cone.push_back(i);
    }
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

FanProperties fan_properties(const Fan& fan, std::uint64_t seed) {
  check_cone_indices(fan);
  const std::size_t n = fan.ambient_dim;
  FanProperties props;
  props.simplicial = true;
  props.smooth = true;
  for (const auto& c : fan.max_cones) {
    const auto rays = cone_rays(fan, c);
    const auto k = linalg::rank(rays);
    if (k != c.size()) {
      props.simplicial = props.smooth = false;
      continue;
    }
    // Rays extend to a Z-basis iff the gcd of the maximal minors is 1.
    Integer g = 0;
    std::vector<std::size_t> cols(k);
    std::function<void(std::size_t, std::size_t)> minors = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        Matrix m(k, Point(k));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t s = 0; s < k; ++s) m[r][s] = rays[r][cols[s]];
        const Rational d = linalg::determinant(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(d.get_num())).get_mpz_t());
        return;
      }
      for (std::size_t j = start; j < n; ++j) {
        cols[depth] = j;
        minors(j + 1, depth + 1);
      }
    };
    minors(0, 0);
    if (g != 1) props.smooth = false;
  }

  std::vector<ConeFacets> full;
  bool all_full = !fan.max_cones.empty();
  for (const auto& c : fan.max_cones) {
    if (auto f = cone_facets(fan, c))
      full.push_back(std::move(*f));
    else
      all_full = false;
  }
  bool complete = all_full;
  if (complete) {
    std::map<std::vector<std::size_t>, int> walls;
    for (const auto& f : full)
      for (const auto& w : f.walls) ++walls[w];
    for (const auto& [w, c] : walls)
      if (c != 2) complete = false;
  }
  if (complete && n <= 3) {
    for (std::size_t i = 0; i < full.size() && complete; ++i)
      for (std::size_t j = i + 1; j < full.size() && complete; ++j)
        if (interiors_meet(full[i].normals, full[j].normals)) complete = false;
  } else if (complete) {
    props.complete_certain = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
    for (int s = 0; s < 1000 && complete; ++s) {
      IntVector x(n);
      for (auto& c : x) c = coord(rng);
      bool covered = false;
      for (const auto& f : full)
        if (in_cone(f.normals, x)) {
          covered = true;
          break;
        }
      complete = covered;
    }
  }
  props.complete = complete;
  return props;
}

bool is_normal_to(const Polytope& p, const Fan& fan) {
  if (p.ambient_dim() != fan.ambient_dim) fail(Errc::DimensionMismatch, "polytope and fan dimensions differ");
  if (!fan_properties(fan).complete) fail(Errc::IncompleteFan, "normality needs a complete fan");
  return normal_unchecked(p, fan);
}

Point support_numbers(const Polytope& p, const Fan& fan) {
  if (!is_normal_to(p, fan)) fail(Errc::NotNormal, "polytope is not normal to the fan");
  Point a;
  for (const auto& r : fan.rays) a.push_back(-support_value(p, r));
  return a;
}

Polytope polytope_of(const Fan& fan, const Point& a) {
  if (a.size() != fan.rays.size()) fail(Errc::DimensionMismatch, "one support number per ray expected");
  std::vector<HalfSpace> h;
  for (std::size_t i = 0; i < a.size(); ++i) h.push_back(HalfSpace{fan.rays[i], a[i]});
  return vertices(fan.ambient_dim, h);
}

std::vector<std::int64_t> f_vector(const Fan& fan) {
  std::set<std::vector<std::size_t>> faces;
  for (const auto& c : fan.max_cones) {
    const std::size_t k = c.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) face.push_back(c[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::int64_t> f(fan.ambient_dim + 1, 0);
  for (const auto& face : faces)
    if (face.size() < f.size()) ++f[face.size()];
  return f;
}

std::vector<std::int64_t> h_vector(const Fan& fan) {
  if (!fan_properties(fan).simplicial) fail(Errc::FanNotSimplicial, "h-vector needs a simplicial fan");
  const auto f = f_vector(fan);
  const auto n = static_cast<std::int64_t>(fan.ambient_dim);
  std::vector<std::int64_t> h(f.size(), 0);
  for (std::int64_t k = 0; k <= n; ++k) {
    Integer s = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      Integer term = binomial(n - i, k - i) * f[static_cast<std::size_t>(i)];
      s += (k - i) % 2 == 0 ? term : Integer(-term);
    }
    h[static_cast<std::size_t>(k)] = to_int64(s);
  }
  return h;
}

bool in_normality_region(const Fan& fan, const Point& a) {
  const auto p = polytope_of(fan, a);
  if (!normal_unchecked(p, fan)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (-support_value(p, fan.rays[i]) != a[i]) return false;
  return true;
}

VirtualPolytope make_virtual(const Fan& fan, const Point& support_numbers) {
  if (support_numbers.size() != fan.rays.size()) fail(Errc::DimensionMismatch, "one support number per ray expected");
  return VirtualPolytope{fan, support_numbers};
}

VirtualPolytope virtual_add(const VirtualPolytope& u, const VirtualPolytope& w) {
  if (!(u.fan == w.fan)) fail(Errc::FanMismatch, "virtual polytopes live on different fans");
  return VirtualPolytope{u.fan, add(u.support_numbers, w.support_numbers)};
}

VirtualPolytope virtual_subtract(const VirtualPolytope& u, const VirtualPolytope& w) {
  if (!(u.fan == w.fan)) fail(Errc::FanMismatch, "virtual polytopes live on different fans");
  return VirtualPolytope{u.fan, subtract(u.support_numbers, w.support_numbers)};
}

VirtualPolytope virtual_scale(const VirtualPolytope& u, const Rational& c) {
  return VirtualPolytope{u.fan, scaled(u.support_numbers, c)};
}

Realization realize(const VirtualPolytope& u, std::int64_t max_shift) {
  const auto props = fan_properties(u.fan);
  if (!props.simplicial) fail(Errc::FanNotSimplicial, "realization needs a simplicial fan");
  if (!props.complete) fail(Errc::FanNotComplete, "realization needs a complete fan");
  const std::size_t s = u.fan.rays.size();
  for (std::int64_t m = 0; m <= max_shift; ++m) {
    const Point shift(s, Rational(m));
    const Point pos = add(u.support_numbers, shift);
    if (!in_normality_region(u.fan, pos) || !in_normality_region(u.fan, shift)) continue;
    return Realization{polytope_of(u.fan, pos), polytope_of(u.fan, shift), m};
  }
  fail(Errc::NoRealizationFound, "no shift up to " + std::to_string(max_shift));
}

}  // namespace polyfam
