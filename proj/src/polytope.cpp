#include "polyfam/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyfam/error.hpp"
#include "polyfam/linalg.hpp"
#include "polyfam/lp.hpp"

namespace polyfam {

bool operator<(const HalfSpace& lhs, const HalfSpace& rhs) {
  if (lhs.normal != rhs.normal) return lhs.normal < rhs.normal;
  return lhs.offset < rhs.offset;
}

namespace {

std::vector<Point> gather(const std::vector<Point>& pts, const std::vector<std::size_t>& ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(pts[i]);
  return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Rows spanning the direction space of the affine hull of `pts`.
Matrix direction_basis(const std::vector<Point>& pts) {
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
  return linalg::rref(std::move(diffs)).rows;
}

// Primitive normal lying in span(basis), orthogonal to the affine hull of
// `face`; nullopt unless that direction is unique.
std::optional<IntVector> normal_in_span(const Matrix& basis, const std::vector<Point>& face) {
  const std::size_t k = basis.size();
  Matrix conditions;
  for (std::size_t i = 1; i < face.size(); ++i) {
    Point diff = subtract(face[i], face[0]);
    Point row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(basis[j], diff);
    conditions.push_back(std::move(row));
  }
  auto ns = linalg::nullspace(conditions, k);
  if (ns.size() != 1) return std::nullopt;
  const std::size_t n = basis.front().size();
  Point v(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < n; ++c) v[c] += ns[0][j] * basis[j][c];
  return primitive_direction(v);
}

bool is_extreme(const std::vector<Point>& pts, std::size_t which) {
  const std::size_t n = pts[which].size();
  Matrix a(n + 1);
  Point b(n + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == which) continue;
    for (std::size_t c = 0; c < n; ++c) a[c].push_back(pts[i][c]);
    a[n].push_back(Rational(1));
  }
  for (std::size_t c = 0; c < n; ++c) b[c] = pts[which][c];
  b[n] = 1;
  if (a[n].empty()) return true;
  return !lp::feasible_nonnegative(a, b).has_value();
}

}  // namespace

void Polytope::rebuild_hrep() {
  hrep_.clear();
  for (const auto& f : facets_) hrep_.push_back(f.halfspace);
  for (const auto& e : equalities_) hrep_.push_back(e);
  std::sort(hrep_.begin(), hrep_.end());
}

Polytope Polytope::empty_set(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.dim_ = -1;
  if (ambient_dim > 0) {
    // Canonical infeasible pair: x_1 >= 1 and -x_1 >= 0.
    IntVector e(ambient_dim, 0);
    e[0] = 1;
    IntVector me(ambient_dim, 0);
    me[0] = -1;
    p.equalities_ = {HalfSpace{e, Rational(-1)}, HalfSpace{me, Rational(0)}};
  }
  p.rebuild_hrep();
  return p;
}

Polytope make_canonical(std::size_t ambient_dim, std::vector<Point> verts,
                        const std::vector<std::vector<std::size_t>>& tight_sets) {
  if (verts.empty()) return Polytope::empty_set(ambient_dim);
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.vertices_ = std::move(verts);
  const auto& vs = p.vertices_;
  Matrix basis = direction_basis(vs);
  p.dim_ = static_cast<int>(basis.size());

  auto perp = linalg::rref(linalg::nullspace(basis, ambient_dim)).rows;
  for (const auto& row : perp) {
    IntVector e = primitive_direction(row);
    Rational c = dot(e, vs.front());
    IntVector me(e);
    for (auto& x : me) x = -x;
    p.equalities_.push_back(HalfSpace{e, -c});
    p.equalities_.push_back(HalfSpace{me, c});
  }
  std::sort(p.equalities_.begin(), p.equalities_.end());

  if (p.dim_ > 0) {
    std::set<std::vector<std::size_t>> seen;
    for (auto ids : tight_sets) {
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      if (ids.empty() || ids.size() == vs.size()) continue;
      if (seen.count(ids)) continue;
      auto face = gather(vs, ids);
      if (linalg::affine_rank(face) != p.dim_ - 1) continue;
      auto normal = normal_in_span(basis, face);
      if (!normal) continue;
      const Rational level = dot(*normal, face.front());
      std::size_t outside = 0;
      while (std::binary_search(ids.begin(), ids.end(), outside)) ++outside;
      if (dot(*normal, vs[outside]) < level)
        for (auto& x : *normal) x = -x;
      // Re-derive the tight set from the normal so that facets are maximal.
      std::vector<std::size_t> tight;
      bool valid = true;
      const Rational lv = dot(*normal, face.front());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        Rational val = dot(*normal, vs[i]);
        if (val == lv) tight.push_back(i);
        else if (val < lv) valid = false;
      }
      if (!valid || seen.count(tight)) continue;
      seen.insert(ids);
      seen.insert(tight);
      p.facets_.push_back(Polytope::Facet{HalfSpace{*normal, -lv}, std::move(tight)});
    }
    std::sort(p.facets_.begin(), p.facets_.end(),
              [](const auto& a, const auto& b) { return a.halfspace < b.halfspace; });
  }
  p.rebuild_hrep();
  return p;
}

Polytope vertices(std::size_t n, const std::vector<HalfSpace>& hrep) {
  std::map<IntVector, Rational> tightest;
  bool infeasible = false;
  for (const auto& h : hrep) {
    if (h.normal.size() != n) fail(Errc::DimensionMismatch, "half-space normal length");
    const auto g = gcd_of(h.normal);
    if (g == 0) {
      if (h.offset < 0) infeasible = true;
      continue;
    }
    IntVector v(h.normal);
    for (auto& x : v) x /= g;
    Rational a = h.offset / Rational(static_cast<long>(g));
    auto it = tightest.find(v);
    if (it == tightest.end()) tightest.emplace(std::move(v), a);
    else if (a < it->second) it->second = a;
  }
  std::vector<HalfSpace> hs;
  IntMatrix normals;
  for (auto& [v, a] : tightest) {
    hs.push_back(HalfSpace{v, a});
    normals.push_back(v);
  }
  if (n > 0 && !lp::recession_cone_trivial(normals, n)) fail(Errc::UnboundedRegion, "half-space system has a recession direction");
  if (infeasible) return Polytope::empty_set(n);
  if (n == 0) return make_canonical(0, {Point{}}, {});

  std::set<Point> found;
  Matrix a(n, Point(n));
  Point b(n);
  for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = static_cast<long>(hs[idx[r]].normal[c]);
      b[r] = -hs[idx[r]].offset;
    }
    auto x = linalg::solve_square(a, b);
    if (!x) return;
    for (const auto& h : hs)
      if (!h.contains(*x)) return;
    found.insert(std::move(*x));
  });
  std::vector<Point> verts(found.begin(), found.end());
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& h : hs) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (h.on_boundary(verts[i])) ids.push_back(i);
    tight.push_back(std::move(ids));
  }
  return make_canonical(n, std::move(verts), tight);
}

Polytope halfspaces(const std::vector<Point>& input) {
  if (input.empty()) fail(Errc::InvalidArgument, "halfspaces needs at least one point");
  const std::size_t n = input.front().size();
  for (const auto& p : input)
    if (p.size() != n) fail(Errc::DimensionMismatch, "points of different lengths");
  std::vector<Point> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Matrix basis = direction_basis(pts);
  const std::size_t k = basis.size();
  if (k == 0) return make_canonical(n, pts, {});

  if (pts.size() > 2 * k + 2) {
    std::vector<Point> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (is_extreme(pts, i)) extreme.push_back(pts[i]);
    pts = std::move(extreme);
  }

  struct Candidate {
    IntVector normal;
    std::vector<std::size_t> tight;
  };
  std::vector<Candidate> cands;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
    auto face = gather(pts, idx);
    if (linalg::affine_rank(face) != static_cast<int>(k) - 1) return;
    auto normal = normal_in_span(basis, face);
    if (!normal) return;
    const Rational level = dot(*normal, face.front());
    bool below = false, above = false;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational val = dot(*normal, pts[i]);
      if (val < level) below = true;
      else if (val > level) above = true;
      else tight.push_back(i);
      if (below && above) return;
    }
    if (seen.count(tight)) return;
    seen.insert(tight);
    if (below)
      for (auto& x : *normal) x = -x;
    cands.push_back(Candidate{*normal, std::move(tight)});
  });

  // A point is a vertex iff its incident facet normals pin it inside the affine hull.
  std::vector<Point> verts;
  std::vector<std::size_t> remap(pts.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix incident;
    for (const auto& c : cands)
      if (std::binary_search(c.tight.begin(), c.tight.end(), i)) incident.push_back(to_point(c.normal));
    if (linalg::rank(incident) == k) {
      remap[i] = verts.size();
      verts.push_back(pts[i]);
    }
  }
  std::vector<std::vector<std::size_t>> tight_sets;
  for (const auto& c : cands) {
    std::vector<std::size_t> ids;
    for (auto i : c.tight)
      if (remap[i] != static_cast<std::size_t>(-1)) ids.push_back(remap[i]);
    tight_sets.push_back(std::move(ids));
  }
  return make_canonical(n, std::move(verts), tight_sets);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) fail(Errc::DimensionMismatch, "Minkowski sum operands");
  if (p.is_empty() || q.is_empty()) return Polytope::empty_set(p.ambient_dim());
  std::vector<Point> sums;
  sums.reserve(p.vrep().size() * q.vrep().size());
  for (const auto& u : p.vrep())
    for (const auto& w : q.vrep()) sums.push_back(add(u, w));
  return halfspaces(sums);
}

bool equals_minkowski_sum(const Polytope& r, const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim() || r.ambient_dim() != p.ambient_dim())
    fail(Errc::DimensionMismatch, "Minkowski sum operands");
  if (p.is_empty() || q.is_empty()) return r.is_empty();
  if (r.is_empty()) return false;
  std::set<Point> sums;
  for (const auto& u : p.vrep())
    for (const auto& w : q.vrep()) {
      Point s = add(u, w);
      if (!contains(r, s)) return false;
      sums.insert(std::move(s));
    }
  for (const auto& v : r.vrep())
    if (!sums.count(v)) return false;
  return true;
}

Rational support_value(const Polytope& p, const Point& xi) {
  if (p.is_empty()) fail(Errc::EmptyPolytope, "support value of the empty polytope");
  if (xi.size() != p.ambient_dim()) fail(Errc::DimensionMismatch, "support direction");
  Rational best = dot(p.vrep().front(), xi);
  for (const auto& v : p.vrep()) {
    Rational val = dot(v, xi);
    if (val < best) best = val;
  }
  return best;
}

Rational support_value(const Polytope& p, const IntVector& xi) { return support_value(p, to_point(xi)); }

Polytope scale(const Polytope& p, const Rational& c) {
  if (c < 0) fail(Errc::NegativeScalar, "scale factor " + c.get_str());
  if (p.is_empty()) return p;
  if (c == 0) return halfspaces({Point(p.ambient_dim(), Rational(0))});
  Polytope out(p);
  for (auto& v : out.vertices_)
    for (auto& x : v) x *= c;
  for (auto& f : out.facets_) f.halfspace.offset *= c;
  for (auto& e : out.equalities_) e.offset *= c;
  out.rebuild_hrep();
  return out;
}

Polytope translate(const Polytope& p, const Point& t) {
  if (t.size() != p.ambient_dim()) fail(Errc::DimensionMismatch, "translation vector");
  if (p.is_empty()) return p;
  Polytope out(p);
  for (auto& v : out.vertices_) v = add(v, t);
  for (auto& f : out.facets_) f.halfspace.offset -= dot(f.halfspace.normal, t);
  for (auto& e : out.equalities_) e.offset -= dot(e.normal, t);
  out.rebuild_hrep();
  return out;
}

bool contains(const Polytope& p, const Point& x, Membership mode) {
  if (x.size() != p.ambient_dim()) fail(Errc::DimensionMismatch, "membership point");
  if (p.is_empty()) return false;
  for (const auto& e : p.equalities())
    if (!e.contains(x)) return false;
  for (const auto& f : p.facet_list()) {
    const Rational val = dot(f.halfspace.normal, x) + f.halfspace.offset;
    if (val < 0) return false;
    if (mode == Membership::RelativeInterior && val == 0) return false;
  }
  return true;
}

namespace {

// Simplices (as vertex-id lists) of the pulling triangulation of a face:
// cone from the lexicographically smallest vertex over the opposite faces.
void pull_triangulate(const Polytope& p, const std::vector<std::size_t>& face, int face_dim,
                      std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t apex = face.front();
  if (face_dim == 0) {
    prefix.push_back(apex);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : p.facet_list()) {
    std::vector<std::size_t> s;
    std::set_intersection(face.begin(), face.end(), f.vertex_ids.begin(), f.vertex_ids.end(), std::back_inserter(s));
    if (s.empty() || s.size() == face.size() || s.front() == apex) continue;
    if (linalg::affine_rank(gather(p.vrep(), s)) != face_dim - 1) continue;
    subfaces.insert(std::move(s));
  }
  prefix.push_back(apex);
  for (const auto& s : subfaces) pull_triangulate(p, s, face_dim - 1, prefix, out);
  prefix.pop_back();
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

Rational volume(const Polytope& p) {
  if (!p.is_full_dimensional() || p.is_empty()) return 0;
  const std::size_t n = p.ambient_dim();
  if (n == 0) return 1;
  std::vector<std::size_t> all(p.vrep().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> prefix;
  pull_triangulate(p, all, static_cast<int>(n), prefix, simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    Matrix m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(subtract(p.vrep()[s[i]], p.vrep()[s[0]]));
    Rational d = linalg::determinant(std::move(m));
    total += d < 0 ? Rational(-d) : d;
  }
  return total / factorial(n);
}

std::vector<std::pair<IntVector, Polytope>> facets(const Polytope& p) {
  if (!p.is_full_dimensional() || p.is_empty()) fail(Errc::NotFullDimensional, "facets need a full-dimensional polytope");
  std::vector<std::pair<IntVector, Polytope>> out;
  for (const auto& f : p.facet_list()) {
    std::vector<Point> verts = gather(p.vrep(), f.vertex_ids);
    std::vector<std::vector<std::size_t>> tight;
    for (const auto& g : p.facet_list()) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < f.vertex_ids.size(); ++i)
        if (std::binary_search(g.vertex_ids.begin(), g.vertex_ids.end(), f.vertex_ids[i])) s.push_back(i);
      tight.push_back(std::move(s));
    }
    out.emplace_back(f.halfspace.normal, make_canonical(p.ambient_dim(), std::move(verts), tight));
  }
  return out;
}

Rational facet_lattice_volume(const Polytope& facet, const IntVector& normal) {
  const std::size_t n = facet.ambient_dim();
  if (normal.size() != n) fail(Errc::DimensionMismatch, "facet normal");
  if (gcd_of(normal) != 1) fail(Errc::InvalidArgument, "facet normal must be primitive");
  if (facet.is_empty()) fail(Errc::NotInHyperplane, "empty facet");
  const Rational level = dot(normal, facet.vrep().front());
  for (const auto& v : facet.vrep())
    if (dot(normal, v) != level) fail(Errc::NotInHyperplane, "vertex " + format_point(v) + " off the hyperplane");
  if (n == 1) return 1;
  IntMatrix basis = linalg::integer_kernel(Matrix{to_point(normal)}, n);
  Matrix cols = linalg::transpose(linalg::to_matrix(basis));  // n x (n-1)
  std::vector<Point> mapped;
  for (const auto& v : facet.vrep()) {
    auto y = linalg::solve_any(cols, subtract(v, facet.vrep().front()));
    mapped.push_back(std::move(*y));
  }
  return volume(halfspaces(mapped));
}

}  // namespace polyfam
