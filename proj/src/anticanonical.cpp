#include "polyfam/anticanonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyfam/algebra.hpp"
#include "polyfam/error.hpp"
#include "polyfam/lattice.hpp"
#include "polyfam/linalg.hpp"

namespace polyfam {

namespace {

std::int64_t idot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool in_cone(const IntMatrix& hrep, const IntVector& g, bool strict) {
  for (const auto& h : hrep) {
    const std::int64_t v = idot(h, g);
    if (v < 0 || (strict && v == 0)) return false;
  }
  return true;
}

IntVector isub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector iadd(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Lattice points of B*S, the B-fold simplex on 0 and the cone generators.
std::vector<IntVector> simplex_points(const ParameterCone& cone, std::int64_t budget) {
  const std::size_t d = cone.dim();
  const Matrix basis_t = linalg::transpose(linalg::to_matrix(cone.lattice()));
  std::vector<Point> verts{Point(d, Rational(0))};
  for (const auto& g : cone.generators()) {
    auto y = linalg::solve_square(basis_t, to_point(g));
    if (!y) fail(Errc::InvalidArgument, "lattice basis is singular");
    verts.push_back(scaled(*y, Rational(static_cast<long>(budget))));
  }
  const Polytope s = halfspaces(verts);
  IntVector lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = to_int64(ceil_of(mn));
    hi[j] = to_int64(floor_of(mx));
  }
  std::vector<IntVector> out;
  if (d == 0) return out;
  IntVector y = lo;
  while (true) {
    Point yp = to_point(y);
    if (contains(s, yp)) {
      IntVector g(d, 0);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) g[j] += y[k] * cone.lattice()[k][j];
      out.push_back(std::move(g));
    }
    std::size_t j = 0;
    while (j < d && y[j] == hi[j]) y[j] = lo[j], ++j;
    if (j == d) break;
    ++y[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Counts memoized across candidates of one search.
class CountCache {
 public:
  explicit CountCache(const LinearFamily& f) : f_(f) {}
  std::int64_t count_at(const IntVector& g) {
    auto it = count_.find(g);
    if (it != count_.end()) return it->second;
    return count_[g] = count(f_.evaluate(to_point(g)));
  }
  std::int64_t interior_at(const IntVector& g) {
    auto it = interior_.find(g);
    if (it != interior_.end()) return it->second;
    return interior_[g] = count_interior(f_.evaluate(to_point(g)));
  }

 private:
  const LinearFamily& f_;
  std::map<IntVector, std::int64_t> count_;
  std::map<IntVector, std::int64_t> interior_;
};

struct Prepared {
  std::vector<IntVector> points;   // B*S
  std::vector<IntVector> open;     // B*S within C°
  std::vector<IntVector> closed;   // B*S within C
  bool full_dimensional = false;
};

Prepared prepare(const LinearFamily& f, std::int64_t budget) {
  Prepared p;
  p.points = simplex_points(f.cone, budget);
  for (const auto& g : p.points) {
    if (in_cone(f.cone.hrep(), g, true)) p.open.push_back(g);
    if (in_cone(f.cone.hrep(), g, false)) p.closed.push_back(g);
  }
  p.full_dimensional = f.evaluate(to_point(f.cone.deep_point())).is_full_dimensional();
  return p;
}

std::vector<IntVector> test_set_of(const LinearFamily& f, const Prepared& p, const IntVector& kappa) {
  std::set<IntVector> out;
  for (const auto& g : p.open)
    if (in_cone(f.cone.hrep(), isub(g, kappa), false)) out.insert(g);
  for (const auto& q : p.closed) {
    IntVector g = iadd(kappa, q);
    if (in_cone(f.cone.hrep(), g, true)) out.insert(std::move(g));
  }
  return {out.begin(), out.end()};
}

IntVector lattice_kappa(const LinearFamily& f, const Point& kappa) {
  if (kappa.size() != f.param_dim()) fail(Errc::DimensionMismatch, "kappa length");
  if (!is_integral(kappa) || !f.cone.in_lattice(kappa))
    fail(Errc::KappaNotInLattice, "kappa " + format_point(kappa) + " is not in the parameter lattice");
  return to_int_vector(kappa);
}

AnticanonicalVerdict verify(const LinearFamily& f, const Prepared& p, const IntVector& kappa, std::int64_t budget,
                            CountCache& cache) {
  AnticanonicalVerdict v;
  v.kappa = to_point(kappa);
  v.budget = budget;
  if (!p.full_dimensional) {
    v.detail = "polytopes of the family are not full-dimensional on the open cone";
    return v;
  }
  const auto tests = test_set_of(f, p, kappa);
  if (tests.empty()) {
    v.detail = "empty test set";
    return v;
  }
  for (const auto& g : tests) {
    v.tested.push_back(to_point(g));
    const std::int64_t inner = cache.interior_at(g);
    const std::int64_t shifted = cache.count_at(isub(g, kappa));
    if (inner != shifted) {
      v.status = VerdictStatus::Refuted;
      v.witness = AnticanonicalWitness{to_point(g), shifted, inner};
      return v;
    }
  }
  v.status = VerdictStatus::Verified;
  return v;
}

Rational norm2(const Point& p) {
  Rational s = 0;
  for (const auto& x : p) s += x * x;
  return s;
}

/// Lineality directions whose polytopes are lattice translations; classes
/// are taken modulo their span, otherwise no classes are merged.
Matrix integral_lineality(const LinearFamily& f) {
  Matrix out;
  for (const auto& l : f.cone.lineality()) {
    const Polytope p = f.evaluate(to_point(l));
    if (p.vrep().size() != 1 || !is_integral(p.vrep().front())) return {};
    out.push_back(to_point(l));
  }
  return out;
}

/// Canonical class key: the component of g orthogonal to the lineality span.
Point class_key(const Matrix& lin, const Point& g) {
  if (lin.empty()) return g;
  Matrix gram(lin.size(), Point(lin.size()));
  Point rhs;
  for (std::size_t i = 0; i < lin.size(); ++i) {
    for (std::size_t j = 0; j < lin.size(); ++j) gram[i][j] = dot(lin[i], lin[j]);
    rhs.push_back(dot(lin[i], g));
  }
  auto c = linalg::solve_square(gram, rhs);
  Point key = g;
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (std::size_t j = 0; j < key.size(); ++j) key[j] -= (*c)[i] * lin[i][j];
  return key;
}

bool representative_less(const Point& a, const Point& b) {
  const Rational na = norm2(a), nb = norm2(b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

std::vector<Point> anticanonical_test_set(const LinearFamily& f, const Point& kappa, std::int64_t budget) {
  const IntVector k = lattice_kappa(f, kappa);
  const Prepared p = prepare(f, budget);
  std::vector<Point> out;
  for (const auto& g : test_set_of(f, p, k)) out.push_back(to_point(g));
  return out;
}

AnticanonicalVerdict is_anticanonical(const LinearFamily& f, const Point& kappa, std::int64_t budget) {
  const IntVector k = lattice_kappa(f, kappa);
  const Prepared p = prepare(f, budget);
  CountCache cache(f);
  return verify(f, p, k, budget, cache);
}

AnticanonicalSearch find_anticanonical(const LinearFamily& f, std::int64_t radius, std::int64_t budget) {
  AnticanonicalSearch s;
  s.radius = radius;
  s.budget = budget;
  const std::size_t d = f.param_dim();
  const Matrix lin = integral_lineality(f);
  std::map<Point, Point> classes;  // key -> representative
  IntVector y(d, -radius);
  while (d > 0) {
    Point kappa(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) kappa[j] += Rational(static_cast<long>(y[k] * f.cone.lattice()[k][j]));
    ++s.points_scanned;
    Point key = class_key(lin, kappa);
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(std::move(key), kappa);
    else if (representative_less(kappa, it->second))
      it->second = kappa;
    std::size_t j = 0;
    while (j < d && y[j] == radius) y[j] = -radius, ++j;
    if (j == d) break;
    ++y[j];
  }
  std::vector<Point> reps;
  for (const auto& [key, rep] : classes) reps.push_back(rep);
  std::sort(reps.begin(), reps.end());
  const Prepared p = prepare(f, budget);
  CountCache cache(f);
  for (const auto& rep : reps) {
    ++s.classes_tested;
    if (verify(f, p, to_int_vector(rep), budget, cache).verified()) s.candidates.push_back(rep);
  }
  if (s.candidates.size() > 1) {
    std::string list;
    for (const auto& c : s.candidates) list += " " + format_point(c);
    fail(Errc::UniquenessViolation, "several anticanonical classes survive:" + list);
  }
  return s;
}

bool single_interior_point_check(const LinearFamily& f, const Point& kappa) {
  if (kappa.size() != f.param_dim()) fail(Errc::DimensionMismatch, "kappa length");
  if (!f.cone.contains_interior(kappa))
    fail(Errc::KappaNotInteriorOfCone, "kappa " + format_point(kappa) + " is not in the open parameter cone");
  return count_interior(f.evaluate(kappa)) == 1;
}

bool is_fano(const LinearFamily& f, const Point& kappa) {
  if (kappa.size() != f.param_dim()) fail(Errc::DimensionMismatch, "kappa length");
  return f.cone.contains_interior(kappa);
}

std::vector<Point> interior_samples(const LinearFamily& f, std::size_t count) {
  const Point star = to_point(f.cone.deep_point());
  const auto gens = f.cone.generators();
  std::vector<Point> out{star};
  for (std::size_t k = 1; out.size() < count; ++k) {
    const auto& g = gens[(k - 1) % gens.size()];
    out.push_back(add(star, scaled(to_point(g), Rational(static_cast<long>(k)))));
  }
  return out;
}

RaySumResult ray_sum_check(const LinearFamily& f, const Point& kappa, std::vector<Point> samples) {
  if (kappa.size() != f.param_dim()) fail(Errc::DimensionMismatch, "kappa length");
  const Verdict lin = verify_linearity(f, 20);
  if (!lin.verified()) fail(Errc::LinearityNotCertified, "the family failed the linearity check: " + lin.detail);
  if (samples.empty()) samples = interior_samples(f);
  const auto poly = volume_polynomial(f);
  const auto derivative = directional_derivative(poly, kappa);
  RaySumResult r;
  r.ok = true;
  for (const auto& g : samples) {
    if (!f.cone.contains_interior(g)) fail(Errc::OutsideCone, "sample " + format_point(g) + " is not in the open cone");
    RaySumSample s;
    s.gamma = g;
    s.derivative = derivative.evaluate(g);
    s.facet_volumes = 0;
    for (const auto& [normal, facet] : facets(f.evaluate(g))) s.facet_volumes += facet_lattice_volume(facet, normal);
    if (s.derivative != s.facet_volumes) r.ok = false;
    r.samples.push_back(std::move(s));
  }
  return r;
}

bool same_class(const LinearFamily& f, const Point& a, const Point& b) {
  return class_key(integral_lineality(f), a) == class_key(integral_lineality(f), b);
}

FiberedComparison fibered_comparison(const LinearFamily& f, std::size_t multiplicity, std::int64_t radius,
                                     std::int64_t budget) {
  FiberedComparison c;
  c.multiplicity = multiplicity;
  c.claimed = Point(f.param_dim(), Rational(1));
  c.search = find_anticanonical(f, radius, budget);
  if (c.search.candidates.empty()) {
    c.note = "discrepancy: no anticanonical parameter survives; claimed " + format_point(c.claimed);
  } else if (same_class(f, c.search.candidates.front(), c.claimed)) {
    c.agrees = true;
    c.note = "agreement: survivor " + format_point(c.search.candidates.front()) + " matches claimed " +
             format_point(c.claimed);
  } else {
    c.note = "discrepancy: survivor " + format_point(c.search.candidates.front()) + " differs from claimed " +
             format_point(c.claimed);
  }
  return c;
}

}  // namespace polyfam
