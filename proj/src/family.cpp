#include "polyfam/family.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "polyfam/error.hpp"
#include "polyfam/lattice.hpp"
#include "polyfam/linalg.hpp"
#include "polyfam/lp.hpp"

namespace polyfam {

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "verified-on-budget";
    case VerdictStatus::Refuted: return "refuted";
    case VerdictStatus::NoneFound: return "none-found";
    case VerdictStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

IntMatrix identity(std::size_t d) {
  IntMatrix m(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Matrix null_space(const Matrix& rows, std::size_t cols) {
  if (rows.empty()) return linalg::to_matrix(identity(cols));
  return linalg::nullspace(rows, cols);
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Sign-normalized so that the first nonzero entry is positive.
IntVector up_to_sign(IntVector v) {
  for (auto x : v) {
    if (x > 0) return v;
    if (x < 0) return negated(std::move(v));
  }
  return v;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Point to_param(const IntVector& v) { return to_point(v); }

}  // namespace

ParameterCone ParameterCone::from_inequalities(std::size_t dim, const IntMatrix& rows, IntMatrix lattice) {
  std::set<IntVector> unique;
  for (const auto& r : rows) {
    if (r.size() != dim) fail(Errc::DimensionMismatch, "cone inequality length");
    if (!is_zero(r)) unique.insert(primitive(r));
  }
  IntMatrix h(unique.begin(), unique.end());
  Matrix hm = linalg::to_matrix(h);
  if (!h.empty() && !lp::feasible_inequalities(hm, Point(h.size(), Rational(1))))
    fail(Errc::InvalidArgument, "parameter cone is not full-dimensional");

  ParameterCone c;
  c.dim_ = dim;
  c.lineality_ = h.empty() ? identity(dim) : linalg::integer_kernel(hm, dim);
  const std::size_t pointed = dim - c.lineality_.size();
  if (pointed > 0) {
    std::set<IntVector> rays;
    Matrix lin = linalg::to_matrix(c.lineality_);
    for_each_subset(h.size(), pointed - 1, [&](const std::vector<std::size_t>& s) {
      Matrix m = lin;
      for (auto i : s) m.push_back(hm[i]);
      auto ns = null_space(m, dim);
      if (ns.size() != 1) return;
      auto r = primitive_direction(ns[0]);
      bool nonneg = true, nonpos = true;
      for (const auto& row : h) {
        const auto v = dot(row, r);
        nonneg = nonneg && v >= 0;
        nonpos = nonpos && v <= 0;
      }
      if (nonneg)
        rays.insert(r);
      else if (nonpos)
        rays.insert(negated(r));
    });
    c.rays_.assign(rays.begin(), rays.end());
  }
  // Keep only facet-defining rows.
  const auto gens = c.generators();
  for (const auto& row : h) {
    Matrix tight;
    for (const auto& g : gens)
      if (dot(row, g) == 0) tight.push_back(to_point(g));
    if (linalg::rank(tight) + 1 == dim) c.hrep_.push_back(row);
  }
  if (lattice.empty()) lattice = identity(dim);
  if (lattice.size() != dim || linalg::rank(linalg::to_matrix(lattice)) != dim)
    fail(Errc::InvalidArgument, "lattice basis must have full rank");
  c.lattice_ = std::move(lattice);
  return c;
}

ParameterCone ParameterCone::from_generators(std::size_t dim, const std::vector<Point>& generators, IntMatrix lattice) {
  if (linalg::rank(generators) != dim) fail(Errc::InvalidArgument, "cone generators do not span the space");
  std::set<IntVector> rows;
  for_each_subset(generators.size(), dim - 1, [&](const std::vector<std::size_t>& s) {
    Matrix m;
    for (auto i : s) m.push_back(generators[i]);
    auto ns = null_space(m, dim);
    if (ns.size() != 1) return;
    auto n = primitive_direction(ns[0]);
    bool nonneg = true, nonpos = true;
    for (const auto& g : generators) {
      const auto v = dot(n, g);
      nonneg = nonneg && v >= 0;
      nonpos = nonpos && v <= 0;
    }
    if (nonneg)
      rows.insert(n);
    else if (nonpos)
      rows.insert(negated(n));
  });
  return from_inequalities(dim, IntMatrix(rows.begin(), rows.end()), std::move(lattice));
}

IntMatrix ParameterCone::generators() const {
  IntMatrix g = lineality_;
  for (const auto& l : lineality_) g.push_back(negated(l));
  for (const auto& r : rays_) g.push_back(r);
  return g;
}

IntVector ParameterCone::deep_point() const {
  IntVector s(dim_, 0);
  for (const auto& g : generators())
    for (std::size_t i = 0; i < dim_; ++i) s[i] += g[i];
  return s;
}

bool ParameterCone::contains(const Point& g) const {
  if (g.size() != dim_) fail(Errc::DimensionMismatch, "parameter length");
  for (const auto& h : hrep_)
    if (dot(h, g) < 0) return false;
  return true;
}

bool ParameterCone::contains_interior(const Point& g) const {
  if (g.size() != dim_) fail(Errc::DimensionMismatch, "parameter length");
  for (const auto& h : hrep_)
    if (dot(h, g) <= 0) return false;
  return true;
}

bool ParameterCone::in_lattice(const Point& g) const {
  if (g.size() != dim_) fail(Errc::DimensionMismatch, "parameter length");
  auto c = linalg::solve_square(linalg::transpose(linalg::to_matrix(lattice_)), g);
  return c && is_integral(*c);
}

std::vector<HalfSpace> LinearFamily::halfspaces(const Point& g) const {
  if (g.size() != param_dim()) fail(Errc::DimensionMismatch, "parameter length");
  std::vector<HalfSpace> h;
  h.reserve(normals.size());
  for (std::size_t j = 0; j < normals.size(); ++j) h.push_back(HalfSpace{normals[j], -dot(offset_map[j], g)});
  return h;
}

Polytope LinearFamily::evaluate(const Point& g) const {
  if (!cone.contains(g)) fail(Errc::OutsideCone, "parameter " + format_point(g) + " lies outside the cone");
  return evaluate_unchecked(g);
}

Polytope LinearFamily::evaluate_unchecked(const Point& g) const { return vertices(ambient_dim, halfspaces(g)); }

void validate(const LinearFamily& f) {
  if (f.offset_map.size() != f.normals.size()) fail(Errc::InvalidArgument, "offset map needs one row per normal");
  for (const auto& w : f.normals) {
    if (w.size() != f.ambient_dim) fail(Errc::DimensionMismatch, "normal length differs from ambient dimension");
    if (is_zero(w) || gcd_of(w) != 1) fail(Errc::InvalidArgument, "normal " + format_int_vector(w) + " is not primitive");
  }
  for (const auto& row : f.offset_map)
    if (row.size() != f.param_dim()) fail(Errc::DimensionMismatch, "offset map row length");
}

Verdict verify_linearity(const LinearFamily& f, std::int64_t budget, std::uint64_t seed) {
  Verdict v;
  v.budget = budget;
  const auto gens = f.cone.generators();
  const std::size_t d = f.param_dim();
  std::map<Point, Polytope> cache;
  auto eval = [&](const Point& g) -> const Polytope& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, f.evaluate_unchecked(g)).first;
    return it->second;
  };
  const Point deep = to_param(f.cone.deep_point());
  auto normal_set = [](const Polytope& p) {
    std::set<IntVector> s;
    for (const auto& fc : p.facet_list()) s.insert(fc.halfspace.normal);
    return s;
  };

  struct Sample {
    Point g1, g2;
    std::int64_t c1, c2;
  };
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) samples.push_back({to_param(gens[i]), to_param(gens[j]), 1, 1});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(0, 3), mult(1, 3);
  auto random_point = [&] {
    while (true) {
      Point g(d, Rational(0));
      bool nonzero = false;
      for (const auto& gen : gens) {
        const int c = coef(rng);
        if (c == 0) continue;
        nonzero = true;
        g = add(g, scaled(to_param(gen), Rational(c)));
      }
      if (nonzero) return g;
    }
  };
  while (static_cast<std::int64_t>(samples.size()) < budget)
    samples.push_back({random_point(), random_point(), mult(rng), mult(rng)});
  if (static_cast<std::int64_t>(samples.size()) > budget) samples.resize(static_cast<std::size_t>(std::max<std::int64_t>(budget, 0)));

  try {
    const auto& reference = eval(deep);
    if (!reference.is_full_dimensional()) {
      v.status = VerdictStatus::Refuted;
      v.witness = {deep};
      v.detail = "Delta is not full-dimensional at an interior parameter";
      return v;
    }
    const auto normals = normal_set(reference);
    for (const auto& s : samples) {
      const Point g = add(scaled(s.g1, Rational(s.c1)), scaled(s.g2, Rational(s.c2)));
      ++v.checks;
      if (!equals_minkowski_sum(eval(g), scale(eval(s.g1), Rational(s.c1)), scale(eval(s.g2), Rational(s.c2)))) {
        v.status = VerdictStatus::Refuted;
        v.witness = {s.g1, s.g2, Point{Rational(s.c1), Rational(s.c2)}};
        v.detail = "Delta(c1 g1 + c2 g2) differs from c1 Delta(g1) + c2 Delta(g2)";
        return v;
      }
      const Point inner = add(g, deep);
      const auto& p = eval(inner);
      ++v.checks;
      if (!p.is_full_dimensional() || normal_set(p) != normals) {
        v.status = VerdictStatus::Refuted;
        v.witness = {deep, inner};
        v.detail = "facet normals differ between interior parameters";
        return v;
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::UnboundedRegion) throw;
    v.status = VerdictStatus::Refuted;
    v.detail = "Delta is unbounded for some sampled parameter";
    return v;
  }
  v.status = VerdictStatus::Verified;
  return v;
}

Fan family_fan(const LinearFamily& f, std::int64_t budget) {
  const auto v = verify_linearity(f, budget);
  if (!v.verified()) fail(Errc::LinearityNotCertified, v.detail);
  return normal_fan(f.evaluate(to_param(f.cone.deep_point())));
}

LinearFamily toric_family(const Fan& fan) {
  const auto props = fan_properties(fan);
  if (!props.simplicial) fail(Errc::FanNotSimplicial, "toric family needs a simplicial fan");
  if (!props.complete) fail(Errc::FanNotComplete, "toric family needs a complete fan");
  const std::size_t n = fan.ambient_dim;
  const std::size_t s = fan.rays.size();
  IntMatrix rows;
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      const auto& sa = fan.max_cones[a];
      const auto& sb = fan.max_cones[b];
      std::vector<std::size_t> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      if (common.size() + 1 != n) continue;
      std::size_t v = 0, w = 0;
      for (auto i : sa)
        if (!std::binary_search(common.begin(), common.end(), i)) v = i;
      for (auto i : sb)
        if (!std::binary_search(common.begin(), common.end(), i)) w = i;
      // Express the far ray w in the basis common + {v}.
      std::vector<std::size_t> basis = common;
      basis.push_back(v);
      Matrix m(n, Point(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = fan.rays[basis[c]][r];
      auto coeffs = linalg::solve_square(m, to_point(fan.rays[w]));
      if (!coeffs) fail(Errc::FanNotSimplicial, "degenerate wall");
      Point ineq(s, Rational(0));
      ineq[w] += 1;
      for (std::size_t c = 0; c < n; ++c) ineq[basis[c]] -= (*coeffs)[c];
      rows.push_back(primitive_direction(ineq));
    }
  LinearFamily f;
  f.kind = "toric";
  f.cone = ParameterCone::from_inequalities(s, rows);
  f.ambient_dim = n;
  f.normals = fan.rays;
  f.offset_map.assign(s, Point(s, Rational(0)));
  for (std::size_t i = 0; i < s; ++i) f.offset_map[i][i] = -1;
  for (std::size_t i = 0; i < n; ++i) f.coordinate_names.push_back("x" + std::to_string(i + 1));
  return f;
}

namespace {

// Interlacing constraints for one GZ block whose top row is either the
// parameter vector (top_vars empty) or the variables top_vars.
struct GzBuilder {
  std::size_t n;
  std::size_t total_vars;
  std::size_t param_dim;
  IntMatrix normals;
  Matrix offsets;

  void add_block(std::size_t first_var, const std::vector<std::size_t>& top_vars,
                 const std::vector<std::size_t>& lambda_params) {
    // Row k occupies k consecutive variables; rows run from n-1 down to 1.
    std::vector<std::vector<std::size_t>> row_vars(n + 1);
    std::size_t next = first_var;
    for (std::size_t k = n - 1; k >= 1; --k) {
      for (std::size_t i = 0; i < k; ++i) row_vars[k].push_back(next++);
    }
    for (std::size_t k = n - 1; k >= 1; --k) {
      for (std::size_t i = 0; i < k; ++i) {
        const auto x = row_vars[k][i];
        IntVector lower(total_vars, 0), upper(total_vars, 0);
        Point lower_off(param_dim, Rational(0)), upper_off(param_dim, Rational(0));
        lower[x] = 1;
        upper[x] = -1;
        if (k + 1 == n) {
          if (!top_vars.empty()) {
            lower[top_vars[i]] = -1;
            upper[top_vars[i + 1]] = 1;
          } else {
            lower_off[lambda_params[i]] = 1;
            upper_off[lambda_params[i + 1]] = -1;
          }
        } else {
          lower[row_vars[k + 1][i]] = -1;
          upper[row_vars[k + 1][i + 1]] = 1;
        }
        normals.push_back(lower);
        offsets.push_back(lower_off);
        normals.push_back(upper);
        offsets.push_back(upper_off);
      }
    }
  }
};

std::vector<std::string> gz_names(std::size_t n, const std::string& suffix) {
  std::vector<std::string> names;
  for (std::size_t k = n - 1; k >= 1; --k)
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i) + std::to_string(k) + suffix);
  return names;
}

}  // namespace

LinearFamily gz_family(std::size_t n) {
  if (n < 2) fail(Errc::InvalidArgument, "GZ family needs n >= 2");
  const std::size_t m = n * (n - 1) / 2;
  GzBuilder b{n, m, n, {}, {}};
  std::vector<std::size_t> params(n);
  for (std::size_t i = 0; i < n; ++i) params[i] = i;
  b.add_block(0, {}, params);
  IntMatrix cone_rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector r(n, 0);
    r[i] = -1;
    r[i + 1] = 1;
    cone_rows.push_back(r);
  }
  LinearFamily f;
  f.kind = "gz";
  f.cone = ParameterCone::from_inequalities(n, cone_rows);
  f.ambient_dim = m;
  f.normals = std::move(b.normals);
  f.offset_map = std::move(b.offsets);
  f.coordinate_names = gz_names(n, "");
  return f;
}

std::vector<HalfSpace> gz_halfspaces(const IntVector& lambda) {
  return gz_family(lambda.size()).halfspaces(to_point(lambda));
}

StrictShiftResult gz_strict_shift_check(const IntVector& lambda) {
  const std::size_t n = lambda.size();
  if (n < 2) fail(Errc::InvalidArgument, "GZ check needs n >= 2");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda[i] > lambda[i + 1]) fail(Errc::InvalidArgument, "lambda must be dominant (increasing)");
  const auto family = gz_family(n);
  StrictShiftResult r;
  r.shifted_lambda = lambda;
  for (std::size_t i = 0; i < n; ++i)
    r.shifted_lambda[i] += static_cast<std::int64_t>(n) - 1 - 2 * static_cast<std::int64_t>(i);
  r.strict_count = count_solutions(family.ambient_dim, family.halfspaces(to_point(lambda)), true);
  r.shifted_count = count_solutions(family.ambient_dim, family.halfspaces(to_point(r.shifted_lambda)), false);
  r.equal = r.strict_count == r.shifted_count;
  return r;
}

std::vector<std::vector<std::size_t>> weyl_orbits(const IntMatrix& normals) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < normals.size(); ++i) index.emplace(normals[i], i);
  std::vector<int> orbit_of(normals.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<std::size_t> stack{i};
    orbit_of[i] = id;
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      orbits.back().push_back(cur);
      for (std::size_t t = 0; t + 1 < normals[cur].size(); ++t) {
        IntVector sw = normals[cur];
        std::swap(sw[t], sw[t + 1]);
        auto it = index.find(sw);
        if (it == index.end())
          fail(Errc::FanNotWeylInvariant, "normal set is not invariant under coordinate permutations");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          stack.push_back(it->second);
        }
      }
    }
    std::sort(orbits.back().begin(), orbits.back().end());
  }
  return orbits;
}

LinearFamily fibered_family(const LinearFamily& base, std::size_t multiplicity) {
  const std::size_t n = base.ambient_dim;
  const std::size_t s = base.normals.size();
  if (n < 2) fail(Errc::InvalidArgument, "fibered family needs rank n >= 2");
  if (multiplicity < 1) fail(Errc::InvalidArgument, "fiber multiplicity must be positive");
  if (base.param_dim() != s) fail(Errc::InvalidArgument, "base family must be of toric form");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (base.offset_map[i][j] != (i == j ? -1 : 0)) fail(Errc::InvalidArgument, "base family must be of toric form");
  const auto orbits = weyl_orbits(base.normals);
  const std::size_t o = orbits.size();
  std::vector<std::size_t> orbit_of(s);
  for (std::size_t k = 0; k < o; ++k)
    for (auto i : orbits[k]) orbit_of[i] = k;

  const std::size_t m = n * (n - 1) / 2;
  const std::size_t total = n + multiplicity * m;
  GzBuilder b{n, total, o, {}, {}};
  for (std::size_t i = 0; i < s; ++i) {
    IntVector w(total, 0);
    std::copy(base.normals[i].begin(), base.normals[i].end(), w.begin());
    Point off(o, Rational(0));
    off[orbit_of[i]] = -1;
    b.normals.push_back(w);
    b.offsets.push_back(off);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector w(total, 0);
    w[i] = -1;
    w[i + 1] = 1;
    b.normals.push_back(w);
    b.offsets.emplace_back(o, Rational(0));
  }
  std::vector<std::size_t> lambda_vars(n);
  for (std::size_t i = 0; i < n; ++i) lambda_vars[i] = i;
  for (std::size_t block = 0; block < multiplicity; ++block) b.add_block(n + block * m, lambda_vars, {});

  IntMatrix cone_rows;
  for (const auto& h : base.cone.hrep()) {
    IntVector r(o, 0);
    for (std::size_t i = 0; i < s; ++i) r[orbit_of[i]] += h[i];
    if (!is_zero(r)) cone_rows.push_back(r);
  }
  LinearFamily f;
  f.kind = "fibered";
  f.cone = ParameterCone::from_inequalities(o, cone_rows);
  f.ambient_dim = total;
  f.normals = std::move(b.normals);
  f.offset_map = std::move(b.offsets);
  for (std::size_t i = 1; i <= n; ++i) f.coordinate_names.push_back("l" + std::to_string(i));
  for (std::size_t block = 0; block < multiplicity; ++block) {
    auto names = gz_names(n, block == 0 ? "" : std::string(block, '\''));
    f.coordinate_names.insert(f.coordinate_names.end(), names.begin(), names.end());
  }
  return f;
}

ChamberedFamily projected_family(const ParameterCone& source, const Matrix& projection) {
  const std::size_t dt = source.dim();
  const std::size_t d = projection.size();
  for (const auto& row : projection)
    if (row.size() != dt) fail(Errc::DimensionMismatch, "projection has the wrong number of columns");
  if (linalg::rank(projection) != d) fail(Errc::InvalidArgument, "projection must be surjective");

  ChamberedFamily out;
  out.fiber_basis = linalg::integer_kernel(projection, dt);
  const std::size_t k = out.fiber_basis.size();
  out.right_inverse.assign(dt, Point(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Point e(d, Rational(0));
    e[j] = 1;
    auto col = linalg::solve_any(projection, e);
    if (!col) fail(Errc::InvalidArgument, "projection must be surjective");
    for (std::size_t i = 0; i < dt; ++i) out.right_inverse[i][j] = (*col)[i];
  }

  LinearFamily fiber;
  fiber.kind = "projected";
  fiber.ambient_dim = k;
  for (const auto& g : source.hrep()) {
    IntVector c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = dot(g, out.fiber_basis[j]);
    if (is_zero(c)) continue;
    const auto content = gcd_of(c);
    for (auto& x : c) x /= content;
    Point row(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < dt; ++i) row[j] -= Rational(g[i]) * out.right_inverse[i][j];
      row[j] /= content;
    }
    fiber.normals.push_back(c);
    fiber.offset_map.push_back(row);
  }
  if (k > 0 && !lp::recession_cone_trivial(fiber.normals, k))
    fail(Errc::UnboundedFiber, "fibers of the projection are unbounded");
  for (std::size_t j = 0; j < k; ++j) fiber.coordinate_names.push_back("y" + std::to_string(j + 1));

  const auto gens = source.generators();
  auto project = [&](const IntVector& z) {
    Point p(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) p[j] = dot(z, projection[j]);
    return p;
  };
  std::vector<Point> image_gens;
  for (const auto& g : gens) image_gens.push_back(project(g));
  const auto image = ParameterCone::from_generators(d, image_gens);
  fiber.cone = image;
  out.naive = fiber;

  // Faces of the source cone, each as the set of generators it contains.
  const auto& h = source.hrep();
  if (h.size() > 20) fail(Errc::InvalidArgument, "source cone has too many facets");
  std::set<std::vector<std::size_t>> faces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.size()); ++mask) {
    std::vector<std::size_t> face;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool tight = true;
      for (std::size_t r = 0; r < h.size() && tight; ++r)
        if ((mask >> r & 1) && dot(h[r], gens[g]) != 0) tight = false;
      if (tight) face.push_back(g);
    }
    faces.insert(face);
  }
  std::vector<ParameterCone> projected;
  std::set<IntVector> hyperplanes;
  for (const auto& face : faces) {
    std::vector<Point> pg;
    for (auto g : face) pg.push_back(image_gens[g]);
    if (pg.empty() || linalg::rank(pg) != d) continue;
    auto c = ParameterCone::from_generators(d, pg);
    for (const auto& row : c.hrep()) hyperplanes.insert(up_to_sign(row));
    projected.push_back(std::move(c));
  }
  const IntMatrix planes(hyperplanes.begin(), hyperplanes.end());

  // Open cells of the arrangement inside C, by depth-first sign assignment.
  std::map<std::vector<std::size_t>, Point> labels;
  Matrix base_rows;
  for (const auto& row : image.hrep()) base_rows.push_back(to_point(row));
  std::function<void(std::size_t, Matrix&)> descend = [&](std::size_t i, Matrix& rows) {
    auto witness = lp::feasible_inequalities(rows, Point(rows.size(), Rational(1)));
    if (!rows.empty() && !witness) return;
    if (i == planes.size()) {
      const Point x = witness ? *witness : Point(d, Rational(0));
      std::vector<std::size_t> label;
      for (std::size_t c = 0; c < projected.size(); ++c)
        if (projected[c].contains(x)) label.push_back(c);
      labels.emplace(label, x);
      return;
    }
    for (int sign : {1, -1}) {
      Point r = to_point(planes[i]);
      if (sign < 0) r = scaled(r, Rational(-1));
      rows.push_back(r);
      descend(i + 1, rows);
      rows.pop_back();
    }
  };
  descend(0, base_rows);

  for (const auto& [label, witness] : labels) {
    IntMatrix rows;
    for (auto c : label)
      for (const auto& row : projected[c].hrep()) rows.push_back(row);
    Chamber ch;
    ch.cone = ParameterCone::from_inequalities(d, rows);
    ch.family = fiber;
    ch.family.cone = ch.cone;
    out.chambers.push_back(std::move(ch));
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.cone.hrep() < b.cone.hrep(); });
  return out;
}

}  // namespace polyfam
