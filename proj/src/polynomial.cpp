#include "polyfam/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "polyfam/error.hpp"
#include "polyfam/linalg.hpp"

namespace polyfam {

namespace {

Integer multi_factorial(const Exponent& e) {
  Integer r = 1;
  for (int k : e) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    r *= f;
  }
  return r;
}

}  // namespace

Rational HomogeneousPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) fail(Errc::DimensionMismatch, "exponent length");
  if (std::accumulate(e.begin(), e.end(), 0) != degree_) fail(Errc::InvalidArgument, "term degree differs");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogeneousPolynomial::evaluate(const Point& x) const {
  if (x.size() != num_vars_) fail(Errc::DimensionMismatch, "evaluation point length");
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * monomial_value(e, x);
  return s;
}

HomogeneousPolynomial HomogeneousPolynomial::partial(std::size_t i) const {
  HomogeneousPolynomial d(num_vars_, std::max(degree_ - 1, 0));
  if (degree_ == 0) return d;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent r = e;
    --r[i];
    d.add_term(r, c * e[i]);
  }
  return d;
}

std::vector<Exponent> monomials(std::size_t d, int k) {
  std::vector<Exponent> out;
  if (d == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponent e(d, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == d) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

Rational monomial_value(const Exponent& e, const Point& x) {
  Rational r = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) r *= x[i];
  return r;
}

HomogeneousPolynomial directional_derivative(const HomogeneousPolynomial& f, const Point& v) {
  if (v.size() != f.num_vars()) fail(Errc::DimensionMismatch, "direction length");
  HomogeneousPolynomial out(f.num_vars(), std::max(f.degree() - 1, 0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto d = f.partial(i);
    for (const auto& [e, c] : d.terms()) out.add_term(e, c * v[i]);
  }
  return out;
}

GradedAlgebraSummary graded_dimensions(const HomogeneousPolynomial& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "the algebra of the zero polynomial is not graded by f");
  const int n = f.degree();
  const std::size_t d = f.num_vars();
  GradedAlgebraSummary s;
  for (int k = 0; k <= n; ++k) {
    const auto rows = monomials(d, k);
    const auto cols = monomials(d, n - k);
    Matrix m(rows.size(), Point(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Exponent e(d);
        for (std::size_t i = 0; i < d; ++i) e[i] = rows[r][i] + cols[c][i];
        m[r][c] = f.coefficient(e) * Rational(multi_factorial(e));
      }
    s.dims.push_back(static_cast<std::int64_t>(linalg::rank_fraction_free(m)));
  }
  s.duality_ok = true;
  for (int k = 0; k <= n; ++k)
    if (s.dims[static_cast<std::size_t>(k)] != s.dims[static_cast<std::size_t>(n - k)]) s.duality_ok = false;
  return s;
}

bool class_equal(const HomogeneousPolynomial& f, const Point& v, const Point& w) {
  return directional_derivative(f, subtract(v, w)).is_zero();
}

HomogeneousPolynomial interpolate_homogeneous(std::size_t num_vars, int degree,
                                              const std::function<std::optional<Point>()>& next_candidate,
                                              const std::function<Rational(const Point&)>& value) {
  const auto basis = monomials(num_vars, degree);
  const std::size_t target = basis.size();
  auto row_of = [&](const Point& x) {
    Point r;
    r.reserve(target);
    for (const auto& e : basis) r.push_back(monomial_value(e, x));
    return r;
  };
  // Reduced rows kept in echelon form for the incremental rank test.
  Matrix echelon;
  std::vector<std::size_t> pivots;
  std::vector<Point> nodes;
  Matrix system;
  while (nodes.size() < target) {
    auto candidate = next_candidate();
    if (!candidate) fail(Errc::SingularInterpolation, "interpolation nodes are not in general position");
    Point r = row_of(*candidate);
    Point reduced = r;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      const Rational f = reduced[pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < target; ++j) reduced[j] -= f * echelon[i][j];
    }
    std::size_t p = 0;
    while (p < target && reduced[p] == 0) ++p;
    if (p == target) continue;
    const Rational lead = reduced[p];
    for (auto& x : reduced) x /= lead;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      const Rational f = echelon[i][p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < target; ++j) echelon[i][j] -= f * reduced[j];
    }
    echelon.push_back(std::move(reduced));
    pivots.push_back(p);
    nodes.push_back(*candidate);
    system.push_back(std::move(r));
  }
  Point values;
  for (const auto& x : nodes) values.push_back(value(x));
  auto coeffs = linalg::solve_square(system, values);
  if (!coeffs) fail(Errc::SingularInterpolation, "interpolation system is singular");
  HomogeneousPolynomial f(num_vars, degree);
  for (std::size_t i = 0; i < target; ++i) f.add_term(basis[i], (*coeffs)[i]);
  for (int h = 0; h < 3; ++h) {
    auto candidate = next_candidate();
    if (!candidate) break;
    if (f.evaluate(*candidate) != value(*candidate))
      fail(Errc::HoldoutMismatch, "holdout " + format_point(*candidate) + " disagrees with the fitted polynomial");
  }
  return f;
}

}  // namespace polyfam
