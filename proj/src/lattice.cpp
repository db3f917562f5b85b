#include "polyfam/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "polyfam/error.hpp"
#include "polyfam/linalg.hpp"
#include "polyfam/lp.hpp"

namespace polyfam {

namespace {

std::atomic<unsigned> g_jobs{1};

// Integer constraint sum_j c[j] y[j] >= d.
struct Row {
  IntVector c;
  std::int64_t d;
  bool operator<(const Row& o) const { return c != o.c ? c < o.c : d < o.d; }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Divide by the content and round the right-hand side up; keep only the
// tightest row per coefficient vector.
std::vector<Row> normalize(std::vector<Row> rows, bool* infeasible) {
  std::map<IntVector, std::int64_t> best;
  for (auto& r : rows) {
    const auto g = gcd_of(r.c);
    if (g == 0) {
      if (r.d > 0) *infeasible = true;
      continue;
    }
    for (auto& x : r.c) x /= g;
    r.d = ceil_div(r.d, g);
    auto [it, inserted] = best.emplace(r.c, r.d);
    if (!inserted) it->second = std::max(it->second, r.d);
  }
  std::vector<Row> out;
  out.reserve(best.size());
  for (auto& [c, d] : best) out.push_back(Row{c, d});
  return out;
}

class Counter {
 public:
  Counter(std::size_t n, std::vector<Row> rows) : n_(n), levels_(n + 1) {
    bool infeasible = false;
    auto current = normalize(std::move(rows), &infeasible);
    original_ = current;
    for (std::size_t k = n; k-- > 0;) {
      levels_[k + 1] = current;
      std::vector<Row> pos, neg, next;
      for (const auto& r : current) {
        if (r.c[k] > 0)
          pos.push_back(r);
        else if (r.c[k] < 0)
          neg.push_back(r);
        else
          next.push_back(r);
      }
      if (pos.empty() || neg.empty()) unbounded_candidate_ = true;
      for (const auto& p : pos)
        for (const auto& m : neg) {
          const auto a = -m.c[k];
          const auto b = p.c[k];
          Row r{IntVector(n_), a * p.d + b * m.d};
          for (std::size_t j = 0; j < n_; ++j) r.c[j] = a * p.c[j] + b * m.c[j];
          next.push_back(std::move(r));
        }
      current = normalize(std::move(next), &infeasible);
    }
    infeasible_ = infeasible;
    for (std::size_t k = 1; k <= n_; ++k) {
      auto& rows_k = levels_[k];
      rows_k.erase(std::remove_if(rows_k.begin(), rows_k.end(), [&](const Row& r) { return r.c[k - 1] == 0; }),
                   rows_k.end());
    }
  }

  std::int64_t run() {
    if (infeasible_) return 0;
    if (n_ == 0) return 1;
    if (unbounded_candidate_) check_bounded();
    IntVector y(n_, 0);
    std::int64_t lo, hi;
    if (!bounds(0, y, &lo, &hi)) return 0;
    if (n_ == 1) return hi - lo + 1;
    const unsigned jobs = std::max(1u, g_jobs.load());
    if (jobs == 1 || hi - lo < 2 * static_cast<std::int64_t>(jobs)) {
      std::int64_t total = 0;
      for (auto v = lo; v <= hi; ++v) {
        y[0] = v;
        total += descend(1, y);
      }
      return total;
    }
    std::vector<std::int64_t> partial(jobs, 0);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        IntVector local(n_, 0);
        for (auto v = lo + w; v <= hi; v += jobs) {
          local[0] = v;
          partial[w] += descend(1, local);
        }
      });
    }
    for (auto& t : workers) t.join();
    std::int64_t total = 0;
    for (auto x : partial) total += x;
    return total;
  }

 private:
  // Bounds of y[k] given y[0..k-1], from the rows of level k+1.
  bool bounds(std::size_t k, const IntVector& y, std::int64_t* lo, std::int64_t* hi) const {
    bool has_lo = false, has_hi = false;
    for (const auto& r : levels_[k + 1]) {
      std::int64_t rest = r.d;
      for (std::size_t j = 0; j < k; ++j) rest -= r.c[j] * y[j];
      const auto c = r.c[k];
      if (c > 0) {
        const auto b = ceil_div(rest, c);
        if (!has_lo || b > *lo) *lo = b;
        has_lo = true;
      } else {
        const auto b = floor_div(rest, c);
        if (!has_hi || b < *hi) *hi = b;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) fail(Errc::UnboundedRegion, "lattice count over an unbounded region");
    return *lo <= *hi;
  }

  std::int64_t descend(std::size_t k, IntVector& y) const {
    std::int64_t lo, hi;
    if (!bounds(k, y, &lo, &hi)) return 0;
    if (k + 1 == n_) return hi - lo + 1;
    std::int64_t total = 0;
    for (auto v = lo; v <= hi; ++v) {
      y[k] = v;
      total += descend(k + 1, y);
    }
    return total;
  }

  void check_bounded() const {
    // A coordinate with a one-sided bound is harmless only if the system is
    // infeasible or bounded; defer to the rational test.
    Matrix a;
    Point b;
    IntMatrix normals;
    for (const auto& r : original_) {
      a.push_back(to_point(r.c));
      b.emplace_back(r.d);
      normals.push_back(r.c);
    }
    if (!lp::recession_cone_trivial(normals, n_) && lp::feasible_inequalities(a, b).has_value())
      fail(Errc::UnboundedRegion, "lattice count over an unbounded region");
  }

  std::size_t n_;
  std::vector<std::vector<Row>> levels_;
  std::vector<Row> original_;
  bool infeasible_ = false;
  bool unbounded_candidate_ = false;
};

// Integer rows for <normal, x0 + K y> >= -offset (strictly, if asked).
Row restrict_row(const HalfSpace& h, const Point& x0, const IntMatrix& basis, bool strict) {
  Row r{IntVector(basis.size()), 0};
  for (std::size_t k = 0; k < basis.size(); ++k) r.c[k] = dot(h.normal, basis[k]);
  const Rational rhs = -h.offset - dot(h.normal, x0);
  r.d = strict ? to_int64(floor_of(rhs)) + 1 : to_int64(ceil_of(rhs));
  return r;
}

std::int64_t count_impl(const Polytope& p, bool interior) {
  if (p.is_empty()) return 0;
  const std::size_t n = p.ambient_dim();
  Point x0(n, Rational(0));
  IntMatrix basis;
  if (p.equalities().empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    Matrix a;
    Point b;
    for (const auto& e : p.equalities()) {
      a.push_back(to_point(e.normal));
      b.push_back(-e.offset);
    }
    auto lattice = linalg::integer_affine_solve(a, b, n);
    if (!lattice) return 0;
    x0 = lattice->origin;
    basis = lattice->basis;
  }
  if (basis.empty()) return 1;
  std::vector<Row> rows;
  for (const auto& f : p.facet_list()) rows.push_back(restrict_row(f.halfspace, x0, basis, interior));
  return Counter(basis.size(), std::move(rows)).run();
}

}  // namespace

void set_counting_jobs(unsigned jobs) { g_jobs = std::max(1u, jobs); }
unsigned counting_jobs() { return g_jobs.load(); }

std::int64_t count(const Polytope& p) { return count_impl(p, false); }
std::int64_t count_interior(const Polytope& p) { return count_impl(p, true); }

std::int64_t count_solutions(std::size_t ambient_dim, const std::vector<HalfSpace>& hrep, bool strict) {
  IntMatrix basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  const Point x0(ambient_dim, Rational(0));
  std::vector<Row> rows;
  for (const auto& h : hrep) {
    if (h.normal.size() != ambient_dim) fail(Errc::DimensionMismatch, "half-space normal length");
    rows.push_back(restrict_row(h, x0, basis, strict));
  }
  return Counter(ambient_dim, std::move(rows)).run();
}

Rational EhrhartQuasiPolynomial::evaluate(std::int64_t m) const {
  auto r = m % period;
  if (r < 0) r += period;
  const auto& c = constituents[static_cast<std::size_t>(r)];
  Rational value = 0;
  Rational power = 1;
  for (const auto& coef : c) {
    value += coef * power;
    power *= m;
  }
  return value;
}

EhrhartQuasiPolynomial ehrhart(const Polytope& p, std::int64_t period) {
  if (period < 1) fail(Errc::InvalidArgument, "period must be positive");
  for (const auto& v : p.vrep())
    if (!is_integral(scaled(v, Rational(period))))
      fail(Errc::InvalidArgument, "vertices are not in (1/period) Z^n");
  EhrhartQuasiPolynomial out;
  out.period = period;
  out.degree = std::max(p.dim(), 0);
  const auto d = static_cast<std::size_t>(out.degree);
  if (p.is_empty()) {
    out.degree = 0;
    out.constituents.assign(static_cast<std::size_t>(period), Point{Rational(0)});
    return out;
  }
  for (std::int64_t r = 0; r < period; ++r) {
    Matrix vandermonde;
    Point counts;
    for (std::size_t j = 0; j <= d; ++j) {
      const std::int64_t m = r + period * static_cast<std::int64_t>(j);
      Point row;
      Rational power = 1;
      for (std::size_t i = 0; i <= d; ++i) {
        row.push_back(power);
        power *= m;
      }
      vandermonde.push_back(std::move(row));
      counts.emplace_back(count(scale(p, Rational(m))));
    }
    auto coeffs = linalg::solve_square(vandermonde, counts);
    if (!coeffs) fail(Errc::SingularInterpolation, "Ehrhart interpolation nodes");
    out.constituents.push_back(*coeffs);
  }
  for (std::int64_t r = 0; r < period; ++r) {
    const std::int64_t m = r + period * static_cast<std::int64_t>(d + 1);
    const auto actual = count(scale(p, Rational(m)));
    if (out.evaluate(m) != actual)
      fail(Errc::HoldoutMismatch, "constituent " + std::to_string(r) + " disagrees at dilation " + std::to_string(m));
  }
  return out;
}

bool check_reciprocity(const Polytope& p, std::int64_t m_max) {
  if (!p.is_full_dimensional()) fail(Errc::NotFullDimensional, "reciprocity needs a full-dimensional polytope");
  for (const auto& v : p.vrep())
    if (!is_integral(v)) fail(Errc::InvalidArgument, "reciprocity needs a lattice polytope");
  const auto poly = ehrhart(p, 1);
  const int sign = p.dim() % 2 == 0 ? 1 : -1;
  for (std::int64_t m = 1; m <= m_max; ++m)
    if (poly.evaluate(-m) != sign * count_interior(scale(p, Rational(m)))) return false;
  return true;
}

}  // namespace polyfam
