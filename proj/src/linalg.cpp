#include "polyfam/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace polyfam::linalg {

EchelonForm rref(Matrix m) {
  EchelonForm out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank_fraction_free(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Point> solve_square(Matrix a, Point b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Point x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

std::optional<Point> solve_any(const Matrix& a, const Point& b) {
  if (a.empty()) return Point{};
  const std::size_t cols = a.front().size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = rref(std::move(aug));
  Point x(cols, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

Matrix nullspace(const Matrix& a, std::size_t cols) {
  auto e = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Point v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
  return static_cast<int>(rank(diffs));
}

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;

struct ColumnReduction {
  ZMatrix reduced;                     // a * u
  ZMatrix u;                           // unimodular n x n
  std::size_t pivot_count = 0;         // columns [0, pivot_count) carry pivots
  std::vector<std::size_t> pivot_row;  // pivot row of each pivot column
};

// Integer rows of `a` (each row scaled by the lcm of its denominators);
// `scale` receives the factor applied to each row.
ZMatrix integer_rows(const Matrix& a, std::size_t cols, std::vector<Integer>* scale) {
  ZMatrix out;
  for (const auto& row : a) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> z(cols);
    for (std::size_t j = 0; j < cols; ++j) z[j] = row[j].get_num() * (l / row[j].get_den());
    out.push_back(std::move(z));
    if (scale) scale->push_back(l);
  }
  return out;
}

void column_axpy(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void column_swap(ZMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

ColumnReduction column_reduce(ZMatrix a, std::size_t cols) {
  ColumnReduction cr;
  cr.u.assign(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) cr.u[i][i] = 1;
  std::size_t pos = 0;
  for (std::size_t r = 0; r < a.size() && pos < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pos; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        if (best == cols || abs(a[r][j]) < abs(a[r][best])) best = j;
      }
      if (best == cols) break;
      if (best != pos) {
        column_swap(a, best, pos);
        column_swap(cr.u, best, pos);
      }
      bool clean = true;
      for (std::size_t j = pos + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pos].get_mpz_t());
        column_axpy(a, j, pos, q);
        column_axpy(cr.u, j, pos, q);
        if (a[r][j] != 0) clean = false;
      }
      if (clean) {
        cr.pivot_row.push_back(r);
        ++pos;
        break;
      }
    }
  }
  cr.pivot_count = pos;
  cr.reduced = std::move(a);
  return cr;
}

}  // namespace

IntMatrix integer_kernel(const Matrix& a, std::size_t cols) {
  auto cr = column_reduce(integer_rows(a, cols, nullptr), cols);
  IntMatrix basis;
  for (std::size_t j = cr.pivot_count; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = to_int64(cr.u[i][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IntegerAffineLattice> integer_affine_solve(const Matrix& a, const Point& b, std::size_t cols) {
  std::vector<Integer> scale;
  auto cr = column_reduce(integer_rows(a, cols, &scale), cols);
  Point rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = b[i] * Rational(scale[i]);
  std::vector<Integer> z(cols, 0);
  for (std::size_t j = 0; j < cr.pivot_count; ++j) {
    const auto p = cr.pivot_row[j];
    Rational s = rhs[p];
    for (std::size_t i = 0; i < j; ++i) s -= Rational(cr.reduced[p][i] * z[i]);
    s /= Rational(cr.reduced[p][j]);
    if (s.get_den() != 1) return std::nullopt;
    z[j] = s.get_num();
  }
  for (std::size_t r = 0; r < cr.reduced.size(); ++r) {
    Integer s = 0;
    for (std::size_t i = 0; i < cr.pivot_count; ++i) s += cr.reduced[r][i] * z[i];
    if (Rational(s) != rhs[r]) return std::nullopt;
  }
  IntegerAffineLattice out;
  out.origin.assign(cols, Rational(0));
  for (std::size_t i = 0; i < cols; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cr.pivot_count; ++j) s += cr.u[i][j] * z[j];
    out.origin[i] = Rational(s);
  }
  for (std::size_t j = cr.pivot_count; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = to_int64(cr.u[i][j]);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m.front().size(), Point(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix to_matrix(const IntMatrix& m) {
  Matrix out;
  for (const auto& row : m) out.push_back(to_point(row));
  return out;
}

}  // namespace polyfam::linalg
