#include "polyfam/lp.hpp"

#include "polyfam/linalg.hpp"

namespace polyfam::lp {

std::optional<Point> feasible_nonnegative(const Matrix& a, const Point& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return Point(n, Rational(0));
  // Tableau over [y | artificials | rhs]; rows normalized to b >= 0.
  const std::size_t width = n + m + 1;
  Matrix t(m, Point(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j] * sign;
    t[i][n + i] = 1;
    t[i][width - 1] = b[i] * sign;
    basis[i] = n + i;
  }
  // Objective: minimize the sum of artificials; reduced costs row.
  Point cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded phase-one objective cannot happen; defensive exit
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  Point y(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) y[basis[i]] = t[i][width - 1];
  return y;
}

std::optional<Point> feasible_inequalities(const Matrix& a, const Point& b) {
  // x = u - w, a u - a w - s = b with u, w, s >= 0.
  const std::size_t m = a.size();
  if (m == 0) return Point{};
  const std::size_t n = a.front().size();
  Matrix eq(m, Point(2 * n + m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      eq[i][j] = a[i][j];
      eq[i][n + j] = -a[i][j];
    }
    eq[i][2 * n + i] = -1;
  }
  auto y = feasible_nonnegative(eq, b);
  if (!y) return std::nullopt;
  Point x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*y)[j] - (*y)[n + j];
  return x;
}

bool recession_cone_trivial(const IntMatrix& normals, std::size_t dim) {
  if (dim == 0) return true;
  Matrix rows = linalg::to_matrix(normals);
  if (linalg::rank(rows) < dim) return false;
  // Need y >= 1 with N^T y = 0; substitute y = 1 + z.
  const std::size_t m = normals.size();
  Matrix eq(dim, Point(m, Rational(0)));
  Point rhs(dim, Rational(0));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      eq[k][i] = rows[i][k];
      rhs[k] -= rows[i][k];
    }
  }
  return feasible_nonnegative(eq, rhs).has_value();
}

}  // namespace polyfam::lp
