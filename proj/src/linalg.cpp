// SPDX-License-Identifier: Apache-2.0
#include "lmsb/linalg.hpp"

#include <numeric>

namespace lmsb {

Echelon rref(Matrix m, const std::vector<int>& column_order) {
  Echelon out;
  if (m.empty()) return out;
  std::size_t ncols = m[0].size();
  std::vector<int> order = column_order;
  if (order.empty()) {
    order.resize(ncols);
    std::iota(order.begin(), order.end(), 0);
  }
  std::size_t r = 0;
  Rational f;
  for (int col : order) {
    if (r == m.size()) break;
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][col];
    for (auto& x : m[r])
      if (sgn(x) != 0) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& m, std::size_t ncols) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (a.empty()) return Vec{};
  std::size_t n = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(std::move(aug));
  Vec x(n, 0);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == static_cast<int>(n)) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][n];
  }
  return x;
}

}  // namespace lmsb
