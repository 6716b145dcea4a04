// SPDX-License-Identifier: Apache-2.0
#include "lmsb/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lmsb/error.hpp"

namespace lmsb {

namespace {

long cross(const IVec& o, const IVec& a, const IVec& b) {
  return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

int dot(const IVec& a, const IVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(std::vector<IVec> pts) {
  if (pts.empty()) throw Error(ErrorKind::invalid_input, "polytope needs at least one point");
  LatticePolytope p;
  p.ambient_ = static_cast<int>(pts[0].size());
  for (auto& x : pts)
    if (static_cast<int>(x.size()) != p.ambient_) throw Error(ErrorKind::invalid_input, "points of mixed dimension");
  if (p.ambient_ > 2) throw Error(ErrorKind::invalid_input, "only polytopes of dimension <= 2 are supported");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) {
    p.dim_ = 0;
    p.vertices_ = pts;
    return p;
  }
  if (p.ambient_ == 1) {
    p.dim_ = 1;
    p.vertices_ = {pts.front(), pts.back()};
    p.facets_ = {{{1}, pts.front()[0]}, {{-1}, -pts.back()[0]}};
    return p;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<IVec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() <= 2) {
    p.dim_ = 1;
    p.vertices_ = {pts.front(), pts.back()};
    return p;
  }
  p.dim_ = 2;
  p.vertices_ = h;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const IVec& a = h[i];
    const IVec& b = h[(i + 1) % h.size()];
    int dx = b[0] - a[0], dy = b[1] - a[1];
    int g = std::gcd(dx, dy);
    IVec n{-dy / g, dx / g};
    p.facets_.push_back({n, dot(n, a)});
  }
  return p;
}

bool LatticePolytope::contains(const IVec& x) const {
  if (dim_ == ambient_) {
    for (auto& f : facets_)
      if (dot(f.normal, x) < f.offset) return false;
    return true;
  }
  if (dim_ == 0) return x == vertices_[0];
  // segment in the plane
  const IVec &a = vertices_[0], &b = vertices_[1];
  if (cross(a, b, x) != 0) return false;
  return std::min(a, b) <= x && x <= std::max(a, b);
}

bool LatticePolytope::interior(const IVec& x) const {
  if (dim_ != ambient_) return false;
  for (auto& f : facets_)
    if (dot(f.normal, x) <= f.offset) return false;
  return true;
}

bool LatticePolytope::is_vertex(const IVec& x) const {
  return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
}

LatticePolytope LatticePolytope::dilate(int k) const {
  std::vector<IVec> v = vertices_;
  for (auto& x : v)
    for (auto& c : x) c *= k;
  return from_points(v);
}

std::vector<IVec> integral_points(const LatticePolytope& p) {
  int n = p.ambient_dim();
  IVec lo(n, 0), hi(n, 0);
  for (int i = 0; i < n; ++i) {
    lo[i] = hi[i] = p.vertices()[0][i];
    for (auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<IVec> out;
  IVec x = lo;
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == hi[i]) x[i] = lo[i], --i;
    if (i < 0) break;
    ++x[i];
  }
  IVec origin(n, 0);
  auto it = std::find(out.begin(), out.end(), origin);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

bool is_reflexive(const LatticePolytope& p) {
  if (!p.interior(IVec(p.ambient_dim(), 0)))
    throw Error(ErrorKind::origin_not_interior, "origin is not an interior point");
  for (auto& f : p.facets())
    if (f.offset != -1) return false;
  return true;
}

LatticePolytope dual_polytope(const LatticePolytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorKind::invalid_input, "dual requires a reflexive polytope");
  std::vector<IVec> v;
  for (auto& f : p.facets()) v.push_back(f.normal);
  return LatticePolytope::from_points(v);
}

Integer normalized_volume(const LatticePolytope& p) {
  if (p.dim() < p.ambient_dim()) return 0;
  if (p.ambient_dim() == 1) return Integer(p.vertices()[1][0] - p.vertices()[0][0]);
  long twice = 0;
  auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IVec& a = v[i];
    const IVec& b = v[(i + 1) % v.size()];
    twice += static_cast<long>(a[0]) * b[1] - static_cast<long>(a[1]) * b[0];
  }
  return Integer(std::labs(twice));
}

IMatrix hermite_normal_form(IMatrix m) {
  if (m.empty()) return m;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c over rows r.. by Euclid on pairs
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(m[i][c]) != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(m[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (sgn(m[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m[r][c]) == 0) continue;
    if (sgn(m[r][c]) < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

IMatrix integer_kernel(const IMatrix& a) {
  // Column operations on [a; I]; zero columns of a carry a kernel basis.
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  IMatrix m = a;
  IMatrix u(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto colop = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto colswap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][x], m[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
  };
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows && k < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = k; j < cols; ++j)
        if (sgn(m[r][j]) != 0 && (best == cols || abs(m[r][j]) < abs(m[r][best]))) best = j;
      if (best == cols) break;
      colswap(k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (sgn(m[r][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][j].get_mpz_t(), m[r][k].get_mpz_t());
        colop(j, k, q);
        if (sgn(m[r][j]) != 0) done = false;
      }
      if (done) {
        ++k;
        break;
      }
    }
  }
  IMatrix ker;
  for (std::size_t j = k; j < cols; ++j) {
    std::vector<Integer> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    ker.push_back(v);
  }
  return hermite_normal_form(ker);
}

namespace {

IMatrix point_matrix(const std::vector<IVec>& points) {
  if (points.empty()) throw Error(ErrorKind::invalid_input, "empty point set");
  std::size_t n = points[0].size();
  IMatrix a(n + 1, std::vector<Integer>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    a[0][j] = 1;
    for (std::size_t i = 0; i < n; ++i) a[i + 1][j] = points[j][i];
  }
  return a;
}

}  // namespace

RelationLattice lattice_of_relations(const std::vector<IVec>& points) {
  RelationLattice rl;
  rl.npoints = static_cast<int>(points.size());
  for (auto& row : integer_kernel(point_matrix(points))) {
    IVec v;
    for (auto& x : row) v.push_back(static_cast<int>(x.get_si()));
    rl.basis.push_back(v);
  }
  return rl;
}

RelationLattice lattice_of_relations(const LatticePolytope& p) { return lattice_of_relations(integral_points(p)); }

bool is_relation_basis(const std::vector<IVec>& points, const std::vector<IVec>& basis) {
  IMatrix a = point_matrix(points);
  for (auto& l : basis) {
    if (l.size() != points.size()) return false;
    for (auto& row : a) {
      Integer s = 0;
      for (std::size_t j = 0; j < l.size(); ++j) s += row[j] * l[j];
      if (sgn(s) != 0) return false;
    }
  }
  IMatrix b;
  for (auto& l : basis) b.emplace_back(l.begin(), l.end());
  // Same lattice iff the Hermite forms agree.
  return hermite_normal_form(b) == integer_kernel(a);
}

LatticePolytope LaurentPolynomial::newton_polytope() const {
  std::vector<IVec> pts;
  for (auto& [m, c] : terms)
    if (sgn(c) != 0) pts.push_back(m);
  return LatticePolytope::from_points(pts);
}

// lexicographically smallest Hermite form of the
// cyclic vertex matrix over all starting vertices and both orientations.
IMatrix gl2z_normal_form(const LatticePolytope& p) {
  auto v = p.vertices();
  IMatrix best;
  for (int dir : {1, -1})
    for (std::size_t s = 0; s < v.size(); ++s) {
      IMatrix cols(2, std::vector<Integer>(v.size()));
      for (std::size_t j = 0; j < v.size(); ++j) {
        const IVec& x = v[(s + dir * static_cast<long>(j) + 2 * v.size()) % v.size()];
        cols[0][j] = x[0];
        cols[1][j] = x[1];
      }
      IMatrix h = hermite_normal_form(cols);
      if (best.empty() || h < best) best = h;
    }
  return best;
}

// All reflexive polygons as lattice subpolygons of the three maximal ones.
std::vector<LatticePolytope> reflexive_polygons() {
  std::vector<LatticePolytope> out;
  std::set<IMatrix> seen;
  std::function<void(const LatticePolytope&)> walk = [&](const LatticePolytope& p) {
    if (p.dim() != 2 || !p.interior({0, 0})) return;
    if (!seen.insert(gl2z_normal_form(p)).second) return;
    out.push_back(p);
    auto pts = integral_points(p);
    for (auto& v : p.vertices()) {
      std::vector<IVec> rest;
      for (auto& x : pts)
        if (x != v) rest.push_back(x);
      walk(LatticePolytope::from_points(rest));
    }
  };
  walk(LatticePolytope::from_points({{2, -1}, {-1, 2}, {-1, -1}}));
  walk(LatticePolytope::from_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  walk(LatticePolytope::from_points({{-1, -1}, {3, -1}, {-1, 1}}));
  return out;
}

}  // namespace lmsb
