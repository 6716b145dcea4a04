// SPDX-License-Identifier: Apache-2.0
#include "lmsb/jacobian.hpp"

#include <algorithm>
#include <set>

#include "lmsb/error.hpp"

namespace lmsb {

namespace {

using Point = std::array<int, 2>;

Point pt(const IVec& v) { return {v.at(0), v.at(1)}; }

int dot(const IVec& n, const Point& m) { return n[0] * m[0] + n[1] * m[1]; }

}  // namespace

GradedRing::GradedRing(const ModelData& model, int K) : model_(&model), K_(K) {
  int lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
  for (auto& v : model.polytope.vertices()) {
    lo0 = std::min(lo0, v[0]), hi0 = std::max(hi0, v[0]);
    lo1 = std::min(lo1, v[1]), hi1 = std::max(hi1, v[1]);
  }
  for (int k = 0; k <= K; ++k) {
    std::vector<GradedMonomial> piece;
    for (int x = k * lo0; x <= k * hi0; ++x)
      for (int y = k * lo1; y <= k * hi1; ++y) {
        bool in = true;
        for (auto& f : model.polytope.facets())
          if (dot(f.normal, {x, y}) < k * f.offset) in = false;
        if (in) piece.push_back({k, {x, y}});
      }
    for (auto& g : piece) index_[g] = static_cast<int>(all_.size()), all_.push_back(g);
    pieces_.push_back(std::move(piece));
  }
}

int GradedRing::index(const GradedMonomial& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

bool GradedRing::in_ideal(const GradedMonomial& g, int j) const {
  if (j <= 0) return false;
  if (j >= 4) return true;
  if (g.k == 0) return false;
  if (j == 3) return true;
  if (j == 1) {
    for (auto& f : model_->polytope.facets())
      if (dot(f.normal, g.m) == g.k * f.offset) return false;
    return true;
  }
  for (auto& v : model_->polytope.vertices())
    if (g.m[0] == g.k * v[0] && g.m[1] == g.k * v[1]) return false;
  return true;
}

RingElement monomial_element(const ModelData& m, const GradedMonomial& g) {
  return {{g, Poly(static_cast<int>(m.points.size()), 1)}};
}

namespace {

void add_to(RingElement& r, const GradedMonomial& g, const Poly& c) {
  if (c.is_zero()) return;
  auto it = r.find(g);
  if (it == r.end()) {
    r.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) r.erase(it);
}

GradedMonomial shift(const GradedMonomial& g, const IVec& n) { return {g.k + 1, {g.m[0] + n[0], g.m[1] + n[1]}}; }

}  // namespace

RingElement d_operator(const ModelData& m, int i, const RingElement& x) {
  int l = static_cast<int>(m.points.size());
  RingElement r;
  for (auto& [g, c] : x) {
    add_to(r, g, c * Rational(i == 0 ? g.k : g.m[i - 1]));
    for (int n = 0; n < l; ++n) {
      int w = i == 0 ? 1 : m.points[n][i - 1];
      if (w != 0) add_to(r, shift(g, m.points[n]), c * Poly::variable(l, n) * Rational(w));
    }
  }
  return r;
}

RingElement d_parameter(const ModelData& m, int point, const RingElement& x) {
  RingElement r;
  for (auto& [g, c] : x) {
    add_to(r, g, c.derivative(point));
    add_to(r, shift(g, m.points[point]), c);
  }
  return r;
}

bool d_operators_commute(const ModelData& m, int max_degree) {
  GradedRing ring(m, max_degree);
  for (auto& g : ring.all()) {
    RingElement x = monomial_element(m, g);
    for (int i = 0; i <= 2; ++i)
      for (std::size_t p = 0; p < m.points.size(); ++p) {
        RingElement a = d_operator(m, i, d_parameter(m, static_cast<int>(p), x));
        RingElement b = d_parameter(m, static_cast<int>(p), d_operator(m, i, x));
        if (a != b) return false;
      }
  }
  return true;
}

std::vector<IVec> rf_basis_points(const ModelData& m) {
  if (!m.rf_basis.empty() || m.has_registry_data()) return m.rf_basis;
  std::vector<IVec> drop(m.polytope.vertices().begin(), m.polytope.vertices().begin() + 3);
  std::vector<IVec> out;
  for (auto& p : m.points) {
    if (p[0] == 0 && p[1] == 0) continue;
    if (std::find(drop.begin(), drop.end(), p) == drop.end()) out.push_back(p);
  }
  return out;
}

Reducer::Reducer(const ModelData& m, const std::vector<Rational>& a, int K) : ring_(m, K) {
  basis_.push_back({0, {0, 0}});
  for (auto& p : rf_basis_points(m)) basis_.push_back({1, pt(p)});
  basis_.push_back({1, {0, 0}});
  basis_.push_back({2, {0, 0}});
  std::size_t ncols = ring_.all().size();
  std::vector<bool> is_basis(ncols, false);
  for (auto& b : basis_) {
    int c = ring_.index(b);
    basis_col_.push_back(c);
    is_basis[c] = true;
  }
  Matrix rows;
  for (auto& g : ring_.all()) {
    if (g.k >= K) continue;
    for (int i = 0; i <= 2; ++i) {
      Vec row(ncols, 0);
      row[ring_.index(g)] += i == 0 ? g.k : g.m[i - 1];
      for (std::size_t n = 0; n < m.points.size(); ++n) {
        int w = i == 0 ? 1 : m.points[n][i - 1];
        if (w != 0) row[ring_.index(shift(g, m.points[n]))] += a[n] * w;
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<int> order;
  for (int k = K; k >= 0; --k)
    for (auto& g : ring_.piece(k))
      if (!is_basis[ring_.index(g)]) order.push_back(ring_.index(g));
  for (int c : basis_col_) order.push_back(c);
  ech_ = rref(std::move(rows), order);
  std::vector<bool> pivot(ncols, false);
  for (int p : ech_.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_basis[c] && pivot[c]) throw Error(ErrorKind::rank_deficient, m.name + ": R_F basis is dependent at this point");
    if (!is_basis[c] && !pivot[c]) throw Error(ErrorKind::not_regular, m.name + ": R_F larger than expected at this point");
  }
}

std::vector<Rational> Reducer::reduce(const std::map<GradedMonomial, Rational>& v) const {
  Vec x(ring_.all().size(), 0);
  for (auto& [g, c] : v) {
    int i = ring_.index(g);
    if (i < 0) throw Error(ErrorKind::invalid_input, "monomial outside the truncated ring");
    x[i] += c;
  }
  Rational f;
  for (std::size_t r = 0; r < ech_.rows.size(); ++r) {
    f = x[ech_.pivots[r]];
    if (sgn(f) == 0) continue;
    const Vec& row = ech_.rows[r];
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(row[j]) != 0) x[j] -= f * row[j];
  }
  std::vector<Rational> out;
  for (int c : basis_col_) out.push_back(x[c]);
  return out;
}

std::vector<Rational> Reducer::reduce(const GradedMonomial& g) const { return reduce({{g, Rational(1)}}); }

namespace {

std::vector<int> jacobian_dims(const ModelData& m, const std::vector<Rational>& a) {
  GradedRing ring(m, 3);
  std::vector<int> dims;
  for (int k = 0; k <= 3; ++k) {
    const auto& piece = ring.piece(k);
    std::map<GradedMonomial, int> col;
    for (std::size_t i = 0; i < piece.size(); ++i) col[piece[i]] = static_cast<int>(i);
    Matrix rows;
    if (k > 0)
      for (auto& g : ring.piece(k - 1))
        for (int h = 0; h <= 2; ++h) {
          Vec row(piece.size(), 0);
          for (std::size_t n = 0; n < m.points.size(); ++n) {
            int w = h == 0 ? 1 : m.points[n][h - 1];
            if (w != 0) row[col.at(shift(g, m.points[n]))] += a[n] * w;
          }
          rows.push_back(std::move(row));
        }
    dims.push_back(static_cast<int>(piece.size()) - (rows.empty() ? 0 : rank(rows)));
  }
  return dims;
}

std::vector<int> expected_dims(const ModelData& m) { return {1, static_cast<int>(m.points.size()) - 3, 1, 0}; }

// gcd over Q of univariate polynomials (coefficients low to high)
std::vector<Rational> upoly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim(a), trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t sh = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool regular_heuristic(const ModelData& m, const std::vector<Rational>& a) {
  for (std::size_t i = 0; i < m.points.size(); ++i)
    if (m.polytope.is_vertex(m.points[i]) && sgn(a[i]) == 0) return false;
  for (auto& f : m.polytope.facets()) {
    std::vector<std::pair<int, Rational>> edge;
    IVec dir{f.normal[1], -f.normal[0]};
    for (std::size_t i = 0; i < m.points.size(); ++i)
      if (f.normal[0] * m.points[i][0] + f.normal[1] * m.points[i][1] == f.offset)
        edge.emplace_back(dir[0] * m.points[i][0] + dir[1] * m.points[i][1], a[i]);
    std::sort(edge.begin(), edge.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::vector<Rational> p, dp;
    for (auto& [pos, c] : edge) p.push_back(c);
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<int>(i));
    if (upoly_gcd(p, dp).size() > 1) return false;
  }
  return jacobian_dims(m, a) == expected_dims(m);
}

bool regular_point(const ModelData& m, const std::vector<Rational>& a) {
  if (m.discriminant_a.empty()) return regular_heuristic(m, a);
  return is_regular(m, a);
}

std::vector<Rational> random_regular_point(const ModelData& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      int x = 0;
      while (x == 0) x = dist(rng);
      a.emplace_back(x);
    }
    if (regular_point(m, a)) return a;
  }
  throw Error(ErrorKind::not_regular, m.name + ": no regular point found");
}

std::vector<int> rf_dimensions(const ModelData& m, const std::vector<Rational>& a) {
  if (a.size() != m.points.size()) throw Error(ErrorKind::invalid_input, "coefficient vector has wrong length");
  if (!regular_point(m, a)) throw Error(ErrorKind::not_regular, m.name + ": F is not Delta-regular at this point");
  auto d = jacobian_dims(m, a);
  if (d != expected_dims(m)) throw Error(ErrorKind::not_regular, m.name + ": Jacobian ring dimension drop");
  return d;
}

FiltrationTables filtration_tables(const ModelData& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto a = random_regular_point(m, rng);
  Reducer red(m, a);
  GradedRing ring(m, 3);
  auto span_dim = [&](auto pred) {
    Matrix rows;
    for (auto& g : ring.all())
      if (pred(g)) rows.push_back(red.reduce(g));
    return rows.empty() ? 0 : rank(rows);
  };
  FiltrationTables t;
  for (int j = 0; j <= 4; ++j) t.I.push_back(span_dim([&](const GradedMonomial& g) { return ring.in_ideal(g, j); }));
  for (int k = 0; k <= 2; ++k) t.E.push_back(span_dim([&](const GradedMonomial& g) { return g.k <= k; }));
  int i1 = t.I[1], i3 = t.I[3], i4 = t.I[4];
  t.weight = {i1, i3 - i1, 0, i4 - i3};
  t.hodge_z = {t.E[0], t.E[1], t.E[2], t.E[2]};
  t.relative_weight = {i1, i3 - i1, 0, i4 - i3};
  t.relative_hodge = {t.E[0], t.E[1], t.E[2]};
  int l = static_cast<int>(m.points.size());
  t.hodge_numbers = {{1, 0, 0, 0}, {0, l - 1, 1, 0}, {0, 1, l - 1, 0}, {0, 0, 0, 1}};
  return t;
}

bool parameter_action_compatible(const ModelData& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto a = random_regular_point(m, rng);
  Reducer red(m, a);
  GradedRing ring(m, 2);
  GradedRing big(m, 3);
  auto rank_of = [](Matrix rows) { return rows.empty() ? 0 : rank(rows); };
  auto shifted = [&](const GradedMonomial& g, std::size_t p) { return red.reduce(shift(g, m.points[p])); };
  for (int j = 1; j <= 3; ++j) {
    Matrix span;
    for (auto& g : big.all())
      if (big.in_ideal(g, j)) span.push_back(red.reduce(g));
    int r0 = rank_of(span);
    for (auto& g : ring.all()) {
      if (!ring.in_ideal(g, j)) continue;
      for (std::size_t p = 0; p < m.points.size(); ++p) {
        Matrix s = span;
        s.push_back(shifted(g, p));
        if (rank_of(s) != r0) return false;
      }
    }
  }
  for (int k = 0; k <= 1; ++k) {
    Matrix lower, upper;
    for (auto& g : big.all()) {
      if (g.k <= k) lower.push_back(red.reduce(g));
      if (g.k <= k + 1) upper.push_back(red.reduce(g));
    }
    int rl = rank_of(lower), ru = rank_of(upper);
    bool drops = false;
    for (auto& g : ring.piece(k))
      for (std::size_t p = 0; p < m.points.size(); ++p) {
        auto v = shifted(g, p);
        Matrix s = upper;
        s.push_back(v);
        if (rank_of(s) != ru) return false;
        Matrix s2 = lower;
        s2.push_back(v);
        if (rank_of(s2) != rl) drops = true;
      }
    if (!drops) return false;
  }
  return true;
}

RationalFunction rational_interpolate(const std::vector<std::pair<std::vector<Rational>, Rational>>& samples,
                                      int nvars, int max_degree) {
  std::vector<Mono> monos;
  {
    std::vector<int> e(nvars, 0);
    while (true) {
      int d = 0;
      for (int x : e) d += x;
      if (d <= max_degree) monos.push_back(Mono::from_vector(e));
      int i = 0;
      while (i < nvars && e[i] == max_degree) e[i] = 0, ++i;
      if (i == nvars) break;
      ++e[i];
    }
  }
  std::size_t nm = monos.size(), need = 2 * nm + 3;
  if (samples.size() < need) throw Error(ErrorKind::no_fit, "not enough interpolation samples");
  Matrix rows;
  for (std::size_t s = 0; s < need; ++s) {
    const auto& [x, f] = samples[s];
    Vec row(2 * nm);
    for (std::size_t j = 0; j < nm; ++j) {
      Rational v = 1;
      for (int i = 0; i < nvars; ++i)
        for (int r = 0; r < monos[j][i]; ++r) v *= x[i];
      row[j] = v;
      row[nm + j] = -f * v;
    }
    rows.push_back(std::move(row));
  }
  auto ns = nullspace(rows, 2 * nm);
  if (ns.empty()) throw Error(ErrorKind::no_fit, "no rational function of this degree fits");
  Poly num(nvars), den(nvars);
  for (std::size_t j = 0; j < nm; ++j) {
    num.add_term(monos[j], ns[0][j]);
    den.add_term(monos[j], ns[0][nm + j]);
  }
  if (den.is_zero()) throw Error(ErrorKind::no_fit, "degenerate interpolant");
  return RationalFunction(num, den);
}

namespace {

constexpr int kMaxInterpolationDegree = 8;

struct Slice {
  int origin = -1, e1 = -1, e2 = -1;
  std::vector<int> free;  // point indices of the slice variables
};

Slice make_slice(const ModelData& m) {
  Slice s;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    Point p = pt(m.points[i]);
    if (p == Point{0, 0}) s.origin = static_cast<int>(i);
    else if (p == Point{1, 0}) s.e1 = static_cast<int>(i);
    else if (p == Point{0, 1}) s.e2 = static_cast<int>(i);
    else s.free.push_back(static_cast<int>(i));
  }
  if (s.origin < 0 || s.e1 < 0 || s.e2 < 0)
    throw Error(ErrorKind::invalid_input, m.name + ": gauge slice needs the points (0,0), (1,0), (0,1)");
  return s;
}

// prod a_i^{e_i} with signed exponents
RationalFunction laurent(int nvars, const std::vector<std::pair<int, int>>& exps) {
  Mono num, den;
  for (auto [i, e] : exps) {
    if (e > 0) num.e[i] = static_cast<std::int16_t>(num.e[i] + e);
    if (e < 0) den.e[i] = static_cast<std::int16_t>(den.e[i] - e);
  }
  return RationalFunction(Poly::monomial(nvars, num), Poly::monomial(nvars, den));
}

// f(a) = s^ws lambda^p fhat(u(a)), s = 1/a_0, lambda = (a_0/a_e1, a_0/a_e2)
RationalFunction lift(const ModelData& m, const Slice& s, const RationalFunction& fhat, int ws, Point p) {
  int l = static_cast<int>(m.points.size());
  std::vector<RationalFunction> u;
  for (int n : s.free) {
    auto q = m.points[n];
    u.push_back(laurent(l, {{n, 1}, {s.origin, q[0] + q[1] - 1}, {s.e1, -q[0]}, {s.e2, -q[1]}}));
  }
  RationalFunction w = laurent(l, {{s.origin, -ws + p[0] + p[1]}, {s.e1, -p[0]}, {s.e2, -p[1]}});
  return w * fhat.substitute(u);
}

std::set<Point> pair_sums(const ModelData& m) {
  std::set<Point> out;
  for (auto& x : m.points)
    for (auto& y : m.points) out.insert({x[0] + y[0], x[1] + y[1]});
  return out;
}

}  // namespace

RationalFunction NormalFormData::alpha_at(const ModelData& m, int point) const { return alpha.at(pt(m.points.at(point))); }
RationalFunction NormalFormData::beta_at(const ModelData& m, int point) const { return beta.at(pt(m.points.at(point))); }

NormalFormData normal_form(const ModelData& m, std::uint64_t seed) {
  Slice s = make_slice(m);
  int k = static_cast<int>(s.free.size());
  int l = static_cast<int>(m.points.size());
  auto sums = pair_sums(m);
  std::set<Point> in_a;
  for (auto& p : m.points) in_a.insert(pt(p));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-40, 40);

  // sample values: per target, list of (u, value)
  using Samples = std::vector<std::pair<std::vector<Rational>, Rational>>;
  std::map<Point, Samples> sa, sb;
  Samples sg, sd;
  std::size_t have = 0;
  auto sample_until = [&](std::size_t n) {
    while (have < n) {
      std::vector<Rational> u, a(l, Rational(1));
      for (int i = 0; i < k; ++i) {
        int x = 0;
        while (x == 0) x = dist(rng);
        u.emplace_back(x);
        a[s.free[i]] = x;
      }
      if (!regular_point(m, a)) continue;
      Reducer red(m, a);
      std::size_t i0 = red.basis().size() - 2, i1 = red.basis().size() - 1;
      for (auto& p : sums) {
        auto r = red.reduce(GradedMonomial{2, p});
        if (in_a.count(p))
          for (std::size_t j = 0; j < i0; ++j)
            if (sgn(r[j]) != 0) throw Error(ErrorKind::invalid_input, m.name + ": t0^2 t^m does not reduce into I_1");
        sa[p].emplace_back(u, r[i0]);
        sb[p].emplace_back(u, r[i1]);
      }
      auto r = red.reduce(GradedMonomial{3, {0, 0}});
      sg.emplace_back(u, r[i0]);
      sd.emplace_back(u, r[i1]);
      ++have;
    }
  };
  auto fit = [&](const Samples& smp) {
    for (int d = 0; d <= kMaxInterpolationDegree; ++d) {
      std::size_t nm = 1;
      for (int i = 1; i <= k; ++i) nm = nm * (d + i) / i;
      sample_until(2 * nm + 3);
      try {
        return rational_interpolate(smp, k, d);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_fit) throw;
      }
    }
    throw Error(ErrorKind::no_fit, m.name + ": interpolation degree bound exceeded");
  };
  NormalFormData nf;
  sample_until(3);
  for (auto& p : sums) {
    nf.alpha[p] = lift(m, s, fit(sa[p]), 1, p);
    nf.beta[p] = lift(m, s, fit(sb[p]), 0, p);
  }
  nf.gamma = lift(m, s, fit(sg), 2, {0, 0});
  nf.delta = lift(m, s, fit(sd), 1, {0, 0});
  return nf;
}

bool verify_normal_form(const ModelData& m, const NormalFormData& nf, int npoints, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < npoints; ++t) {
    auto a = random_regular_point(m, rng);
    Reducer red(m, a);
    std::size_t i0 = red.basis().size() - 2, i1 = i0 + 1;
    for (auto& [p, f] : nf.alpha) {
      auto r = red.reduce(GradedMonomial{2, p});
      if (f.eval(a) != r[i0] || nf.beta.at(p).eval(a) != r[i1]) return false;
    }
    auto r = red.reduce(GradedMonomial{3, {0, 0}});
    if (nf.gamma.eval(a) != r[i0] || nf.delta.eval(a) != r[i1]) return false;
  }
  return true;
}

std::vector<RationalFunction> xi_log_derivatives(const ModelData& m, const NormalFormData& nf) {
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    RationalFunction a = nf.alpha_at(m, static_cast<int>(i)), b = nf.beta_at(m, static_cast<int>(i));
    out.push_back(a * Rational(2) + nf.delta * b + b.derivative(0));
  }
  return out;
}

bool xi_closed(const ModelData& m, const std::vector<RationalFunction>& omega) {
  for (std::size_t i = 0; i < m.points.size(); ++i)
    for (std::size_t j = i + 1; j < m.points.size(); ++j)
      if (omega[i].derivative(static_cast<int>(j)) != omega[j].derivative(static_cast<int>(i))) return false;
  return true;
}

PairingNormalization xi_normalization(const ModelData& m, const NormalFormData& nf) {
  int l = static_cast<int>(m.points.size());
  auto omega = xi_log_derivatives(m, nf);
  if (!xi_closed(m, omega)) throw Error(ErrorKind::not_integrable, m.name + ": xi log-derivatives are not closed");
  std::vector<Poly> cand;
  for (int i = 0; i < l; ++i) cand.push_back(Poly::variable(l, i));
  for (auto& f : m.discriminant_a)
    if (f.terms().size() > 1) cand.push_back(f);
  // leftover denominator factors (e.g. apparent singularities) become candidates too
  for (auto& w : omega) {
    Poly d = w.den();
    bool progress = true;
    while (progress && !d.is_constant()) {
      progress = false;
      for (std::size_t j = l; j < cand.size(); ++j)
        if (auto q = d.divide_exact(cand[j])) d = *q, progress = true;
    }
    if (!d.is_constant()) cand.push_back(d);
  }
  std::size_t nc = cand.size();
  std::vector<std::vector<RationalFunction>> logd(l);
  for (int i = 0; i < l; ++i)
    for (auto& f : cand) logd[i].push_back(RationalFunction(f.derivative(i), f));
  std::mt19937_64 rng(11);
  Matrix rows;
  Vec rhs;
  for (int t = 0; t < 3; ++t) {
    auto a = random_regular_point(m, rng);
    for (int i = 0; i < l; ++i) {
      Vec row;
      for (std::size_t j = 0; j < nc; ++j) row.push_back(logd[i][j].eval(a));
      rows.push_back(std::move(row));
      rhs.push_back(omega[i].eval(a));
    }
  }
  auto e = solve(rows, rhs);
  if (!e) throw Error(ErrorKind::not_integrable, m.name + ": xi is not a product of the candidate factors");
  PairingNormalization r;
  r.xi = RationalFunction(l, 1);
  for (std::size_t j = 0; j < nc; ++j) {
    if (sgn((*e)[j]) == 0) continue;
    if ((*e)[j].get_den() != 1) throw Error(ErrorKind::not_integrable, m.name + ": fractional exponent in xi");
    int ej = static_cast<int>((*e)[j].get_num().get_si());
    r.factors.emplace_back(cand[j], ej);
    r.xi = r.xi * RationalFunction(cand[j]).pow(ej);
  }
  for (int i = 0; i < l; ++i) {
    RationalFunction s(l);
    for (auto& [f, ej] : r.factors) s += RationalFunction(f.derivative(i), f) * Rational(ej);
    if (s != omega[i]) throw Error(ErrorKind::not_integrable, m.name + ": xi fails the log-derivative system");
  }
  return r;
}

RationalFunction pairing_i1(const std::array<RationalFunction, 2>& x, const std::array<RationalFunction, 2>& y,
                            const RationalFunction& xi) {
  return (x[1] * y[0] - x[0] * y[1]) * xi;
}

RationalFunction to_z(const ModelData& m, const RationalFunction& f) {
  Slice s = make_slice(m);
  int k = m.k;
  if (static_cast<int>(s.free.size()) != k) throw Error(ErrorKind::invalid_input, m.name + ": slice does not match moduli");
  // z_i = prod_n u_n^{E[i][n]} on the slice
  Matrix E(k, Vec(k));
  for (int i = 0; i < k; ++i)
    for (int n = 0; n < k; ++n) E[i][n] = m.relations.basis[i][s.free[n]];
  std::vector<RationalFunction> vals(m.points.size(), RationalFunction(k, 1));
  for (int n = 0; n < k; ++n) {
    // row n of E^{-1}: solve E^T x = e_n
    Matrix et(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) et[i][j] = E[j][i];
    Vec rhs(k, 0);
    rhs[n] = 1;
    auto x = solve(et, rhs);
    if (!x) throw Error(ErrorKind::rank_deficient, m.name + ": slice exponents singular");
    std::vector<std::pair<int, int>> exps;
    for (int i = 0; i < k; ++i) {
      if ((*x)[i].get_den() != 1) throw Error(ErrorKind::invalid_input, m.name + ": slice is not unimodular");
      exps.emplace_back(i, static_cast<int>((*x)[i].get_num().get_si()));
    }
    vals[s.free[n]] = laurent(k, exps);
  }
  return f.substitute(vals);
}

AlgebraicYukawa algebraic_yukawa(const ModelData& m, const NormalFormData& nf, const PairingNormalization& xi) {
  int l = static_cast<int>(m.points.size());
  AlgebraicYukawa r;
  RationalFunction one(l, 1), zero(l);
  r.y000 = pairing_i1({zero, one}, {one, zero}, xi.xi);
  YukawaTable y = yukawa_closed_forms(m);
  bool first = true, ok = true;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) {
      Point p{m.points[i][0] + m.points[j][0], m.points[i][1] + m.points[j][1]};
      RationalFunction alg = laurent(l, {{i, 1}, {j, 1}, {0, 1}}) * pairing_i1({nf.alpha.at(p), nf.beta.at(p)}, {one, zero}, xi.xi);
      RationalFunction az = to_z(m, alg);
      r.theta_a[{i, j}] = az;
      RationalFunction tr(m.k);
      for (int a = 0; a < m.k; ++a)
        for (int b = 0; b < m.k; ++b) {
          int w = m.relations.basis[a][i] * m.relations.basis[b][j];
          if (w != 0) tr += y.at(a + 1, b + 1) * Rational(w);
        }
      if (tr.is_zero()) {
        if (!az.is_zero()) ok = false;
        continue;
      }
      Rational lam;
      if (!az.proportional(tr, &lam)) {
        ok = false;
        continue;
      }
      if (first) r.constant = lam, first = false;
      else if (lam != r.constant) ok = false;
    }
  r.matches = ok && !first && sgn(r.constant) != 0;
  return r;
}

}  // namespace lmsb
