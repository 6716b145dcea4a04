// SPDX-License-Identifier: Apache-2.0
#include "lmsb/yukawa.hpp"

#include <numeric>

#include "lmsb/error.hpp"
#include "lmsb/linalg.hpp"

namespace lmsb {

void YukawaTable::complete(const std::vector<int>& l0) {
  for (int j = 1; j <= k; ++j) {
    RationalFunction s(k);
    for (int m = 1; m <= k; ++m) s += at(m, j) * Rational(l0[m - 1]);
    y[{0, j}] = s;
  }
  RationalFunction s(k);
  for (int m = 1; m <= k; ++m) s += at(0, m) * Rational(l0[m - 1]);
  y[{0, 0}] = s;
}

YukawaTable yukawa_closed_forms(const ModelData& m) {
  if (!m.has_registry_data()) throw Error(ErrorKind::invalid_input, m.name + ": no closed-form Yukawa couplings");
  YukawaTable t;
  t.k = m.k;
  for (auto& [p, f] : m.yukawa) t.y[{p.first + 1, p.second + 1}] = f;
  t.complete(m.l0());
  return t;
}

namespace {

using SeriesMatrix = std::vector<std::vector<LogSeries>>;

LogSeries det(const SeriesMatrix& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  LogSeries r(a[0][0].nvars(), a[0][0].order());
  for (std::size_t c = 0; c < n; ++c) {
    SeriesMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LogSeries> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    LogSeries term = a[0][c] * det(minor);
    if (c % 2) r -= term;
    else r += term;
  }
  return r;
}

MultiSeries require_pure(const LogSeries& s, const char* what) {
  if (!s.is_pure()) throw Error(ErrorKind::invalid_input, std::string(what) + " has logarithmic terms");
  return s.pure();
}

// Gauss-Jordan inverse; pivots need a nonzero constant term.
std::vector<std::vector<MultiSeries>> inverse(std::vector<std::vector<MultiSeries>> a) {
  std::size_t n = a.size();
  int nv = a[0][0].nvars(), ord = a[0][0].order();
  std::vector<std::vector<MultiSeries>> b(n, std::vector<MultiSeries>(n, MultiSeries(nv, ord)));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = MultiSeries(nv, ord, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c].constant_term()) == 0) ++p;
    if (p == n) throw Error(ErrorKind::rank_deficient, "series matrix is not invertible");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    MultiSeries inv = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) a[c][j] = a[c][j] * inv, b[c][j] = b[c][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      MultiSeries f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j], b[i][j] -= f * b[c][j];
    }
  }
  return b;
}

std::pair<int, int> split(const Mono& a, int k) {
  std::vector<int> idx;
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < a[i]; ++r) idx.push_back(i + 1);
  return {idx.at(0), idx.at(1)};
}

// Jacobian theta_i t_a, i = row.
std::vector<std::vector<MultiSeries>> jacobian_matrix(const FrobeniusBasis& fb) {
  std::vector<std::vector<MultiSeries>> j(fb.k);
  for (int i = 0; i < fb.k; ++i)
    for (int a = 0; a < fb.k; ++a) j[i].push_back(require_pure(theta_apply(i, fb.t[a]), "theta t"));
  return j;
}

}  // namespace

LogSeries wronskian(const FrobeniusBasis& fb, const std::vector<int>& idx) {
  int k = fb.k;
  std::vector<LogSeries> sols = fb.t;
  sols.push_back(fb.double_log);
  SeriesMatrix a(k + 1);
  for (auto& s : sols) {
    LogSeries top = s;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) top = theta_apply(*it, top);
    a[0].push_back(top);
    for (int i = 0; i < k; ++i) a[i + 1].push_back(theta_apply(i, s));
  }
  return det(a);
}

WronskianYukawa yukawa_from_wronskian(const ModelData& m, int order) {
  if (!m.yukawa_denominator) throw Error(ErrorKind::invalid_input, m.name + ": no Yukawa denominator");
  FrobeniusBasis fb = frobenius_basis(m, order);
  YukawaTable closed = yukawa_closed_forms(m);
  WronskianYukawa r;
  r.table.k = m.k;
  std::optional<MultiSeries> divisor;
  if (m.wronskian_divisor)
    divisor = require_pure(theta_apply(m.wronskian_divisor->first, fb.t[m.wronskian_divisor->second]), "divisor")
                  .inverse();
  bool first = true, ok = true;
  for (int i = 1; i <= m.k; ++i)
    for (int j = i; j <= m.k; ++j) {
      MultiSeries w = require_pure(wronskian(fb, {i - 1, j - 1}), "Wronskian");
      if (divisor) w = w * *divisor;
      r.series[{i, j}] = w;
      RationalFunction f = rational_reconstruct(w, *m.yukawa_denominator);
      Rational lam;
      if (!f.proportional(closed.at(i, j), &lam)) {
        ok = false;
        continue;
      }
      if (first) r.constant = lam, first = false;
      else if (lam != r.constant) ok = false;
      r.table.y[{i, j}] = f;
    }
  r.matches = ok && !first && sgn(r.constant) != 0;
  if (r.matches) {
    for (auto& [p, f] : r.table.y) f = f * (1 / r.constant);
    r.table.constant = r.constant;
    r.table.complete(m.l0());
  }
  return r;
}

std::vector<YukawaConstraint> yukawa_constraints(const ModelData& m) {
  int k = m.k;
  auto l0 = m.l0();
  int piv = -1;
  for (int i = 0; i < k; ++i)
    if (l0[i] != 0) piv = i;
  if (piv < 0) throw Error(ErrorKind::invalid_input, m.name + ": theta_0 vanishes");
  std::vector<ThetaOperator> ops;
  ThetaOperator t0 = theta0(m);
  for (auto& l : reduce_to_pf(m)) {
    ops.push_back(l);
    if (l.order() == 2) ops.push_back(t0 * l);
  }
  std::vector<YukawaConstraint> out;
  for (auto& op : ops) {
    if (op.order() > 3) throw Error(ErrorKind::invalid_input, m.name + ": operator of order > 3");
    YukawaConstraint c;
    c.quad = op.homogeneous_part(2);
    auto cubic = op.homogeneous_part(3);
    // divide the cubic symbol by theta_0, eliminating theta_piv from the top
    while (!cubic.empty()) {
      auto best = cubic.begin();
      for (auto it = cubic.begin(); it != cubic.end(); ++it)
        if (it->first[piv] > best->first[piv]) best = it;
      if (best->first[piv] == 0) throw Error(ErrorKind::invalid_input, m.name + ": cubic symbol not divisible by theta_0");
      Mono q = best->first - Mono::unit(piv);
      RationalFunction coef = best->second * (Rational(1) / l0[piv]);
      auto& slot = c.cubic[q];
      slot = slot.nvars() ? slot + coef : coef;
      for (int i = 0; i < k; ++i) {
        if (l0[i] == 0) continue;
        Mono t = q + Mono::unit(i);
        RationalFunction v = cubic.count(t) ? cubic.at(t) : RationalFunction(k);
        v -= coef * Rational(l0[i]);
        if (v.is_zero()) cubic.erase(t);
        else cubic[t] = v;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

RationalFunction constraint_residual(const ModelData& m, const YukawaConstraint& c, const YukawaTable& t) {
  int k = m.k;
  RationalFunction r(k);
  for (auto& [a, u] : c.quad) {
    auto [i, j] = split(a, k);
    r += u * t.at(i, j);
  }
  for (auto& [a, q] : c.cubic) {
    auto [i, j] = split(a, k);
    r += q * (t.at(j, 0).theta(i - 1) + t.at(i, 0).theta(j - 1)) * Rational(1, 2);
  }
  return r;
}

namespace {

Poly times_common(const RationalFunction& f, const Poly& common) {
  auto q = common.divide_exact(f.den());
  if (!q) throw Error(ErrorKind::invalid_input, "operator coefficient denominator does not divide the common multiple");
  return f.num() * *q;
}

}  // namespace

OdeYukawa yukawa_from_ode(const ModelData& m) {
  if (!m.yukawa_denominator) throw Error(ErrorKind::invalid_input, m.name + ": no Yukawa denominator");
  int k = m.k;
  const Poly& D = *m.yukawa_denominator;
  auto l0 = m.l0();
  auto cons = yukawa_constraints(m);
  // clear coefficient denominators
  struct PolyConstraint {
    std::vector<std::pair<Pair, Poly>> quad, cubic;
  };
  std::vector<PolyConstraint> pcs;
  for (auto& c : cons) {
    Poly common(k, 1);
    std::vector<Poly> seen;
    auto note = [&](const RationalFunction& f) {
      for (auto& s : seen)
        if (s == f.den()) return;
      seen.push_back(f.den());
      common = common * f.den();
    };
    for (auto& [a, f] : c.quad) note(f);
    for (auto& [a, f] : c.cubic) note(f);
    PolyConstraint pc;
    for (auto& [a, f] : c.quad) pc.quad.emplace_back(split(a, k), times_common(f, common));
    for (auto& [a, f] : c.cubic) pc.cubic.emplace_back(split(a, k), times_common(f, common));
    pcs.push_back(std::move(pc));
  }
  std::vector<Poly> dD;
  for (int i = 0; i < k; ++i) dD.push_back(D.theta(i));

  std::vector<Pair> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) pairs.emplace_back(i, j);

  OdeYukawa r;
  YukawaTable closed = yukawa_closed_forms(m);
  for (int extra = 1; extra <= 3; ++extra) {
    std::vector<Mono> monos;
    std::vector<int> bound(k);
    for (int i = 0; i < k; ++i) bound[i] = D.degree(i) + extra;
    std::vector<int> e(k, 0);
    while (true) {
      monos.push_back(Mono::from_vector(e));
      int i = 0;
      while (i < k && e[i] == bound[i]) e[i] = 0, ++i;
      if (i == k) break;
      ++e[i];
    }
    std::size_t nunk = pairs.size() * monos.size();
    // column u -> per-constraint polynomial D^2 * residual
    std::map<std::pair<int, Mono>, std::size_t> rowid;
    Matrix rows;
    for (std::size_t u = 0; u < nunk; ++u) {
      Pair pu = pairs[u / monos.size()];
      Poly mono = Poly::monomial(k, monos[u % monos.size()]);
      auto N = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return Pair{i, j} == pu ? mono : Poly(k);
      };
      auto N0 = [&](int j) {
        Poly s(k);
        for (int a = 1; a <= k; ++a) s += N(a, j) * Rational(l0[a - 1]);
        return s;
      };
      for (std::size_t ci = 0; ci < pcs.size(); ++ci) {
        Poly P(k);
        for (auto& [ij, u2] : pcs[ci].quad) P += u2 * N(ij.first, ij.second) * D;
        for (auto& [ij, q] : pcs[ci].cubic) {
          auto [i, j] = ij;
          Poly nj = N0(j), ni = N0(i);
          Poly t = (nj.theta(i - 1) + ni.theta(j - 1)) * D - (nj * dD[i - 1] + ni * dD[j - 1]);
          P += q * t * Rational(1, 2);
        }
        for (auto& [mu, v] : P.terms()) {
          auto key = std::make_pair(static_cast<int>(ci), mu);
          auto it = rowid.find(key);
          if (it == rowid.end()) {
            it = rowid.emplace(key, rows.size()).first;
            rows.emplace_back(nunk, Rational(0));
          }
          rows[it->second][u] = v;
        }
      }
    }
    auto ns = nullspace(rows, nunk);
    r.dimension = static_cast<int>(ns.size());
    r.degree_bound = extra;
    if (ns.empty()) continue;
    if (ns.size() > 1) return r;
    YukawaTable t;
    t.k = k;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Poly num(k);
      for (std::size_t a = 0; a < monos.size(); ++a) num.add_term(monos[a], ns[0][p * monos.size() + a]);
      t.y[pairs[p]] = RationalFunction(num, D);
    }
    bool first = true, ok = true;
    for (auto& p : pairs) {
      Rational lam;
      if (!t.at(p.first, p.second).proportional(closed.at(p.first, p.second), &lam)) {
        if (closed.at(p.first, p.second).is_zero() && t.at(p.first, p.second).is_zero()) continue;
        ok = false;
        break;
      }
      if (first) r.constant = lam, first = false;
      else if (lam != r.constant) ok = false;
    }
    r.matches = ok && !first && sgn(r.constant) != 0;
    if (r.matches)
      for (auto& [p, f] : t.y) f = f * (1 / r.constant);
    t.complete(l0);
    r.table = t;
    return r;
  }
  throw Error(ErrorKind::ansatz_insufficient, m.name + ": no nonzero Yukawa solution in the ansatz");
}

std::vector<MultiSeries> invert_mirror_map(const FrobeniusBasis& fb) {
  int k = fb.k, ord = fb.order;
  std::vector<MultiSeries> q, z;
  for (int i = 0; i < k; ++i) q.push_back(MultiSeries::variable(k, ord, i));
  z = q;
  for (int it = 0; it < ord; ++it) {
    std::vector<MultiSeries> nz;
    for (int i = 0; i < k; ++i) nz.push_back(q[i] * (-fb.mirror[i].compose(z)).exp());
    z = std::move(nz);
  }
  return z;
}

MultiSeries instanton_part(const ModelData& m, const FrobeniusBasis& fb) {
  LogSeries p = fb.double_log * (1 / fb.scale);
  for (int i = 0; i < m.k; ++i)
    for (int j = 0; j < m.k; ++j)
      if (m.intersection[i][j] != 0) p -= fb.t[i] * fb.t[j] * Rational(m.intersection[i][j], 2);
  return require_pure(p, "instanton part");
}

AModelCouplings amodel_couplings(const ModelData& m, int order) {
  int k = m.k;
  FrobeniusBasis fb = frobenius_basis(m, order);
  YukawaTable y = yukawa_closed_forms(m);
  auto jinv = inverse(jacobian_matrix(fb));
  auto c = m.c();
  int g = 0;
  while (g < k && c[g] == 0) ++g;
  if (g == k) throw Error(ErrorKind::invalid_input, m.name + ": c vanishes");
  LogSeries t0g = LogSeries(k, order);
  {
    auto l0 = m.l0();
    for (int i = 0; i < k; ++i) t0g += theta_apply(i, fb.t[g]) * Rational(l0[i]);
  }
  MultiSeries G = require_pure(t0g, "theta_0 t") * Rational(-1, c[g]);
  MultiSeries Ginv = G.inverse();
  // d_a f = sum_i jinv[a][i] theta_i f
  auto d = [&](int a, const LogSeries& f) {
    LogSeries r(k, order);
    for (int i = 0; i < k; ++i) r += LogSeries(jinv[a][i]) * theta_apply(i, f);
    return r;
  };
  LogSeries sf = fb.double_log * (1 / fb.scale);
  std::vector<MultiSeries> ys;
  AModelCouplings r;
  auto zq = invert_mirror_map(fb);
  bool first = true, ok = true;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      MultiSeries A = require_pure(d(a, d(b, sf)), "A-model coupling");
      MultiSeries B(k, order);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          B += jinv[a][i] * jinv[b][j] * MultiSeries::from_ratfun(y.at(i + 1, j + 1), order);
      B = B * Ginv;
      if (first && sgn(A.constant_term()) != 0) r.ratio = B.constant_term() / A.constant_term(), first = false;
      r.a_model[{a + 1, b + 1}] = A.compose(zq);
      r.b_model[{a + 1, b + 1}] = B.compose(zq);
    }
  if (first) ok = false;
  for (auto& [p, A] : r.a_model)
    if (!(r.b_model.at(p) == A * r.ratio)) ok = false;
  r.proportional = ok;
  return r;
}

namespace {

int content(const Mono& b, int k) {
  int g = 0;
  for (int i = 0; i < k; ++i) g = std::gcd(g, static_cast<int>(b[i]));
  return g;
}

Mono divide(const Mono& b, int d, int k) {
  Mono r;
  for (int i = 0; i < k; ++i) r.e[i] = static_cast<std::int16_t>(b[i] / d);
  return r;
}

Rational power(int d, int w) {
  Rational r = 1;
  for (int i = 0; i < std::abs(w); ++i) r *= d;
  return w < 0 ? Rational(1 / r) : r;
}

}  // namespace

std::map<Mono, Rational> multicover_invert(const std::map<Mono, Rational>& a, int w) {
  std::map<Mono, Rational> n;
  int k = kMaxVars;
  for (auto& [b, v] : a) {
    Rational x = v;
    int g = content(b, k);
    for (int d = 2; d <= g; ++d) {
      if (g % d) continue;
      auto it = n.find(divide(b, d, k));
      if (it != n.end()) x -= power(d, w) * it->second;
    }
    n[b] = x;
  }
  return n;
}

bool InstantonSeries::integral() const {
  for (auto& [b, e] : entries)
    if (e.determined && e.bps.get_den() != 1) return false;
  return true;
}

InstantonSeries gw0_invariants(const ModelData& m, int max_degree) {
  int k = m.k;
  FrobeniusBasis fb = frobenius_basis(m, max_degree);
  MultiSeries P = instanton_part(m, fb).compose(invert_mirror_map(fb));
  auto c = m.c();
  InstantonSeries s;
  s.k = k;
  std::vector<int> e(k, 0);
  while (true) {
    int i = 0;
    while (i < k && e[i] == max_degree) e[i] = 0, ++i;
    if (i == k) break;
    ++e[i];
    Mono b = Mono::from_vector(e);
    if (b.degree() > max_degree) continue;
    int cb = 0;
    for (int j = 0; j < k; ++j) cb += c[j] * e[j];
    InstantonEntry en;
    if (cb == 0) {
      en.determined = false;
      if (sgn(P.coeff(b)) != 0) throw Error(ErrorKind::invalid_input, m.name + ": instanton term with c.beta = 0");
    } else {
      en.gw = -P.coeff(b) / cb;
    }
    s.entries[b] = en;
  }
  for (auto& [b, en] : s.entries) {
    if (!en.determined) continue;
    Rational x = en.gw;
    int g = content(b, k);
    for (int d = 2; d <= g; ++d) {
      if (g % d) continue;
      auto& sub = s.entries.at(divide(b, d, k));
      if (!sub.determined) {
        en.determined = false;
        break;
      }
      x -= power(d, -3) * sub.bps;
    }
    en.bps = x;
  }
  return s;
}

}  // namespace lmsb
