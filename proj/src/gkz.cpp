// SPDX-License-Identifier: Apache-2.0
#include "lmsb/gkz.hpp"

#include <functional>

#include "lmsb/error.hpp"

namespace lmsb {

ThetaOperator ThetaOperator::theta(int nvars, int i) {
  ThetaOperator t(nvars);
  t.add_term(Mono::unit(i), RationalFunction(nvars, 1));
  return t;
}

ThetaOperator ThetaOperator::scalar(const RationalFunction& f) {
  ThetaOperator t(f.nvars());
  t.add_term(Mono{}, f);
  return t;
}

ThetaOperator ThetaOperator::from_poly(const Poly& p, int k) {
  ThetaOperator t(k);
  for (auto& [m, c] : p.terms()) {
    Mono z, th;
    for (int i = 0; i < k; ++i) {
      z.e[i] = m.e[i];
      th.e[i] = m.e[k + i];
    }
    t.add_term(th, RationalFunction(Poly::monomial(k, z, c)));
  }
  return t;
}

int ThetaOperator::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void ThetaOperator::add_term(const Mono& alpha, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(alpha, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<Mono, RationalFunction> ThetaOperator::homogeneous_part(int d) const {
  std::map<Mono, RationalFunction> r;
  for (auto& [a, c] : terms_)
    if (a.degree() == d) r.emplace(a, c);
  return r;
}

ThetaOperator& ThetaOperator::operator+=(const ThetaOperator& o) {
  for (auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

ThetaOperator& ThetaOperator::operator-=(const ThetaOperator& o) {
  for (auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

namespace {

// theta^alpha (V . ) = sum_{gamma <= alpha} binom(alpha, gamma) theta^{alpha-gamma}(V) theta^gamma
void leibniz(const Mono& alpha, const RationalFunction& v, int n, std::map<Mono, RationalFunction>& out) {
  std::vector<int> g(n, 0);
  for (;;) {
    Mono gamma;
    Integer binom = 1;
    RationalFunction w = v;
    for (int i = 0; i < n; ++i) {
      gamma.e[i] = static_cast<std::int16_t>(g[i]);
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), alpha[i], g[i]);
      binom *= b;
      for (int r = 0; r < alpha[i] - g[i]; ++r) w = w.theta(i);
    }
    if (!w.is_zero()) {
      w = w * Rational(binom);
      auto [it, fresh] = out.emplace(gamma, w);
      if (!fresh) it->second += w;
    }
    int i = 0;
    while (i < n && g[i] == alpha[i]) g[i] = 0, ++i;
    if (i == n) break;
    ++g[i];
  }
}

}  // namespace

ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b) {
  ThetaOperator r(std::max(a.nvars_, b.nvars_));
  for (auto& [alpha, u] : a.terms_)
    for (auto& [beta, v] : b.terms_) {
      std::map<Mono, RationalFunction> part;
      leibniz(alpha, v, r.nvars_, part);
      for (auto& [gamma, w] : part) r.add_term(gamma + beta, u * w);
    }
  return r;
}

ThetaOperator operator*(const RationalFunction& f, const ThetaOperator& a) {
  ThetaOperator r(a.nvars_);
  for (auto& [alpha, u] : a.terms_) r.add_term(alpha, f * u);
  return r;
}

bool ThetaOperator::operator==(const ThetaOperator& o) const {
  ThetaOperator d = *this - o;
  return d.terms_.empty();
}

LogSeries ThetaOperator::apply(const LogSeries& s) const {
  LogSeries r(s.nvars(), s.order());
  std::map<Mono, LogSeries> cache;
  cache.emplace(Mono{}, s);
  std::function<const LogSeries&(const Mono&)> th = [&](const Mono& a) -> const LogSeries& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    int i = 0;
    while (a[i] == 0) ++i;
    LogSeries v = theta_apply(i, th(a - Mono::unit(i)));
    return cache.emplace(a, std::move(v)).first->second;
  };
  for (auto& [alpha, u] : terms_) {
    LogSeries f(MultiSeries::from_ratfun(u, s.order()));
    r += f * th(alpha);
  }
  return r;
}

std::string ThetaOperator::str(const Names& z) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [alpha, u] = *it;
    if (!s.empty()) s += " + ";
    s += "(" + u.str(z) + ")";
    for (int i = 0; i < nvars_; ++i)
      for (int r = 0; r < alpha[i]; ++r) s += "*th" + (nvars_ == 1 ? std::string() : std::to_string(i + 1));
  }
  return s;
}

std::vector<EulerOperator> euler_operators(const std::vector<IVec>& points) {
  std::vector<EulerOperator> ops;
  EulerOperator t0;
  t0.coeffs.assign(points.size(), 1);
  ops.push_back(t0);
  std::size_t n = points.empty() ? 0 : points[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    EulerOperator t;
    for (auto& p : points) t.coeffs.push_back(p[i]);
    ops.push_back(t);
  }
  return ops;
}

BoxOperator box_operator(const IVec& l) {
  BoxOperator b;
  for (std::size_t m = 0; m < l.size(); ++m) {
    if (l[m] > 0) b.plus[static_cast<int>(m)] = l[m];
    if (l[m] < 0) b.minus[static_cast<int>(m)] = -l[m];
  }
  return b;
}

std::string BoxOperator::str() const {
  auto side = [](const std::map<int, int>& s) {
    std::string r;
    for (auto& [m, e] : s) {
      r += "d_a" + std::to_string(m);
      if (e != 1) r += "^" + std::to_string(e);
    }
    return r.empty() ? std::string("1") : r;
  };
  return side(plus) + " - " + side(minus);
}

std::vector<ThetaOperator> reduce_to_pf(const ModelData& m) {
  int k = m.k;
  const auto& basis = m.relations.basis;
  if (k == 0 || static_cast<int>(basis.size()) != k)
    throw Error(ErrorKind::invalid_input, "relation basis does not match the number of moduli");
  if (!is_relation_basis(m.points, basis))
    throw Error(ErrorKind::invalid_input, "relation basis does not span L(Delta)");
  // theta_{a_m} -> sum_i l^{(i)}_m theta_i as a polynomial in th-variables
  auto theta_a = [&](std::size_t pt) {
    Poly p(k);
    for (int i = 0; i < k; ++i) p.add_term(Mono::unit(i), basis[i][pt]);
    return p;
  };
  std::vector<ThetaOperator> out;
  for (int i = 0; i < k; ++i) {
    Poly plus(k, 1), minus(k, 1);
    for (std::size_t pt = 0; pt < m.points.size(); ++pt) {
      int e = basis[i][pt];
      Poly th = theta_a(pt);
      for (int j = 0; j < std::abs(e); ++j) {
        Poly f = th - Poly(k, j);
        if (e > 0) plus = plus * f;
        else minus = minus * f;
      }
    }
    ThetaOperator op(k);
    for (auto& [a, c] : plus.terms()) op.add_term(a, RationalFunction(k, c));
    Poly zi = Poly::variable(k, i);
    for (auto& [a, c] : minus.terms()) op.add_term(a, RationalFunction(zi * (-c)));
    out.push_back(op);
  }
  return out;
}

ThetaOperator theta0(const ModelData& m) {
  ThetaOperator t(m.k);
  auto l0 = m.l0();
  for (int i = 0; i < m.k; ++i) t.add_term(Mono::unit(i), RationalFunction(m.k, l0[i]));
  return t;
}

namespace {

// Truncated jet in rho_1..rho_k: value, gradient, Hessian at rho = 0.
struct Jet {
  Rational v;
  std::vector<Rational> g;
  std::vector<std::vector<Rational>> h;

  explicit Jet(int k, const Rational& c = 0) : v(c), g(k, 0), h(k, std::vector<Rational>(k, 0)) {}

  Jet& operator*=(const Jet& o) {
    int k = static_cast<int>(g.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h[i][j] = v * o.h[i][j] + o.v * h[i][j] + g[i] * o.g[j] + g[j] * o.g[i];
    for (int i = 0; i < k; ++i) g[i] = v * o.g[i] + o.v * g[i];
    v *= o.v;
    return *this;
  }
};

// Jet of y + c with y linear: y = sum lin_i rho_i.
Jet linear(const std::vector<int>& lin, const Rational& c) {
  Jet j(static_cast<int>(lin.size()), c);
  for (std::size_t i = 0; i < lin.size(); ++i) j.g[i] = lin[i];
  return j;
}

// Jet of 1/(y + c), c != 0.
Jet reciprocal(const std::vector<int>& lin, const Rational& c) {
  int k = static_cast<int>(lin.size());
  Jet j(k, 1 / c);
  Rational c2 = 1 / (c * c), c3 = 2 / (c * c * c);
  for (int i = 0; i < k; ++i) {
    j.g[i] = -lin[i] * c2;
    for (int l = 0; l < k; ++l) j.h[i][l] = lin[i] * lin[l] * c3;
  }
  return j;
}

// Gamma(1+y)/Gamma(1+y+n) for an integer shift n.
Jet gamma_ratio(const std::vector<int>& lin, int n) {
  Jet r(static_cast<int>(lin.size()), 1);
  if (n >= 0) {
    for (int j = 1; j <= n; ++j) r *= reciprocal(lin, j);
  } else {
    for (int j = 0; j < -n; ++j) r *= linear(lin, -j);
  }
  return r;
}

}  // namespace

FrobeniusBasis frobenius_basis(const ModelData& m, int order) {
  int k = m.k;
  const auto& basis = m.relations.basis;
  if (m.double_log.empty()) throw Error(ErrorKind::invalid_input, m.name + ": no double-log combination in registry");
  FrobeniusBasis fb;
  fb.k = k;
  fb.order = order;
  // coefficient jets c_n(rho) for all n with |n| <= order
  MultiSeries c0(k, order);
  std::vector<MultiSeries> c1(k, MultiSeries(k, order));
  std::vector<std::vector<MultiSeries>> c2(k, std::vector<MultiSeries>(k, MultiSeries(k, order)));
  std::vector<int> n(k, 0);
  for (;;) {
    int tot = 0;
    for (int x : n) tot += x;
    if (tot <= order) {
      Jet c(k, 1);
      for (std::size_t pt = 0; pt < m.points.size(); ++pt) {
        std::vector<int> lin(k);
        int shift = 0;
        for (int i = 0; i < k; ++i) {
          lin[i] = basis[i][pt];
          shift += basis[i][pt] * n[i];
        }
        c *= gamma_ratio(lin, shift);
      }
      Mono mu = Mono::from_vector(n);
      c0.set(mu, c.v);
      for (int i = 0; i < k; ++i) {
        c1[i].set(mu, c.g[i]);
        for (int j = 0; j < k; ++j) c2[i][j].set(mu, c.h[i][j]);
      }
    }
    int i = 0;
    while (i < k && n[i] == order) n[i] = 0, ++i;
    if (i == k) break;
    ++n[i];
  }
  auto L = [&](int i) { return LogSeries::log_var(k, order, i); };
  fb.omega0 = LogSeries(c0);
  for (int i = 0; i < k; ++i) {
    fb.t.push_back(LogSeries(c1[i]) + LogSeries(c0) * L(i));
    fb.mirror.push_back(c1[i]);
  }
  // d_i d_j of sum c_n(rho) z^{n+rho}
  auto dd = [&](int i, int j) {
    return LogSeries(c2[i][j]) + LogSeries(c1[i]) * L(j) + LogSeries(c1[j]) * L(i) + LogSeries(c0) * L(i) * L(j);
  };
  fb.double_log = LogSeries(k, order);
  std::vector<std::vector<Rational>> q(k, std::vector<Rational>(k, 0));
  for (auto& [i, j, w] : m.double_log) {
    fb.double_log += dd(i, j) * w;
    if (i == j) q[i][i] += w;
    else q[i][j] += w / 2, q[j][i] += w / 2;
  }
  // scale: quadratic log part equals (s/2) t.M.t
  bool found = false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (m.intersection.empty() || m.intersection[i][j] == 0) continue;
      Rational s = 2 * q[i][j] / m.intersection[i][j];
      if (found && s != fb.scale) throw Error(ErrorKind::invalid_input, m.name + ": double-log combination disagrees with intersection data");
      fb.scale = s;
      found = true;
    }
  if (!found) fb.scale = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!m.intersection.empty() && fb.scale * m.intersection[i][j] != 2 * q[i][j])
        throw Error(ErrorKind::invalid_input, m.name + ": double-log combination disagrees with intersection data");
  return fb;
}

LogSeries verify_annihilation(const ThetaOperator& op, const LogSeries& s) { return op.apply(s); }

}  // namespace lmsb
