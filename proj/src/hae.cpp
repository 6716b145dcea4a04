// SPDX-License-Identifier: Apache-2.0
#include "lmsb/hae.hpp"

#include <numeric>

#include "lmsb/error.hpp"

namespace lmsb {

RationalFunction SpecialGeometry::theta0(const RationalFunction& f) const {
  RationalFunction r(k);
  for (int i = 0; i < k; ++i)
    if (l0[i] != 0) r += f.theta(i) * Rational(l0[i]);
  return r;
}

namespace {

MultiSeries theta0_series(const std::vector<int>& l0, const MultiSeries& s) {
  MultiSeries r(s.nvars(), s.order());
  for (std::size_t i = 0; i < l0.size(); ++i)
    if (l0[i] != 0) r += s.theta(static_cast<int>(i)) * Rational(l0[i]);
  return r;
}

LogSeries theta0_log(const std::vector<int>& l0, const LogSeries& s) {
  LogSeries r(s.nvars(), s.order());
  for (std::size_t i = 0; i < l0.size(); ++i)
    if (l0[i] != 0) r += theta_apply(static_cast<int>(i), s) * Rational(l0[i]);
  return r;
}

MultiSeries pure_of(const LogSeries& s) {
  if (!s.is_pure()) throw Error(ErrorKind::invalid_input, "expected a series without logarithms");
  return s.pure();
}

// theta_0 t_g / (-c_g) for the first g with c_g != 0
MultiSeries period_metric(const ModelData& m, const FrobeniusBasis& fb) {
  auto c = m.c();
  int g = 0;
  while (g < m.k && c[g] == 0) ++g;
  if (g == m.k) throw Error(ErrorKind::invalid_input, m.name + ": c vanishes");
  return pure_of(theta0_log(m.l0(), fb.t[g])) * Rational(-1, c[g]);
}

}  // namespace

SpecialGeometry special_geometry(const ModelData& m, int order) {
  if (!m.kappa || !m.has_registry_data() || m.holomorphic_limit.kind == HolomorphicLimit::Kind::none)
    throw Error(ErrorKind::unknown_model, m.name + ": no special-geometry data");
  SpecialGeometry sg;
  sg.k = m.k;
  sg.order = order;
  sg.l0 = m.l0();
  FrobeniusBasis fb = frobenius_basis(m, order);
  const auto& hl = m.holomorphic_limit;
  if (hl.kind == HolomorphicLimit::Kind::theta_t) {
    sg.Glimit = pure_of(theta_apply(hl.theta, fb.t[hl.t]));
  } else {
    MultiSeries h(m.k, order);
    for (auto& [i, w] : hl.h) h += fb.mirror[i] * w;
    sg.Glimit = MultiSeries(m.k, order, 1) - theta0_series(sg.l0, h);
  }
  sg.A = theta0_series(sg.l0, sg.Glimit) * sg.Glimit.inverse();
  sg.kappa = *m.kappa;
  sg.Y00 = yukawa_closed_forms(m).at(0, 0);
  sg.dlogY = sg.theta0(sg.Y00) / sg.Y00;
  return sg;
}

MultiSeries special_geometry_residual(const SpecialGeometry& sg) {
  int o = sg.order;
  return theta0_series(sg.l0, sg.A) + sg.A * sg.A - MultiSeries::from_ratfun(sg.dlogY, o) * sg.A -
         MultiSeries::from_ratfun(sg.kappa, o);
}

std::vector<LogSeries> period_residuals(const ModelData& m, int order) {
  FrobeniusBasis fb = frobenius_basis(m, order);
  auto l0 = m.l0();
  RationalFunction y00 = yukawa_closed_forms(m).at(0, 0);
  RationalFunction t0y(m.k);
  for (int i = 0; i < m.k; ++i) t0y += y00.theta(i) * Rational(l0[i]);
  LogSeries dlogy(MultiSeries::from_ratfun(t0y / y00, order));
  LogSeries kap(MultiSeries::from_ratfun(*m.kappa, order));
  std::vector<LogSeries> periods = fb.t;
  periods.push_back(fb.double_log);
  std::vector<LogSeries> out;
  for (auto& p : periods) {
    LogSeries f = theta0_log(l0, p);
    LogSeries tf = theta0_log(l0, f);
    out.push_back(theta0_log(l0, tf) - dlogy * tf - kap * f);
  }
  return out;
}

AmplitudePoly::AmplitudePoly(int g, int n, int nvars) : g_(g), n_(n), nvars_(nvars) {}

RationalFunction AmplitudePoly::coeff(int j) const {
  if (j < 0 || j > degree()) return RationalFunction(nvars_);
  return coeffs_[j];
}

void AmplitudePoly::set(int j, const RationalFunction& c) {
  while (static_cast<int>(coeffs_.size()) <= j) coeffs_.emplace_back(nvars_);
  coeffs_[j] = c;
  trim();
}

void AmplitudePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void AmplitudePoly::check_degree() const {
  if (degree() > 3 * g_ - 3 + n_)
    throw Error(ErrorKind::invalid_input, "amplitude exceeds degree 3g-3+n in A");
}

AmplitudePoly& AmplitudePoly::operator+=(const AmplitudePoly& o) {
  for (int j = 0; j <= o.degree(); ++j) set(j, coeff(j) + o.coeffs_[j]);
  return *this;
}

AmplitudePoly& AmplitudePoly::operator-=(const AmplitudePoly& o) {
  for (int j = 0; j <= o.degree(); ++j) set(j, coeff(j) - o.coeffs_[j]);
  return *this;
}

AmplitudePoly operator*(const AmplitudePoly& a, const AmplitudePoly& b) {
  AmplitudePoly r(0, 0, a.nvars_);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) r.set(i + j, r.coeff(i + j) + a.coeffs_[i] * b.coeffs_[j]);
  return r;
}

AmplitudePoly operator*(const RationalFunction& f, const AmplitudePoly& a) {
  AmplitudePoly r(a.g_, a.n_, a.nvars_);
  for (int j = 0; j <= a.degree(); ++j) r.set(j, f * a.coeffs_[j]);
  return r;
}

bool AmplitudePoly::operator==(const AmplitudePoly& o) const {
  if (degree() != o.degree()) return false;
  for (int j = 0; j <= degree(); ++j)
    if (coeffs_[j] != o.coeffs_[j]) return false;
  return true;
}

AmplitudePoly AmplitudePoly::derivative() const {
  AmplitudePoly r(g_, n_, nvars_);
  for (int j = 1; j <= degree(); ++j) r.set(j - 1, coeffs_[j] * Rational(j));
  return r;
}

AmplitudePoly AmplitudePoly::integral() const {
  AmplitudePoly r(g_, n_, nvars_);
  for (int j = 0; j <= degree(); ++j) r.set(j + 1, coeffs_[j] * Rational(1, j + 1));
  return r;
}

AmplitudePoly AmplitudePoly::with_labels(int g, int n) const {
  AmplitudePoly r = *this;
  r.g_ = g;
  r.n_ = n;
  return r;
}

MultiSeries AmplitudePoly::evaluate(const MultiSeries& A, int order) const {
  MultiSeries r(nvars_, order);
  for (int j = degree(); j >= 0; --j) r = r * A + MultiSeries::from_ratfun(coeffs_[j], order);
  return r;
}

std::string AmplitudePoly::str(const Names& z) const {
  std::string s;
  for (int j = degree(); j >= 0; --j) {
    if (coeffs_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[j].str(z) + ")";
    if (j > 0) s += j == 1 ? "*A" : "*A^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

AmplitudePoly amplitude(int g, int n, int nvars, std::vector<RationalFunction> c) {
  AmplitudePoly r(g, n, nvars);
  for (std::size_t j = 0; j < c.size(); ++j) r.set(static_cast<int>(j), c[j]);
  return r;
}

AmplitudePoly yy_step(const AmplitudePoly& c, const SpecialGeometry& sg) {
  int k = sg.k;
  // theta_0 A = kappa + dlogY A - A^2
  AmplitudePoly t0a = amplitude(0, 0, k, {sg.kappa, sg.dlogY, RationalFunction(k, -1)});
  AmplitudePoly a = amplitude(0, 0, k, {RationalFunction(k), RationalFunction(k, 1)});
  AmplitudePoly r(0, 0, k);
  for (int j = 0; j <= c.degree(); ++j) r.set(j, sg.theta0(c.coeff(j)));
  r += c.derivative() * t0a;
  r -= RationalFunction(k, c.n()) * (a * c);
  r = r.with_labels(c.g(), c.n() + 1);
  r.check_degree();
  return r;
}

AmplitudePoly genus1(const ModelData& m, const SpecialGeometry& sg) {
  if (!m.f11) throw Error(ErrorKind::missing_ambiguity, m.name + ": no genus-1 ambiguity");
  AmplitudePoly r = amplitude(1, 1, sg.k, {*m.f11, RationalFunction(sg.k, Rational(-1, 2))});
  r.check_degree();
  return r;
}

AmplitudePoly genus2_rhs(const SpecialGeometry& sg, const AmplitudePoly& c11) {
  AmplitudePoly c12 = yy_step(c11, sg);
  RationalFunction f = RationalFunction(sg.k, Rational(-1, 2)) / sg.Y00;
  return (f * (c12 + c11 * c11)).with_labels(2, 0);
}

AmplitudePoly genus2(const ModelData& m, const SpecialGeometry& sg, const std::optional<RationalFunction>& f2) {
  std::optional<RationalFunction> amb = f2 ? f2 : m.f2;
  if (!amb) throw Error(ErrorKind::missing_ambiguity, m.name + ": genus-2 ambiguity f2 not known; pass one explicitly");
  AmplitudePoly r = genus2_rhs(sg, genus1(m, sg)).integral();
  r.set(0, r.coeff(0) + *amb);
  r = r.with_labels(2, 0);
  r.check_degree();
  return r;
}

AmplitudePoly propagator(const SpecialGeometry& sg, const RationalFunction& fs) {
  return amplitude(0, 0, sg.k, {fs, -(RationalFunction(sg.k, 1) / sg.Y00)});
}

AmplitudePoly feynman_genus2(const SpecialGeometry& sg, const AmplitudePoly& c11, const RationalFunction& fs) {
  int k = sg.k;
  AmplitudePoly s = propagator(sg, fs);
  AmplitudePoly c03 = amplitude(0, 3, k, {sg.Y00});
  AmplitudePoly c04 = yy_step(c03, sg);
  AmplitudePoly c12 = yy_step(c11, sg);
  auto q = [&](Rational x) { return RationalFunction(k, x); };
  AmplitudePoly s2 = s * s;
  AmplitudePoly r = q(Rational(1, 2)) * (s * c12) + q(Rational(1, 2)) * (s * c11 * c11) -
                    q(Rational(1, 8)) * (s2 * c04) - q(Rational(1, 2)) * (s2 * c03 * c11) +
                    q(Rational(5, 24)) * (s2 * s * c03 * c03);
  return r.with_labels(2, 0);
}

bool GenusInvariants::integral() const {
  for (auto& [b, e] : entries)
    if (e.determined && e.bps.get_den() != 1) return false;
  return true;
}

GenusInvariants genus_invariants(const ModelData& m, int g, int max_degree, const std::optional<RationalFunction>& f2) {
  if (g != 1 && g != 2) throw Error(ErrorKind::invalid_input, "genus must be 1 or 2");
  int k = m.k, order = max_degree;
  FrobeniusBasis fb = frobenius_basis(m, order);
  SpecialGeometry sg = special_geometry(m, order);
  MultiSeries f;
  if (g == 1) {
    MultiSeries c11 = genus1(m, sg).evaluate(sg.A, order);
    f = -(c11 * period_metric(m, fb).inverse());
  } else {
    f = genus2(m, sg, f2).evaluate(sg.A, order);
  }
  f = f.compose(invert_mirror_map(fb));
  InstantonSeries g0 = gw0_invariants(m, max_degree);
  auto c = m.c();
  GenusInvariants r;
  r.g = g;
  // genus 1: coefficient / (c.beta) = sum_{d | beta} (n^1 + n^0/12)_{beta/d} / d
  // genus 2: coefficient = sum_{d | beta} d (n^2 + n^0/240)_{beta/d}
  int w = g == 1 ? -1 : 1;
  Rational shift = g == 1 ? Rational(1, 12) : Rational(1, 240);
  for (auto& [b, e0] : g0.entries) {
    r.raw[b] = f.coeff(b);
    InstantonEntry e;
    int cb = 0;
    for (int j = 0; j < k; ++j) cb += c[j] * b[j];
    if (g == 1 && cb == 0) e.determined = false;
    else e.gw = g == 1 ? f.coeff(b) / cb : f.coeff(b);
    r.entries[b] = e;
  }
  for (auto& [b, e] : r.entries) {
    if (!e.determined) continue;
    Rational x = e.gw;
    int cont = 0;
    for (int j = 0; j < k; ++j) cont = std::gcd(cont, b[j]);
    for (int d = 1; d <= cont && e.determined; ++d) {
      if (cont % d) continue;
      Mono sub;
      for (int j = 0; j < k; ++j) sub.e[j] = static_cast<std::int16_t>(b[j] / d);
      auto& n0 = g0.entries.at(sub);
      if (!n0.determined) {
        e.determined = false;
        break;
      }
      Rational dw = 1;
      for (int i = 0; i < std::abs(w); ++i) dw *= d;
      if (w < 0) dw = 1 / dw;
      x -= dw * n0.bps * shift;
      if (d > 1) {
        auto& s = r.entries.at(sub);
        if (!s.determined) {
          e.determined = false;
          break;
        }
        x -= dw * s.bps;
      }
    }
    e.bps = x;
  }
  return r;
}

}  // namespace lmsb
