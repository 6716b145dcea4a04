// SPDX-License-Identifier: Apache-2.0
#include "lmsb/series.hpp"

#include <algorithm>
#include <functional>

#include "lmsb/error.hpp"

namespace lmsb {

namespace {

void check_compatible(int n1, int o1, int n2, int o2) {
  if (n1 != n2 || o1 != o2)
    throw Error(ErrorKind::invalid_input, "series with different variable count or truncation order");
}

// All exponent vectors of total degree <= order, in Mono order.
std::vector<Mono> monomials_upto(int nvars, int order) {
  std::vector<Mono> out;
  Mono m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m.e[i] = static_cast<std::int16_t>(k);
      rec(i + 1, left - k);
    }
    m.e[i] = 0;
  };
  rec(0, order);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MultiSeries::MultiSeries(int nvars, int order, const Rational& c) : nvars_(nvars), order_(order) {
  if (sgn(c) != 0) terms_.emplace(Mono{}, c);
}

MultiSeries MultiSeries::variable(int nvars, int order, int i) {
  MultiSeries s(nvars, order);
  s.set(Mono::unit(i), 1);
  return s;
}

MultiSeries MultiSeries::from_poly(const Poly& p, int order) {
  MultiSeries s(p.nvars(), order);
  for (auto& [m, c] : p.terms())
    if (m.degree() <= order) s.terms_.emplace(m, c);
  return s;
}

MultiSeries MultiSeries::from_ratfun(const RationalFunction& f, int order) {
  MultiSeries d = from_poly(f.den(), order);
  if (sgn(d.constant_term()) == 0)
    throw Error(ErrorKind::division_by_zero, "denominator vanishes at the expansion point");
  return from_poly(f.num(), order) * d.inverse();
}

Rational MultiSeries::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::set(const Mono& m, const Rational& c) {
  if (m.degree() > order_) return;
  if (sgn(c) == 0) terms_.erase(m);
  else terms_[m] = c;
}

void MultiSeries::add_term(const Mono& m, const Rational& c) {
  if (sgn(c) == 0 || m.degree() > order_) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_compatible(nvars_, order_, o.nvars_, o.order_);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  check_compatible(nvars_, order_, o.nvars_, o.order_);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a.nvars_, a.order_, b.nvars_, b.order_);
  MultiSeries r(a.nvars_, a.order_);
  Rational t;
  for (auto& [ma, ca] : a.terms_) {
    int room = a.order_ - ma.degree();
    for (auto& [mb, cb] : b.terms_) {
      if (mb.degree() > room) break;
      t = ca * cb;
      r.add_term(ma + mb, t);
    }
  }
  return r;
}

MultiSeries MultiSeries::theta(int i) const {
  MultiSeries r(nvars_, order_);
  for (auto& [m, c] : terms_)
    if (m[i] != 0) r.terms_.emplace_hint(r.terms_.end(), m, c * m[i]);
  return r;
}

MultiSeries MultiSeries::truncated(int n) const {
  MultiSeries r(nvars_, n);
  for (auto& [m, c] : terms_)
    if (m.degree() <= n) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

MultiSeries MultiSeries::inverse() const {
  Rational u0 = constant_term();
  if (sgn(u0) == 0) throw Error(ErrorKind::division_by_zero, "series inverse with zero constant term");
  Rational inv0 = 1 / u0;
  MultiSeries v(nvars_, order_);
  Rational acc;
  for (const Mono& mu : monomials_upto(nvars_, order_)) {
    if (mu.degree() == 0) {
      v.terms_.emplace(mu, inv0);
      continue;
    }
    acc = 0;
    for (auto& [nu, c] : terms_) {
      if (nu.degree() == 0) continue;
      if (nu.degree() > mu.degree()) break;
      if (!nu.divides(mu)) continue;
      auto it = v.terms_.find(mu - nu);
      if (it != v.terms_.end()) acc += c * it->second;
    }
    if (sgn(acc) != 0) v.terms_.emplace(mu, -acc * inv0);
  }
  return v;
}

MultiSeries MultiSeries::exp() const {
  if (sgn(constant_term()) != 0) throw Error(ErrorKind::invalid_input, "exp of series with nonzero constant term");
  MultiSeries r(nvars_, order_, 1), p(nvars_, order_, 1);
  int md = min_degree();
  if (md < 0) return r;
  for (int k = 1; k * md <= order_; ++k) {
    p = p * *this;
    p *= Rational(1, k);
    r += p;
  }
  return r;
}

MultiSeries MultiSeries::log() const {
  if (constant_term() != 1) throw Error(ErrorKind::invalid_input, "log of series with constant term != 1");
  MultiSeries du(nvars_, order_);
  for (auto& [m, c] : terms_)
    if (m.degree() > 0) du.terms_.emplace(m, c * m.degree());
  MultiSeries w = du * inverse();
  for (auto& [m, c] : w.terms_) c /= m.degree();
  return w;
}

MultiSeries MultiSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  MultiSeries r(nvars_, order_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MultiSeries MultiSeries::compose(const std::vector<MultiSeries>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw Error(ErrorKind::invalid_input, "compose: wrong substitution count");
  int tn = subs.at(0).nvars(), to = subs.at(0).order();
  for (auto& s : subs)
    if (sgn(s.constant_term()) != 0) throw Error(ErrorKind::invalid_input, "compose: substitution with constant term");
  std::map<Mono, MultiSeries> cache;
  cache.emplace(Mono{}, MultiSeries(tn, to, 1));
  std::function<const MultiSeries&(const Mono&)> power = [&](const Mono& m) -> const MultiSeries& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    int i = 0;
    while (m[i] == 0) ++i;
    MultiSeries p = power(m - Mono::unit(i)) * subs[i];
    return cache.emplace(m, std::move(p)).first->second;
  };
  MultiSeries r(tn, to);
  for (auto& [m, c] : terms_) {
    if (m.degree() > to) break;
    r += power(m) * c;
  }
  return r;
}

Poly MultiSeries::to_poly() const {
  Poly p(nvars_);
  for (auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

int MultiSeries::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

std::string MultiSeries::str(const Names& names) const {
  std::string s = to_poly().str(names);
  return s + " + O(" + std::to_string(order_ + 1) + ")";
}

LogSeries::LogSeries(const MultiSeries& s) : nvars_(s.nvars()), order_(s.order()) {
  if (!s.is_zero()) comps_.emplace(Mono{}, s);
}

LogSeries LogSeries::log_var(int nvars, int order, int i) {
  LogSeries r(nvars, order);
  r.comps_.emplace(Mono::unit(i), MultiSeries(nvars, order, 1));
  return r;
}

MultiSeries LogSeries::component(const Mono& k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? MultiSeries(nvars_, order_) : it->second;
}

bool LogSeries::is_pure() const { return comps_.empty() || (comps_.size() == 1 && comps_.begin()->first.degree() == 0); }

int LogSeries::log_degree() const { return comps_.empty() ? -1 : comps_.rbegin()->first.degree(); }

void LogSeries::add(const Mono& k, const MultiSeries& s) {
  if (s.is_zero()) return;
  check_compatible(nvars_, order_, s.nvars(), s.order());
  bool ok = k.degree() <= kMaxLogDegree;
  for (int i = 0; i < kMaxVars; ++i) ok = ok && k[i] >= 0 && k[i] <= kMaxLogDegree;
  if (!ok) throw Error(ErrorKind::log_overflow, "log degree exceeds " + std::to_string(kMaxLogDegree));
  auto [it, fresh] = comps_.emplace(k, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  check_compatible(nvars_, order_, o.nvars_, o.order_);
  for (auto& [k, s] : o.comps_) add(k, s);
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
  check_compatible(nvars_, order_, o.nvars_, o.order_);
  for (auto& [k, s] : o.comps_) add(k, -s);
  return *this;
}

LogSeries& LogSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) comps_.clear();
  for (auto& [k, s] : comps_) s *= c;
  return *this;
}

LogSeries LogSeries::operator-() const {
  LogSeries r = *this;
  for (auto& [k, s] : r.comps_) s = -s;
  return r;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  check_compatible(a.nvars_, a.order_, b.nvars_, b.order_);
  LogSeries r(a.nvars_, a.order_);
  for (auto& [ka, sa] : a.comps_)
    for (auto& [kb, sb] : b.comps_) r.add(ka + kb, sa * sb);
  return r;
}

LogSeries series_mul(const LogSeries& a, const LogSeries& b) { return a * b; }

LogSeries theta_apply(int i, const LogSeries& s) {
  if (i < 0 || i >= s.nvars()) throw Error(ErrorKind::invalid_input, "theta index out of range");
  LogSeries r(s.nvars(), s.order());
  for (auto& [k, f] : s.components()) {
    r.add(k, f.theta(i));
    if (k[i] > 0) r.add(k - Mono::unit(i), f * Rational(k[i]));
  }
  return r;
}

std::string LogSeries::str(const Names& names) const {
  if (comps_.empty()) return "0";
  std::string out;
  for (auto& [k, s] : comps_) {
    if (!out.empty()) out += " + ";
    std::string lg;
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < k[i]; ++j) lg += "log(" + names[i] + ")*";
    out += lg + "(" + s.to_poly().str(names) + ")";
  }
  return out + " + O(" + std::to_string(order_ + 1) + ")";
}

RationalFunction rational_reconstruct(const MultiSeries& s, const Poly& denom, int margin) {
  if (denom.is_zero()) throw Error(ErrorKind::division_by_zero, "zero denominator ansatz");
  int cut = s.order() - margin;
  if (cut < denom.total_degree()) throw Error(ErrorKind::no_fit, "series order too low for the denominator ansatz");
  MultiSeries prod = s * MultiSeries::from_poly(denom, s.order());
  Poly p(s.nvars());
  for (auto& [m, c] : prod.terms()) {
    if (m.degree() > cut) throw Error(ErrorKind::no_fit, "residual at degree " + std::to_string(m.degree()));
    p.add_term(m, c);
  }
  return RationalFunction(p, denom);
}

}  // namespace lmsb
