// SPDX-License-Identifier: Apache-2.0
#include "lmsb/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lmsb/error.hpp"

namespace lmsb {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::log_overflow: return "log-overflow";
    case ErrorKind::no_fit: return "no-fit";
    case ErrorKind::origin_not_interior: return "origin-not-interior";
    case ErrorKind::not_regular: return "not-regular";
    case ErrorKind::rank_deficient: return "rank-deficient";
    case ErrorKind::ansatz_insufficient: return "ansatz-insufficient";
    case ErrorKind::not_integrable: return "not-integrable";
    case ErrorKind::missing_ambiguity: return "missing-ambiguity";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::unknown_model: return "unknown-model";
    case ErrorKind::io: return "io";
  }
  return "error";
}

Rational parse_rational(std::string_view s) {
  Rational q;
  std::string str(s);
  if (str.empty() || q.set_str(str, 10) != 0 || sgn(q.get_den()) == 0)
    throw Error(ErrorKind::invalid_input, "malformed rational '" + str + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string mono_key(const Mono& m, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  return s + "]";
}

Mono mono_min(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Names default_names(int nvars, const std::string& stem) {
  if (nvars == 1) return {stem};
  Names n;
  for (int i = 1; i <= nvars; ++i) n.push_back(stem + std::to_string(i));
  return n;
}

Poly::Poly(int nvars, const Rational& c) : nvars_(nvars) {
  if (sgn(c) != 0) terms_.emplace(Mono{}, c);
}

Poly Poly::variable(int nvars, int i) { return monomial(nvars, Mono::unit(i)); }

Poly Poly::monomial(int nvars, const Mono& m, const Rational& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int Poly::degree(int i) const {
  int d = terms_.empty() ? -1 : 0;
  for (auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

Mono Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Mono r = terms_.begin()->first;
  for (auto& [m, c] : terms_) r = mono_min(r, m);
  return r;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.nvars_, b.nvars_));
  Rational t;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term(ma + mb, t);
    }
  return r;
}

Poly Poly::pow(int k) const {
  Poly r(nvars_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_)
    if (m[i] > 0) r.add_term(m - Mono::unit(i), c * m[i]);
  return r;
}

Poly Poly::theta(int i) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_)
    if (m[i] != 0) r.add_term(m, c * m[i]);
  return r;
}

Poly Poly::mul_mono(const Mono& k) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m + k, c);
  return r;
}

Poly Poly::div_mono(const Mono& k) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_) {
    Mono q = m - k;
    if (!q.nonnegative()) throw Error(ErrorKind::invalid_input, "monomial does not divide polynomial");
    r.terms_.emplace_hint(r.terms_.end(), q, c);
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  Rational s = 0, t;
  for (auto& [m, c] : terms_) {
    t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::substitute(const std::vector<Poly>& vals) const {
  int target = vals.empty() ? 0 : vals[0].nvars();
  Poly r(target);
  std::vector<std::vector<Poly>> powers(nvars_);
  for (auto& [m, c] : terms_) {
    Poly t(target, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly(target, 1));
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * vals[i]);
      t = t * pw[m[i]];
    }
    r += t;
  }
  return r;
}

Poly Poly::embed(int nvars, const std::vector<int>& map) const {
  Poly r(nvars);
  for (auto& [m, c] : terms_) {
    Mono k;
    for (int i = 0; i < nvars_; ++i) k.e[map[i]] = static_cast<std::int16_t>(k.e[map[i]] + m[i]);
    r.add_term(k, c);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
  Poly r = *this, q(std::max(nvars_, d.nvars_));
  const Mono& lm = d.leading_mono();
  const Rational& lc = d.leading_coeff();
  while (!r.is_zero()) {
    const Mono& m = r.leading_mono();
    if (!lm.divides(m)) return std::nullopt;
    Poly t = monomial(q.nvars(), m - lm, r.leading_coeff() / lc);
    q += t;
    r -= t * d;
  }
  return q;
}

namespace {

std::string mono_str(const Mono& m, int n, const Names& names) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] != 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string Poly::str(const Names& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    std::string ms = mono_str(m, nvars_, names);
    Rational a = abs(c);
    if (!s.empty() || sgn(c) < 0) s += sgn(c) < 0 ? "-" : "+";
    if (ms.empty()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += ms;
    }
  }
  return s;
}

}  // namespace lmsb
