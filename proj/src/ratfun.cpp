// SPDX-License-Identifier: Apache-2.0
#include "lmsb/ratfun.hpp"

#include <cctype>

#include "lmsb/error.hpp"

namespace lmsb {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(num_.nvars(), 1) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  int n = std::max(num_.nvars(), den_.nvars());
  if (den_.is_zero()) throw Error(ErrorKind::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    num_ = Poly(n);
    den_ = Poly(n, 1);
    return;
  }
  Mono g = mono_min(num_.min_exponents(), den_.min_exponents());
  if (g.degree() > 0) {
    num_ = num_.div_mono(g);
    den_ = den_.div_mono(g);
  }
  if (!den_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Poly(n, 1);
    }
  }
  Rational c = den_.terms().begin()->second;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (auto q = o.den_.divide_exact(den_)) {
    num_ = num_ * *q + o.num_;
    den_ = o.den_;
  } else if (auto p = den_.divide_exact(o.den_)) {
    num_ += o.num_ * *p;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction(std::max(nvars(), o.nvars()));
    return *this;
  }
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant())
    if (auto q = n1.divide_exact(d2)) {
      n1 = *q;
      d2 = Poly(d2.nvars(), 1);
    }
  if (!d1.is_constant())
    if (auto q = n2.divide_exact(d1)) {
      n2 = *q;
      d1 = Poly(d1.nvars(), 1);
    }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(RationalFunction a, const Rational& c) {
  if (sgn(c) == 0) return RationalFunction(a.nvars());
  a.num_ *= c;
  return a;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return RationalFunction(den_, num_).pow(-k);
  RationalFunction r;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  r.normalize();
  return r;
}

RationalFunction RationalFunction::derivative(int i) const {
  return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

RationalFunction RationalFunction::theta(int i) const {
  return RationalFunction(num_.theta(i) * den_ - num_ * den_.theta(i), den_ * den_);
}

Rational RationalFunction::eval(const std::vector<Rational>& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw Error(ErrorKind::division_by_zero, "pole of rational function");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::substitute(const std::vector<RationalFunction>& vals) const {
  int target = vals.empty() ? 0 : vals[0].nvars();
  auto sub = [&](const Poly& p) {
    RationalFunction r(target);
    std::vector<std::vector<RationalFunction>> powers(p.nvars());
    for (auto& [m, c] : p.terms()) {
      RationalFunction t(target, c);
      for (int i = 0; i < p.nvars(); ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.emplace_back(target, 1);
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * vals[i]);
        t *= pw[m[i]];
      }
      r += t;
    }
    return r;
  };
  return sub(num_) / sub(den_);
}

RationalFunction RationalFunction::cancel(const std::vector<Poly>& factors) const {
  RationalFunction r = *this;
  bool changed = false;
  for (auto& f : factors) {
    if (f.is_constant()) continue;
    for (;;) {
      auto qd = r.den_.divide_exact(f);
      if (!qd) break;
      auto qn = r.num_.divide_exact(f);
      if (!qn) break;
      r.num_ = std::move(*qn);
      r.den_ = std::move(*qd);
      changed = true;
    }
  }
  if (changed) r.normalize();
  return r;
}

bool RationalFunction::proportional(const RationalFunction& o, Rational* lambda) const {
  if (o.is_zero()) {
    if (lambda) *lambda = 0;
    return is_zero();
  }
  if (is_zero()) {
    if (lambda) *lambda = 0;
    return true;
  }
  Poly a = num_ * o.den_, b = o.num_ * den_;
  if (a.leading_mono() != b.leading_mono()) return false;
  Rational l = a.leading_coeff() / b.leading_coeff();
  if (a != b * l) return false;
  if (lambda) *lambda = l;
  return true;
}

std::string RationalFunction::str(const Names& names) const {
  if (den_.is_constant()) return num_.str(names);
  std::string d = den_.str(names);
  if (num_.is_constant()) {
    Rational c = num_.constant_term();
    std::string s = c.get_num().get_str() + "/(";
    if (c.get_den() != 1) s += c.get_den().get_str() + "*";
    bool single = den_.terms().size() == 1;
    if (c.get_den() != 1 && !single) return s + "(" + d + "))";
    return s + d + ")";
  }
  return "(" + num_.str(names) + ")/(" + d + ")";
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Names& names) : s_(s), names_(names) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::invalid_input,
                "cannot parse '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int n() const { return static_cast<int>(names_.size()); }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RationalFunction power() {
    RationalFunction b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      int k = std::stoi(std::string(s_.substr(st, pos_ - st)));
      return b.pow(neg ? -k : k);
    }
    return b;
  }
  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(n(), Rational(Integer(std::string(s_.substr(st, pos_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(st, pos_ - st));
      for (int i = 0; i < n(); ++i)
        if (names_[i] == id) return RationalFunction(Poly::variable(n(), i));
      fail("unknown symbol '" + id + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Names& names_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_ratfun(std::string_view s, const Names& names) { return Parser(s, names).parse(); }

Poly parse_poly(std::string_view s, const Names& names) {
  RationalFunction f = parse_ratfun(s, names);
  if (!f.is_polynomial()) throw Error(ErrorKind::invalid_input, "expected a polynomial: " + std::string(s));
  return f.num() * (1 / f.den().constant_term());
}

}  // namespace lmsb
