// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lmsb {

inline constexpr int kMaxVars = 6;

// Exponent vector. Ordered by total degree, then descending lexicographic,
// so x1 sorts before x2 within a degree and constants come first.
struct Mono {
  std::array<std::int16_t, kMaxVars> e{};

  Mono() = default;
  Mono(std::initializer_list<int> xs) {
    int i = 0;
    for (int x : xs) e[i++] = static_cast<std::int16_t>(x);
  }
  static Mono unit(int i, int k = 1) {
    Mono m;
    m.e[i] = static_cast<std::int16_t>(k);
    return m;
  }

  int operator[](int i) const { return e[i]; }
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool nonnegative() const {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Mono operator+(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
    return r;
  }
  Mono operator-(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
    return r;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  bool operator<(const Mono& o) const {
    int a = degree(), b = o.degree();
    if (a != b) return a < b;
    return o.e < e;
  }

  std::vector<int> to_vector(int n) const { return {e.begin(), e.begin() + n}; }
  static Mono from_vector(const std::vector<int>& v) {
    Mono m;
    for (std::size_t i = 0; i < v.size(); ++i) m.e[i] = static_cast<std::int16_t>(v[i]);
    return m;
  }
};

// "[1,0]" style key used in JSON dumps.
std::string mono_key(const Mono& m, int n);
Mono mono_min(const Mono& a, const Mono& b);

}  // namespace lmsb
