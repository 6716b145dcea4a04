// SPDX-License-Identifier: Apache-2.0
#include "lmsb/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "lmsb/error.hpp"

namespace lmsb {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

const Real kEps("1e-55");

// S(z) = t - log z = 3 sum_{n>=1} (-1)^n (3n-1)!/(n!)^3 z^n, and z dS/dz.
void mirror_series(const Complex& z, Complex& s, Complex& zds) {
  s = 0, zds = 0;
  Real a = -6;  // n = 1
  Complex zn = z;
  for (int n = 1; n < 2000; ++n) {
    Complex term = zn * a;
    s += term;
    zds += term * Real(n);
    if (abs(term) * Real(n) < kEps) return;
    a *= -Real(3 * n + 2) * Real(3 * n + 1) * Real(3 * n) / (Real(n + 1) * Real(n + 1) * Real(n + 1));
    zn *= z;
  }
  throw Error(ErrorKind::invalid_input, "oracle: mirror map series did not converge");
}

Complex invert(const Complex& q) {
  Complex z = q, s, zds;
  for (int it = 0; it < 1000; ++it) {
    mirror_series(z, s, zds);
    Complex next = q * exp(-s);
    if (abs(next - z) < abs(q) * Real("1e-47")) return next;
    z = next;
  }
  throw Error(ErrorKind::invalid_input, "oracle: fixed point iteration did not converge");
}

std::string str(const Real& x) { return x.str(30, std::ios_base::scientific); }

}  // namespace

OracleGw0 oracle_gw0_p2(int max_degree, double radius, int samples) {
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Complex> coeff(max_degree + 1, Complex(0));
  for (int j = 0; j < samples; ++j) {
    Real phi = 2 * pi * j / samples;
    Complex q = Complex(cos(phi), sin(phi)) * Real(radius);
    Complex z = invert(q), s, zds;
    mirror_series(z, s, zds);
    Complex dt = Real(1) + zds;                                // z dt/dz
    Complex c = Real(-1) / (Real(3) * (Real(1) + Real(27) * z)) / (dt * dt * dt);
    Complex qd = 1;
    for (int d = 0; d <= max_degree; ++d) {
      coeff[d] += c / qd;
      qd *= q;
    }
  }
  OracleGw0 out;
  std::vector<Real> gw(max_degree + 1), bps(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    gw[d] = coeff[d].real() / samples / (Real(d) * d * d);
    // N_d = sum_{k|d} n_{d/k} / k^3
    bps[d] = gw[d];
    for (int k = 2; k <= d; ++k)
      if (d % k == 0) bps[d] -= bps[d / k] / (Real(k) * k * k);
    out.gw.push_back(str(gw[d]));
    out.bps.push_back(str(bps[d]));
  }
  return out;
}

bool agrees_to_digits(const Rational& x, const std::string& y, int digits) {
  Real a = Real(x.get_num().get_str()) / Real(x.get_den().get_str());
  Real b(y);
  Real scale = std::max(abs(a), abs(b));
  if (scale == 0) return true;
  return abs(a - b) <= scale * pow(Real(10), -digits);
}

}  // namespace lmsb
