// Copyright 2026 The shiftcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic in Q(sqrt D) for mechanical words.  Internal header.

#ifndef SHIFTCOVER_SRC_QUADRATIC_HPP_
#define SHIFTCOVER_SRC_QUADRATIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftcover/generators.hpp"

namespace shiftcover::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// a + b * sqrt(D) for the field's fixed D.
struct Quad {
  BigRat a;
  BigRat b;
};

inline Quad operator+(const Quad& x, const Quad& y) {
  return {x.a + y.a, x.b + y.b};
}

class QuadraticField {
 public:
  QuadraticField(BigInt d, Quad alpha) : d_(std::move(d)), alpha_(alpha) {}

  const BigInt& discriminant() const { return d_; }
  const Quad& alpha() const { return alpha_; }

  Quad rational(const Fraction& f) const {
    return {BigRat(f.num) / BigRat(f.den), BigRat(0)};
  }
  Quad times_alpha(const Fraction& f) const {
    BigRat c = BigRat(f.num) / BigRat(f.den);
    return {alpha_.a * c, alpha_.b * c};
  }
  Quad mul(const Quad& x, const Quad& y) const {
    return {x.a * y.a + x.b * y.b * BigRat(d_), x.a * y.b + x.b * y.a};
  }
  Quad inverse(const Quad& x) const {
    BigRat norm = x.a * x.a - x.b * x.b * BigRat(d_);
    if (norm == 0) throw UnsupportedArithmetic("division by zero in Q(sqrt D)");
    return {x.a / norm, -x.b / norm};
  }

  // floor(a + b sqrt D) with a sign comparison of integers only.
  BigInt floor(const Quad& x) const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt ad = denominator(x.a), bd = denominator(x.b);
    BigInt m = boost::multiprecision::lcm(ad, bd);
    BigInt A = numerator(x.a) * (m / ad);
    BigInt B = numerator(x.b) * (m / bd);
    BigInt s = B * B * d_;
    BigInt r = boost::multiprecision::sqrt(s);
    BigInt fb;
    if (B >= 0) {
      fb = r;
    } else {
      fb = (r * r == s) ? BigInt(-r) : BigInt(-r - 1);
    }
    BigInt n = A + fb;
    BigInt q = n / m;
    if (n < 0 && q * m != n) q -= 1;
    return q;
  }

 private:
  BigInt d_;
  Quad alpha_;
};

// alpha = [0; d1 + 1, d2, ...] for an eventually periodic digit stream.
inline QuadraticField slope_of(const SturmianSpec& spec) {
  if (!spec.quadratic())
    throw UnsupportedArithmetic("slope is rational; no quadratic field");
  const std::size_t m = spec.cf_period.size();
  // Purely periodic tail beta = [p0; p1, ..., p_{m-1}, beta].
  BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (unsigned p : spec.cf_period) {
    BigInt h = BigInt(p) * h1 + h2;
    BigInt k = BigInt(p) * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  // Q beta^2 + (Q' - P) beta - P' = 0.
  const BigInt& P = h1;
  const BigInt& Pp = h2;
  const BigInt& Q = k1;
  const BigInt& Qp = k2;
  BigInt d = (P - Qp) * (P - Qp) + 4 * Q * Pp;
  QuadraticField tmp(d, Quad{});
  Quad x{BigRat(P - Qp) / BigRat(2 * Q), BigRat(1) / BigRat(2 * Q)};
  // Preperiod: every digit before the first full period, with d1 shifted.
  const std::size_t pre = spec.cf_digits.size() + m;
  for (std::size_t i = pre; i >= 1; --i) {
    unsigned t = spec.digit(i) + (i == 1 ? 1u : 0u);
    x = Quad{BigRat(t), BigRat(0)} + tmp.inverse(x);
  }
  return QuadraticField(d, tmp.inverse(x));
}

}  // namespace shiftcover::detail

#endif  // SHIFTCOVER_SRC_QUADRATIC_HPP_
