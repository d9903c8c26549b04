// Copyright 2026 The ptlab Authors.
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

// Exact arithmetic: rationals, the real field Q(sqrt2) and the complex ring
// Q(i, sqrt2). Nothing here rounds; `to_double` exists for reporting only.

#ifndef PTLAB_EXACTNUM_HPP_
#define PTLAB_EXACTNUM_HPP_

#include <gmpxx.h>

#include <cassert>
#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "ptlab/error.hpp"

namespace ptlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorCode::kMalformed, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::kParse, "bad rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

// a + b*sqrt(2) with rational a, b.
class RealSqrt2 {
 public:
  RealSqrt2() = default;
  RealSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  RealSqrt2(long a) : a_(a) {}                  // NOLINT(implicit)
  RealSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static RealSqrt2 sqrt2() { return RealSqrt2(0, 1); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  // Exact sign. Since sqrt2 is irrational, a^2 == 2 b^2 only at zero.
  int sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational a2 = a_ * a_;
    const Rational b2 = 2 * b_ * b_;
    return a2 > b2 ? sa : sb;
  }

  RealSqrt2 conjugate() const { return RealSqrt2(a_, -b_); }

  // a^2 - 2 b^2, the field norm.
  Rational field_norm() const { return Rational(a_ * a_ - 2 * b_ * b_); }

  RealSqrt2 inverse() const {
    if (is_zero()) throw Error(ErrorCode::kMalformed, "division by zero");
    const Rational n = field_norm();
    return RealSqrt2(Rational(a_ / n), Rational(-b_ / n));
  }

  RealSqrt2& operator+=(const RealSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  RealSqrt2& operator-=(const RealSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  RealSqrt2& operator*=(const RealSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  RealSqrt2& operator/=(const RealSqrt2& o) { return *this *= o.inverse(); }

  friend RealSqrt2 operator+(RealSqrt2 x, const RealSqrt2& y) { return x += y; }
  friend RealSqrt2 operator-(RealSqrt2 x, const RealSqrt2& y) { return x -= y; }
  friend RealSqrt2 operator*(RealSqrt2 x, const RealSqrt2& y) { return x *= y; }
  friend RealSqrt2 operator/(RealSqrt2 x, const RealSqrt2& y) { return x /= y; }
  friend RealSqrt2 operator-(const RealSqrt2& x) { return RealSqrt2(-x.a_, -x.b_); }

  friend bool operator==(const RealSqrt2& x, const RealSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const RealSqrt2& x, const RealSqrt2& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational a_;
  Rational b_;
};

inline double to_double(const Rational& r) { return r.get_d(); }

inline double to_double(const RealSqrt2& x) {
  return x.rational_part().get_d() + x.sqrt2_part().get_d() * std::sqrt(2.0);
}

// "num/den" when rational, otherwise "num/den+num/den√2" (or "-" before the
// surd part when it is negative).
inline std::string to_string(const RealSqrt2& x) {
  std::string out = to_string(x.rational_part());
  if (!x.is_rational()) {
    const Rational& b = x.sqrt2_part();
    out += sgn(b) < 0 ? "-" : "+";
    out += to_string(Rational(abs(b)));
    out += "√2";
  }
  return out;
}

inline RealSqrt2 parse_real_sqrt2(std::string_view text) {
  std::string s(text);
  for (std::string_view tag : {"√2", "sqrt2"}) {
    const auto pos = s.find(tag);
    if (pos == std::string::npos) continue;
    if (pos + tag.size() != s.size()) {
      throw Error(ErrorCode::kParse, "trailing text after surd in '" + s + "'");
    }
    const std::string body = s.substr(0, pos);
    // Split at the last sign that is not the leading one.
    const auto split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
      return RealSqrt2(0, parse_rational(body));
    }
    Rational b = parse_rational(body.substr(split + 1));
    if (body[split] == '-') b = -b;
    return RealSqrt2(parse_rational(body.substr(0, split)), b);
  }
  return RealSqrt2(parse_rational(s));
}

inline std::ostream& operator<<(std::ostream& os, const RealSqrt2& x) {
  return os << to_string(x);
}

// re + i*im with re, im in Q(sqrt2); coefficient form a + b√2 + c i + d i√2.
class ExactAmplitude {
 public:
  ExactAmplitude() = default;
  ExactAmplitude(RealSqrt2 re) : re_(std::move(re)) {}  // NOLINT(implicit)
  ExactAmplitude(long re) : re_(re) {}                  // NOLINT(implicit)
  ExactAmplitude(RealSqrt2 re, RealSqrt2 im) : re_(std::move(re)), im_(std::move(im)) {}
  ExactAmplitude(Rational a, Rational b, Rational c, Rational d)
      : re_(std::move(a), std::move(b)), im_(std::move(c), std::move(d)) {}

  static ExactAmplitude i() { return ExactAmplitude(RealSqrt2(0), RealSqrt2(1)); }
  // 1/sqrt2 = sqrt2/2.
  static ExactAmplitude inv_sqrt2() { return RealSqrt2(0, make_rational(1, 2)); }

  const RealSqrt2& real() const { return re_; }
  const RealSqrt2& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ExactAmplitude conj() const { return ExactAmplitude(re_, -im_); }

  ExactAmplitude& operator+=(const ExactAmplitude& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactAmplitude& operator-=(const ExactAmplitude& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactAmplitude& operator*=(const ExactAmplitude& o) {
    RealSqrt2 re = re_ * o.re_ - im_ * o.im_;
    RealSqrt2 im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend ExactAmplitude operator+(ExactAmplitude x, const ExactAmplitude& y) { return x += y; }
  friend ExactAmplitude operator-(ExactAmplitude x, const ExactAmplitude& y) { return x -= y; }
  friend ExactAmplitude operator*(ExactAmplitude x, const ExactAmplitude& y) { return x *= y; }
  friend ExactAmplitude operator-(const ExactAmplitude& x) { return ExactAmplitude(-x.re_, -x.im_); }

  friend bool operator==(const ExactAmplitude& x, const ExactAmplitude& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

 private:
  RealSqrt2 re_;
  RealSqrt2 im_;
};

// |z|^2 computed as z * conj(z); the imaginary part cancels identically.
inline RealSqrt2 norm_sq(const ExactAmplitude& z) {
  const ExactAmplitude p = z * z.conj();
  if (!p.imag().is_zero()) {
    throw Error(ErrorCode::kInternalInconsistency, "z*conj(z) has an imaginary part");
  }
  return p.real();
}

inline std::string to_string(const ExactAmplitude& z) {
  return "(" + to_string(z.real()) + ")+i(" + to_string(z.imag()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ExactAmplitude& z) {
  return os << to_string(z);
}

}  // namespace ptlab

#endif  // PTLAB_EXACTNUM_HPP_
