// Copyright 2026 The certreal Authors
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

#ifndef CERTREAL_RATIONAL_HPP_
#define CERTREAL_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace certreal {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, kept in canonical form at all times:
// denominator > 0 and gcd(|numerator|, denominator) = 1. All arithmetic is
// exact; there is no rounding anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);
  Rational(BigInt num, BigInt den);

  // Accepts "num/den" or a bare integer, with an optional leading sign.
  static Rational parse(const std::string& text);

  // 2^exponent for any integer exponent.
  static Rational pow2(long exponent);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_.is_zero() ? 0 : 1); }

  // "num/den", with "/den" omitted for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws DomainError on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

// Truncated subtraction max(a - b, 0), the dotminus of sequence splitting.
Rational dotminus(const Rational& a, const Rational& b);

// Smallest integer k with q <= 2^k. Requires q > 0.
long ceil_log2(const Rational& q);

// Clamps into [0,1]. Approximation terms of a point of [0,1] may overshoot
// the interval; clamping never moves a term farther from the point.
Rational clamp01(const Rational& r);

}  // namespace certreal

#endif  // CERTREAL_RATIONAL_HPP_
