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

#include "certreal/rational.hpp"

#include <ostream>

#include "certreal/errors.hpp"

namespace certreal {

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // cpp_rational reduces to lowest terms on construction from a pair.
  v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t digits_from = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (text.size() == digits_from) {
    throw ParseError("not an integer: \"" + text + "\"");
  }
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("not an integer: \"" + text + "\"");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text), BigInt(1));
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::pow2(long exponent) {
  BigInt shifted = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), std::move(shifted))
                      : Rational(std::move(shifted), BigInt(1));
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += "/" + denominator().str();
  }
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.v_ = -v_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  v_ /= rhs.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational dotminus(const Rational& a, const Rational& b) {
  return a <= b ? Rational(0) : a - b;
}

long ceil_log2(const Rational& q) {
  if (q.sign() <= 0) {
    throw DomainError("ceil_log2 requires a positive argument");
  }
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  // msb gives bit lengths; the answer lies within one of their difference.
  const long guess = static_cast<long>(msb(num)) - static_cast<long>(msb(den)) - 1;
  for (long k = guess;; ++k) {
    const bool holds = k >= 0 ? num <= (den << static_cast<unsigned>(k))
                              : (num << static_cast<unsigned>(-k)) <= den;
    if (holds) return k;
  }
}

Rational clamp01(const Rational& r) {
  if (r.sign() < 0) return Rational(0);
  if (r > Rational(1)) return Rational(1);
  return r;
}

}  // namespace certreal
