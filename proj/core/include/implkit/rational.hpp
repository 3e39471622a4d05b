// Copyright 2026 The implkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPLKIT_RATIONAL_HPP_
#define IMPLKIT_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "implkit/error.hpp"

namespace implkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number kept in lowest terms with a positive denominator.
// Every quantity in this library (utilities, probabilities, LP entries) is
// one of these; there is no floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::kParseError, "zero denominator");
    v_ = boost::multiprecision::cpp_rational(den < 0 ? -num : num,
                                             den < 0 ? -den : den);
  }
  explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

  // Accepts "p/q" or a bare integer "p"; q must be nonzero.
  static Rational parse(std::string_view s);

  // Canonical form "p/q" with q > 0 in lowest terms, e.g. "-3/4", "2/1".
  std::string str() const;

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::kParseError, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw Error(Errc::kParseError, "bad rational '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::string num, den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
    if (num.empty() || den.empty()) bad();
  }
  auto is_int = [](const std::string& t) {
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9') return false;
    }
    return true;
  };
  if (!is_int(num) || !is_int(den)) bad();
  BigInt d(den);
  if (d == 0) bad();
  return Rational(BigInt(num), d);
}

inline std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

}  // namespace implkit

#endif  // IMPLKIT_RATIONAL_HPP_
