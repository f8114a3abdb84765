#pragma once

// Exact rational numbers over BigInt.
// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "orderk/bigint.hpp"

namespace orderk {

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  // Accepts "p/q", an integer literal, or a decimal literal ("0.3" -> 3/10).
  // Decimal input is read exactly as printed, never through binary floats.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    std::size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
      if (s.find('/', slash + 1) != std::string_view::npos ||
          s.find('.') != std::string_view::npos)
        throw std::invalid_argument("Rational: malformed fraction");
      BigInt num = BigInt::from_decimal(s.substr(0, slash));
      BigInt den = BigInt::from_decimal(s.substr(slash + 1));
      return Rational(std::move(num), std::move(den));
    }
    std::size_t dot = s.find('.');
    if (dot == std::string_view::npos)
      return Rational(BigInt::from_decimal(s));
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (fpart.find('.') != std::string_view::npos)
      throw std::invalid_argument("Rational: malformed decimal");
    bool neg = !ipart.empty() && ipart[0] == '-';
    std::string digits;
    digits.reserve(ipart.size() + fpart.size());
    std::size_t start = (!ipart.empty() && (ipart[0] == '+' || ipart[0] == '-')) ? 1 : 0;
    digits.append(ipart.substr(start));
    digits.append(fpart);
    if (digits.empty())
      throw std::invalid_argument("Rational: malformed decimal");
    BigInt num = BigInt::from_decimal(digits);
    if (neg) num.negate();
    BigInt den = BigInt::pow(BigInt(10), fpart.size());
    return Rational(std::move(num), std::move(den));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  bool is_positive() const { return num_.sign() > 0; }

  Rational& negate() {
    num_.negate();
    return *this;
  }
  friend Rational operator-(Rational v) {
    v.negate();
    return v;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
  }

  static Rational pow(const Rational& base, long long e) {
    if (e < 0) {
      if (base.is_zero())
        throw std::domain_error("Rational: zero to negative power");
      Rational r = pow(base, -e);
      return Rational(r.den_, r.num_);
    }
    Rational r;
    r.num_ = BigInt::pow(base.num_, static_cast<unsigned long long>(e));
    r.den_ = BigInt::pow(base.den_, static_cast<unsigned long long>(e));
    return r;  // already coprime
  }

  // Greatest integer <= value.
  BigInt floor() const {
    auto [q, r] = BigInt::divmod(num_, den_);
    if (num_.is_negative() && !r.is_zero()) q -= BigInt(1);
    return q;
  }

  double to_double() const {
    if (num_.is_zero()) return 0.0;
    std::size_t bn = num_.bit_length(), bd = den_.bit_length();
    double mn = static_cast<double>(num_.top_bits64());
    double md = static_cast<double>(den_.top_bits64());
    int e = static_cast<int>(bn > 64 ? bn - 64 : 0) -
            static_cast<int>(bd > 64 ? bd - 64 : 0);
    double v = std::ldexp(mn / md, e);
    return num_.is_negative() ? -v : v;
  }

  // Natural logarithm; requires a positive value.
  double log() const {
    if (sign() <= 0)
      throw std::domain_error("Rational: log of non-positive value");
    return num_.log() - den_.log();
  }

  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_negative()) {
      den_.negate();
      num_.negate();
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
      num_ /= g;
      den_ /= g;
    }
  }
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

}  // namespace orderk
