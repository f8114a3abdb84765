#pragma once

// Floating-point scalar with an explicit base-2 exponent, for pmf values
// whose magnitude can leave the double range long before precision does.
// Invariant: sig == 0 (with exp2 == 0) or 1 <= |sig| < 2.

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace orderk {

class ScaledFloat {
public:
  ScaledFloat() = default;

  static ScaledFloat from_double(double v) {
    ScaledFloat r;
    r.sig_ = v;
    r.normalize();
    return r;
  }

  static ScaledFloat from_parts(double sig, long long exp2) {
    ScaledFloat r;
    r.sig_ = sig;
    r.exp2_ = exp2;
    r.normalize();
    return r;
  }

  // Value e^l as a scaled float, valid far outside the double range.
  static ScaledFloat from_log(double l) {
    constexpr double ln2 = 0.6931471805599453094;
    double e = std::floor(l / ln2);
    ScaledFloat r;
    r.sig_ = std::exp(l - e * ln2);
    r.exp2_ = static_cast<long long>(e);
    r.normalize();
    return r;
  }

  double significand() const { return sig_; }
  long long exponent2() const { return exp2_; }
  bool is_zero() const { return sig_ == 0.0; }
  int sign() const { return sig_ == 0.0 ? 0 : (sig_ < 0.0 ? -1 : 1); }

  // Saturates to +-inf / 0 outside the double range.
  double to_double() const {
    if (sig_ == 0.0) return 0.0;
    if (exp2_ > 2000) return sig_ < 0 ? -HUGE_VAL : HUGE_VAL;
    if (exp2_ < -2000) return sig_ < 0 ? -0.0 : 0.0;
    return std::ldexp(sig_, static_cast<int>(exp2_));
  }

  // Natural logarithm; requires a positive value.
  double log() const {
    if (sig_ <= 0.0)
      throw std::domain_error("ScaledFloat: log of non-positive value");
    constexpr double ln2 = 0.6931471805599453094;
    return std::log(sig_) + static_cast<double>(exp2_) * ln2;
  }

  ScaledFloat& negate() {
    sig_ = -sig_;
    return *this;
  }
  friend ScaledFloat operator-(ScaledFloat v) {
    v.negate();
    return v;
  }

  friend ScaledFloat operator+(const ScaledFloat& a, const ScaledFloat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledFloat* hi = &a;
    const ScaledFloat* lo = &b;
    if (hi->exp2_ < lo->exp2_) std::swap(hi, lo);
    long long d = hi->exp2_ - lo->exp2_;
    if (d > 1100) return *hi;  // lo is below one ulp of hi
    ScaledFloat r;
    r.sig_ = hi->sig_ + std::ldexp(lo->sig_, -static_cast<int>(d));
    r.exp2_ = hi->exp2_;
    r.normalize();
    return r;
  }

  friend ScaledFloat operator-(const ScaledFloat& a, ScaledFloat b) {
    return a + b.negate();
  }

  friend ScaledFloat operator*(const ScaledFloat& a, const ScaledFloat& b) {
    ScaledFloat r;
    r.sig_ = a.sig_ * b.sig_;
    r.exp2_ = a.exp2_ + b.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledFloat operator*(ScaledFloat a, double m) {
    a.sig_ *= m;
    a.normalize();
    return a;
  }
  friend ScaledFloat operator*(double m, ScaledFloat a) { return a * m; }

  friend ScaledFloat operator/(ScaledFloat a, double d) {
    a.sig_ /= d;
    a.normalize();
    return a;
  }

  friend bool operator==(const ScaledFloat& a, const ScaledFloat& b) {
    return a.sig_ == b.sig_ && a.exp2_ == b.exp2_;
  }

  friend std::partial_ordering operator<=>(const ScaledFloat& a,
                                           const ScaledFloat& b) {
    if (a.sign() != b.sign()) return a.sign() <=> b.sign();
    if (a.sign() == 0) return std::partial_ordering::equivalent;
    if (a.exp2_ != b.exp2_) {
      bool lt = a.exp2_ < b.exp2_;      // smaller exponent, smaller magnitude
      if (a.sign() < 0) lt = !lt;       // reversed for negative values
      return lt ? std::partial_ordering::less : std::partial_ordering::greater;
    }
    return a.sig_ <=> b.sig_;
  }

private:
  double sig_ = 0.0;
  long long exp2_ = 0;

  void normalize() {
    if (sig_ == 0.0) {
      exp2_ = 0;
      return;
    }
    if (!std::isfinite(sig_))
      throw std::overflow_error("ScaledFloat: non-finite significand");
    int e;
    double f = std::frexp(sig_, &e);  // |f| in [0.5, 1)
    sig_ = f * 2.0;
    exp2_ += e - 1;
  }
};

}  // namespace orderk
