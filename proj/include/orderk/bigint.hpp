#pragma once

// Arbitrary-precision signed integer on 32-bit limbs.
// Sign-magnitude, little-endian limb order, no trailing zero limbs;
// zero is the empty limb vector with a non-negative sign.

#include <bit>
#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orderk {

class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    if (v < 0) {
      neg_ = true;
      // avoid overflow on LLONG_MIN
      unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
      assign_u64(m);
    } else {
      assign_u64(static_cast<unsigned long long>(v));
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long long v) { assign_u64(v); }

  static BigInt from_decimal(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = (s[i] == '-');
      ++i;
    }
    if (i == s.size())
      throw std::invalid_argument("BigInt: empty decimal string");
    for (; i < s.size();) {
      // consume up to 9 digits per step
      std::uint32_t chunk = 0;
      std::uint32_t scale = 1;
      std::size_t j = i;
      while (j < s.size() && j < i + 9) {
        char c = s[j];
        if (c < '0' || c > '9')
          throw std::invalid_argument("BigInt: invalid digit in decimal string");
        chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
        scale *= 10;
        ++j;
      }
      r.mul_small(scale);
      r.add_small(chunk);
      i = j;
    }
    r.neg_ = neg && !r.limbs_.empty();
    return r;
  }

  int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
  }

  BigInt& negate() {
    if (!limbs_.empty()) neg_ = !neg_;
    return *this;
  }

  BigInt abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
  }

  friend BigInt operator-(BigInt v) {
    v.negate();
    return v;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign() != b.sign())
      return a.sign() <=> b.sign();
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (a.neg_) c = -c;
    return c <=> 0;
  }

  BigInt& operator+=(const BigInt& o) {
    if (&o == this) {
      BigInt t(o);
      return *this += t;
    }
    if (neg_ == o.neg_) {
      add_mag(limbs_, o.limbs_);
    } else {
      int c = cmp_mag(limbs_, o.limbs_);
      if (c == 0) {
        limbs_.clear();
        neg_ = false;
      } else if (c > 0) {
        sub_mag(limbs_, o.limbs_);
      } else {
        std::vector<std::uint32_t> t = o.limbs_;
        sub_mag(t, limbs_);
        limbs_ = std::move(t);
        neg_ = o.neg_;
      }
    }
    return *this;
  }

  BigInt& operator-=(const BigInt& o) {
    if (&o == this) {
      limbs_.clear();
      neg_ = false;
      return *this;
    }
    // a - b = a + (-b); avoid copying o
    neg_ = !neg_;
    *this += o;
    if (!limbs_.empty()) neg_ = !neg_;
    else neg_ = false;
    return *this;
  }

  BigInt& operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) {
    a += b;
    return a;
  }
  friend BigInt operator-(BigInt a, const BigInt& b) {
    a -= b;
    return a;
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.neg_ = a.neg_ != b.neg_;
    return r;
  }

  // Truncated division (C++ semantics): quotient rounds toward zero,
  // remainder has the sign of the dividend.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.trim();
    r.trim();
    q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.limbs_.empty() && a.neg_;
    return {std::move(q), std::move(r)};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    return divmod(a, b).first;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    return divmod(a, b).second;
  }
  BigInt& operator/=(const BigInt& o) {
    *this = *this / o;
    return *this;
  }
  BigInt& operator%=(const BigInt& o) {
    *this = *this % o;
    return *this;
  }

  // In-place multiply by a single limb.
  BigInt& mul_small(std::uint32_t m) {
    if (m == 0 || limbs_.empty()) {
      limbs_.clear();
      neg_ = false;
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  // In-place add of a single limb to the magnitude (requires *this >= 0).
  BigInt& add_small(std::uint32_t v) {
    assert(!neg_);
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
      std::uint64_t cur = limbs_[i] + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  // In-place divide magnitude by a single limb; returns the remainder.
  std::uint32_t div_small(std::uint32_t d) {
    assert(d != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    if (limbs_.empty()) neg_ = false;
    return static_cast<std::uint32_t>(rem);
  }

  BigInt& operator<<=(std::size_t bits) {
    if (limbs_.empty() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    std::size_t old = limbs_.size();
    limbs_.resize(old + limb_shift + (bit_shift ? 1 : 0), 0);
    for (std::size_t i = old; i-- > 0;) {
      std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
      limbs_[i + limb_shift] = static_cast<std::uint32_t>(v);
      if (bit_shift)
        limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    for (std::size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
    trim();
    return *this;
  }

  BigInt& operator>>=(std::size_t bits) {
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
      limbs_.clear();
      neg_ = false;
      return *this;
    }
    limbs_.erase(limbs_.begin(),
                 limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (bit_shift) {
      for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint32_t hi =
            (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
        limbs_[i] = static_cast<std::uint32_t>(
            (limbs_[i] >> bit_shift) |
            (static_cast<std::uint64_t>(hi) << (32 - bit_shift)));
      }
    }
    trim();
    if (limbs_.empty()) neg_ = false;
    return *this;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t za = a.trailing_zero_bits();
    std::size_t zb = b.trailing_zero_bits();
    std::size_t shift = std::min(za, zb);
    a >>= za;
    b >>= zb;
    // both odd
    while (true) {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) break;
      if (c < 0) std::swap(a, b);
      sub_mag(a.limbs_, b.limbs_);
      a.trim();
      a >>= a.trailing_zero_bits();
    }
    a <<= shift;
    return a;
  }

  static BigInt pow(BigInt base, unsigned long long e) {
    BigInt r(1);
    while (e) {
      if (e & 1ULL) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  static BigInt factorial(unsigned long long n) {
    BigInt r(1);
    for (unsigned long long i = 2; i <= n; ++i)
      r.mul_small(static_cast<std::uint32_t>(i));
    return r;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    BigInt t = *this;
    std::string out;
    while (!t.limbs_.empty()) {
      std::uint32_t rem = t.div_small(1000000000u);
      if (t.limbs_.empty()) {
        out = std::to_string(rem) + out;
      } else {
        std::string chunk = std::to_string(rem);
        out = std::string(9 - chunk.size(), '0') + chunk + out;
      }
    }
    return neg_ ? "-" + out : out;
  }

  long long to_long_long() const {
    if (bit_length() > 63)
      throw std::overflow_error("BigInt: value does not fit in long long");
    unsigned long long m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      m = (m << 32) | limbs_[i];
    return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
  }

  double to_double() const {
    if (limbs_.empty()) return 0.0;
    std::size_t bl = bit_length();
    double d;
    if (bl <= 64) {
      d = static_cast<double>(top_bits64());
    } else {
      d = std::ldexp(static_cast<double>(top_bits64()),
                     static_cast<int>(bl - 64));
    }
    return neg_ ? -d : d;
  }

  // Natural logarithm of a positive value.
  double log() const {
    if (sign() <= 0)
      throw std::domain_error("BigInt: log of non-positive value");
    std::size_t bl = bit_length();
    if (bl <= 64) return std::log(static_cast<double>(top_bits64()));
    constexpr double ln2 = 0.6931471805599453094;
    return std::log(static_cast<double>(top_bits64())) +
           static_cast<double>(bl - 64) * ln2;
  }

  // Top min(64, bit_length) bits of the magnitude as an integer.
  std::uint64_t top_bits64() const {
    std::size_t bl = bit_length();
    if (bl == 0) return 0;
    std::size_t shift = bl > 64 ? bl - 64 : 0;
    std::uint64_t v = 0;
    // read bits [shift, bl) from the limb vector
    for (std::size_t bit = bl; bit-- > shift;) {
      v = (v << 1) | ((limbs_[bit / 32] >> (bit % 32)) & 1u);
    }
    return v;
  }

private:
  std::vector<std::uint32_t> limbs_;
  bool neg_ = false;

  void assign_u64(unsigned long long v) {
    limbs_.clear();
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
  }

  std::size_t trailing_zero_bits() const {
    assert(!limbs_.empty());
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return 32 * i + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static void add_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
      a[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (!carry && i >= b.size()) return;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
  }

  // requires |a| >= |b|
  static void sub_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = cur < 0;
      a[i] = static_cast<std::uint32_t>(cur);
      if (!borrow && i >= b.size()) break;
    }
    assert(borrow == 0);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  // Knuth algorithm D on magnitudes; q and r are output limb vectors.
  static void divmod_mag(const std::vector<std::uint32_t>& u,
                         const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(u, v) < 0) {
      r = u;
      return;
    }
    const std::size_t n = v.size();
    if (n == 1) {
      q = u;
      std::uint64_t rem = 0;
      std::uint32_t d = v[0];
      for (std::size_t i = q.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | q[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }

    const std::size_t m = u.size() - n;
    const int s = std::countl_zero(v.back());

    // normalized copies
    std::vector<std::uint32_t> un(u.size() + 1, 0);
    std::vector<std::uint32_t> vn(n);
    for (std::size_t i = n; i-- > 1;)
      vn[i] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(v[i]) << s) |
          (s ? (static_cast<std::uint64_t>(v[i - 1]) >> (32 - s)) : 0));
    vn[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[0]) << s);
    un[u.size()] = s ? static_cast<std::uint32_t>(
                           static_cast<std::uint64_t>(u.back()) >> (32 - s))
                     : 0;
    for (std::size_t i = u.size(); i-- > 1;)
      un[i] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(u[i]) << s) |
          (s ? (static_cast<std::uint64_t>(u[i - 1]) >> (32 - s)) : 0));
    un[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[0]) << s);

    q.assign(m + 1, 0);
    const std::uint64_t base = 1ULL << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num =
          (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = num / vn[n - 1];
      std::uint64_t rhat = num % vn[n - 1];
      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      // multiply and subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * vn[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                         static_cast<std::int64_t>(p & 0xFFFFFFFFULL) - borrow;
        un[i + j] = static_cast<std::uint32_t>(t);
        borrow = t < 0;
      }
      std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
      un[j + n] = static_cast<std::uint32_t>(t);
      if (t < 0) {
        // qhat was one too large; add the divisor back
        --qhat;
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t s2 = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
          un[i + j] = static_cast<std::uint32_t>(s2);
          c = s2 >> 32;
        }
        un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
      }
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(vn.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(un[i]) >> s) |
          (s && i + 1 < un.size()
               ? (static_cast<std::uint64_t>(un[i + 1]) << (32 - s))
               : 0));
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
};

inline BigInt operator*(BigInt a, long long b) { return a * BigInt(b); }

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace orderk
