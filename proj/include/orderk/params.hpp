#pragma once

// Distribution parameters (k, lambda) and the exact/float backend split.
// Lambda is carried as an exact rational whenever it was given as one;
// float-only parameters can drive the float backend but not the exact one.

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "orderk/rational.hpp"

namespace orderk {

enum class Backend { Exact, Float };

inline const char* to_cstring(Backend b) {
  return b == Backend::Exact ? "exact" : "float";
}

// Requested exact arithmetic with a float-only lambda, or vice versa.
struct BackendMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation preconditions (integer lambda, k range, lambda range) not met.
struct NotApplicableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Params {
public:
  static Params exact(int k, Rational lambda) {
    if (lambda.sign() <= 0)
      throw std::invalid_argument("Params: lambda must be positive");
    Params p(k);
    p.lambda_value_ = lambda.to_double();
    p.lambda_ = std::move(lambda);
    return p;
  }

  static Params floating(int k, double lambda) {
    if (!(lambda > 0))
      throw std::invalid_argument("Params: lambda must be positive");
    Params p(k);
    p.lambda_value_ = lambda;
    return p;
  }

  int k() const { return k_; }
  long long triangle() const { return static_cast<long long>(k_) * (k_ + 1) / 2; }

  bool has_exact_lambda() const { return lambda_.has_value(); }
  bool lambda_is_integer() const {
    return lambda_.has_value() && lambda_->is_integer();
  }

  const Rational& lambda() const {
    if (!lambda_)
      throw BackendMismatchError(
          "exact arithmetic requires a rational lambda");
    return *lambda_;
  }

  double lambda_value() const { return lambda_value_; }

  void require_backend(Backend b) const {
    if (b == Backend::Exact && !lambda_)
      throw BackendMismatchError(
          "exact backend requested but lambda is float-only");
  }

  std::string lambda_string() const {
    if (lambda_) return lambda_->to_string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", lambda_value_);
    return buf;
  }

  friend bool operator==(const Params& a, const Params& b) {
    if (a.k_ != b.k_) return false;
    if (a.lambda_.has_value() != b.lambda_.has_value()) return false;
    if (a.lambda_) return *a.lambda_ == *b.lambda_;
    return a.lambda_value_ == b.lambda_value_;
  }

private:
  explicit Params(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("Params: k must be >= 1");
  }

  int k_;
  std::optional<Rational> lambda_;
  double lambda_value_ = 0.0;
};

}  // namespace orderk
