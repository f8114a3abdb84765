#pragma once

// Pmf tables for the order-k Poisson-type distribution, built from the
// generating-function recurrence  x*P_x = sum_{j=1..min(k,x)} j*lambda*P_{x-j}.
//
// All computation runs on the scaled values Q_x = e^{k*lambda} * P_x, so the
// exact backend never touches a transcendental: with lambda = p/q the table
// stores integer numerators  num_x = Q_x * q^x * x!,  which satisfy
//   num_x = p * sum_j  j * q^{j-1} * (x-1)(x-2)...(x-j+1) * num_{x-j}.
// Comparisons, difference signs and mode decisions are then pure integer
// arithmetic. A second, independent route (direct multinomial enumeration)
// is provided by the oracle functions below.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "orderk/bigint.hpp"
#include "orderk/compositions.hpp"
#include "orderk/params.hpp"
#include "orderk/rational.hpp"
#include "orderk/scaled_float.hpp"

namespace orderk {

inline double log_scale_factor(const Params& params) {
  return -static_cast<double>(params.k()) * params.lambda_value();
}

class ExactPmfTable {
public:
  ExactPmfTable(Params params, long long upper)
      : params_(std::move(params)) {
    params_.require_backend(Backend::Exact);
    if (upper < 0) throw std::invalid_argument("pmf table: upper < 0");
    p_ = params_.lambda().numerator();
    q_ = params_.lambda().denominator();
    qpow_.push_back(BigInt(1));
    num_.push_back(BigInt(1));   // Q_0 = 1
    den_.push_back(BigInt(1));
    extend(upper);
  }

  const Params& params() const { return params_; }
  long long upper() const { return static_cast<long long>(num_.size()) - 1; }

  // Grows the table in place; existing entries are untouched.
  void extend(long long new_upper) {
    while (upper() < new_upper) {
      long long x = upper() + 1;
      int jmax = static_cast<int>(std::min<long long>(params_.k(), x));
      while (static_cast<int>(qpow_.size()) < jmax)
        qpow_.push_back(qpow_.back() * q_);
      BigInt acc;
      BigInt falling(1);  // (x-1)(x-2)...(x-j+1)
      for (int j = 1; j <= jmax; ++j) {
        BigInt coeff = qpow_[static_cast<std::size_t>(j - 1)] * falling;
        coeff.mul_small(static_cast<std::uint32_t>(j));
        acc += coeff * num_[static_cast<std::size_t>(x - j)];
        if (j < jmax) falling.mul_small(static_cast<std::uint32_t>(x - j));
      }
      num_.push_back(p_ * acc);
      BigInt d = den_.back() * q_;
      d.mul_small(static_cast<std::uint32_t>(x));
      den_.push_back(std::move(d));
    }
  }

  // Scaled value Q_x = e^{k*lambda} * P_x as a reduced rational.
  Rational q_rational(long long x) const {
    check_index(x);
    return Rational(num_at(x), den_at(x));
  }

  const BigInt& q_numerator(long long x) const {
    check_index(x);
    return num_at(x);
  }
  const BigInt& q_denominator(long long x) const {
    check_index(x);
    return den_at(x);
  }

  // Sign of Q_a - Q_b by integer cross-multiplication.
  int compare_q(long long a, long long b) const {
    check_index(a);
    check_index(b);
    BigInt lhs = num_at(a) * den_at(b);
    BigInt rhs = num_at(b) * den_at(a);
    auto c = lhs <=> rhs;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  // Integer numerator of Delta_x = Q_x - Q_{x-1} over denominator den(x).
  BigInt delta_numerator(long long x) const {
    check_index(x);
    if (x == 0) return num_at(0);          // Q_{-1} := 0
    BigInt prev = q_ * num_at(x - 1);
    prev.mul_small(static_cast<std::uint32_t>(x));
    return num_at(x) - prev;
  }

  int delta_sign(long long x) const { return delta_numerator(x).sign(); }

  Rational delta_rational(long long x) const {
    return Rational(delta_numerator(x), den_at(x));
  }

  // P_x = Q_x * e^{-k*lambda}, reported through log space.
  double log_scale() const { return log_scale_factor(params_); }
  double p_log(long long x) const {
    check_index(x);
    return num_at(x).log() - den_at(x).log() + log_scale();
  }
  double p_value(long long x) const { return std::exp(p_log(x)); }

private:
  Params params_;
  BigInt p_, q_;
  std::vector<BigInt> qpow_;  // q^0 .. q^{k-1}
  std::vector<BigInt> num_;   // num_x = Q_x * q^x * x!
  std::vector<BigInt> den_;   // den_x = q^x * x!

  const BigInt& num_at(long long x) const {
    return num_[static_cast<std::size_t>(x)];
  }
  const BigInt& den_at(long long x) const {
    return den_[static_cast<std::size_t>(x)];
  }
  void check_index(long long x) const {
    if (x < 0 || x > upper())
      throw std::out_of_range("pmf table: index out of range");
  }
};

class FloatPmfTable {
public:
  FloatPmfTable(Params params, long long upper)
      : params_(std::move(params)), lambda_(params_.lambda_value()) {
    if (upper < 0) throw std::invalid_argument("pmf table: upper < 0");
    if (!(lambda_ > 0.0))
      throw std::domain_error(
          "pmf table: lambda underflows the float backend");
    q_.push_back(ScaledFloat::from_double(1.0));  // Q_0 = 1
    extend(upper);
  }

  const Params& params() const { return params_; }
  long long upper() const { return static_cast<long long>(q_.size()) - 1; }

  // Set when an addend of the recurrence fell entirely below the working
  // precision of the running sum. The explicit exponents keep consecutive
  // Q values within ~log2(1/lambda) bits of each other, so for any lambda
  // the double type can represent at all this stays false; it is the
  // tripwire for the one failure mode the scaling cannot remove.
  bool precision_warning() const { return precision_warning_; }

  void extend(long long new_upper) {
    while (upper() < new_upper) {
      long long x = upper() + 1;
      int jmax = static_cast<int>(std::min<long long>(params_.k(), x));
      ScaledFloat acc;
      for (int j = 1; j <= jmax; ++j) {
        ScaledFloat term =
            q_[static_cast<std::size_t>(x - j)] * (lambda_ * j);
        if (!acc.is_zero() && !term.is_zero() &&
            std::llabs(acc.exponent2() - term.exponent2()) > 1074)
          precision_warning_ = true;
        acc = acc + term;
      }
      q_.push_back(acc / static_cast<double>(x));
    }
  }

  const ScaledFloat& q(long long x) const {
    check_index(x);
    return q_[static_cast<std::size_t>(x)];
  }

  int delta_sign(long long x) const {
    check_index(x);
    if (x == 0) return 1;
    auto c = q_[static_cast<std::size_t>(x)] <=> q_[static_cast<std::size_t>(x - 1)];
    return c == std::partial_ordering::less    ? -1
           : c == std::partial_ordering::greater ? 1
                                                 : 0;
  }

  double log_scale() const { return log_scale_factor(params_); }
  double p_log(long long x) const { return q(x).log() + log_scale(); }
  double p_value(long long x) const { return std::exp(p_log(x)); }

  // Sum of P_0..P_x; used for normalization checks.
  double cumulative_p(long long x) const {
    check_index(x);
    ScaledFloat s;
    for (long long i = 0; i <= x; ++i) s = s + q_[static_cast<std::size_t>(i)];
    return std::exp(s.log() + log_scale());
  }

private:
  Params params_;
  double lambda_;
  std::vector<ScaledFloat> q_;
  bool precision_warning_ = false;

  void check_index(long long x) const {
    if (x < 0 || x > upper())
      throw std::out_of_range("pmf table: index out of range");
  }
};

// Backend-tagged facade over the two table representations.
class ScaledPmfTable {
public:
  ScaledPmfTable(const Params& params, long long upper, Backend backend)
      : impl_(make(params, upper, backend)) {}

  Backend backend() const {
    return std::holds_alternative<ExactPmfTable>(impl_) ? Backend::Exact
                                                        : Backend::Float;
  }
  const Params& params() const {
    return std::visit([](const auto& t) -> const Params& { return t.params(); },
                      impl_);
  }
  long long upper() const {
    return std::visit([](const auto& t) { return t.upper(); }, impl_);
  }
  void extend(long long new_upper) {
    std::visit([&](auto& t) { t.extend(new_upper); }, impl_);
  }
  double p_log(long long x) const {
    return std::visit([&](const auto& t) { return t.p_log(x); }, impl_);
  }
  double p_value(long long x) const { return std::exp(p_log(x)); }
  double log_scale() const { return log_scale_factor(params()); }
  int delta_sign(long long x) const {
    return std::visit([&](const auto& t) { return t.delta_sign(x); }, impl_);
  }

  const ExactPmfTable& exact() const {
    if (auto* t = std::get_if<ExactPmfTable>(&impl_)) return *t;
    throw BackendMismatchError("table was built with the float backend");
  }
  ExactPmfTable& exact() {
    if (auto* t = std::get_if<ExactPmfTable>(&impl_)) return *t;
    throw BackendMismatchError("table was built with the float backend");
  }
  const FloatPmfTable& floating() const {
    if (auto* t = std::get_if<FloatPmfTable>(&impl_)) return *t;
    throw BackendMismatchError("table was built with the exact backend");
  }

private:
  std::variant<ExactPmfTable, FloatPmfTable> impl_;

  static std::variant<ExactPmfTable, FloatPmfTable> make(const Params& params,
                                                         long long upper,
                                                         Backend backend) {
    params.require_backend(backend);
    if (backend == Backend::Exact) return ExactPmfTable(params, upper);
    return FloatPmfTable(params, upper);
  }
};

inline ScaledPmfTable pmf_table(const Params& params, long long upper,
                                Backend backend) {
  return ScaledPmfTable(params, upper, backend);
}

// Independent route: Q_x = sum over weight-x tuples of lambda^m / prod(x_i!),
// m = x_1 + ... + x_k, by direct enumeration. Exact equality with the
// recurrence table is part of the test contract.
inline Rational pmf_oracle_exact(const Params& params, long long x) {
  params.require_backend(Backend::Exact);
  if (x < 0) throw std::invalid_argument("pmf oracle: x >= 0");
  const BigInt& p = params.lambda().numerator();
  const BigInt& q = params.lambda().denominator();
  std::vector<BigInt> fact(static_cast<std::size_t>(x) + 1);
  fact[0] = BigInt(1);
  for (long long i = 1; i <= x; ++i) {
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)];
    fact[static_cast<std::size_t>(i)].mul_small(static_cast<std::uint32_t>(i));
  }
  std::vector<BigInt> ppow(static_cast<std::size_t>(x) + 1),
      qpow(static_cast<std::size_t>(x) + 1);
  ppow[0] = BigInt(1);
  qpow[0] = BigInt(1);
  for (long long i = 1; i <= x; ++i) {
    ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i - 1)] * p;
    qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
  }
  // accumulate numerators over the common denominator q^x * x!
  BigInt acc;
  for_each_composition(params.k(), x, [&](const std::vector<long long>& c) {
    long long m = 0;
    BigInt t = fact[static_cast<std::size_t>(x)];
    for (long long ci : c) {
      m += ci;
      if (ci >= 2) t /= fact[static_cast<std::size_t>(ci)];
    }
    t *= ppow[static_cast<std::size_t>(m)];
    t *= qpow[static_cast<std::size_t>(x - m)];
    acc += t;
  });
  return Rational(std::move(acc),
                  qpow[static_cast<std::size_t>(x)] *
                      fact[static_cast<std::size_t>(x)]);
}

inline ScaledFloat pmf_oracle_float(const Params& params, long long x) {
  if (x < 0) throw std::invalid_argument("pmf oracle: x >= 0");
  double log_lambda = std::log(params.lambda_value());
  // log i! table; lgamma would race on signgam under parallel callers
  std::vector<double> log_fact(static_cast<std::size_t>(x) + 1, 0.0);
  for (long long i = 2; i <= x; ++i)
    log_fact[static_cast<std::size_t>(i)] =
        log_fact[static_cast<std::size_t>(i - 1)] +
        std::log(static_cast<double>(i));
  ScaledFloat acc;
  for_each_composition(params.k(), x, [&](const std::vector<long long>& c) {
    double lg = 0.0;
    long long m = 0;
    for (long long ci : c) {
      m += ci;
      lg -= log_fact[static_cast<std::size_t>(ci)];
    }
    lg += static_cast<double>(m) * log_lambda;
    acc = acc + ScaledFloat::from_log(lg);
  });
  return acc;
}

// Probability generating function e^{lambda(-k + s + s^2 + ... + s^k)}.
inline double pgf_eval(const Params& params, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("pgf: s must lie in [0, 1]");
  double poly = -static_cast<double>(params.k());
  double sp = 1.0;
  for (int i = 1; i <= params.k(); ++i) {
    sp *= s;
    poly += sp;
  }
  return std::exp(params.lambda_value() * poly);
}

// Mean lambda * k(k+1)/2.
inline Rational mean_rational(const Params& params) {
  params.require_backend(Backend::Exact);
  return params.lambda() * Rational(params.triangle());
}

inline double mean_value(const Params& params) {
  return params.lambda_value() * static_cast<double>(params.triangle());
}

// Truncation horizon covering the distribution mass to well past 20 sigma.
inline long long default_horizon(const Params& params) {
  double mean = mean_value(params);
  return static_cast<long long>(
      std::ceil(mean + 20.0 * std::sqrt(mean * params.k())));
}

}  // namespace orderk
