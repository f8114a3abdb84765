#pragma once

// Waiting-time family: the geometric distribution of order k (trials until
// the first run of k consecutive successes), its r-fold sum (negative
// binomial of order k), k-step Fibonacci numbers, and the float-path
// check that the shifted negative binomial converges to the order-k
// Poisson pmf as r grows with q = lambda / r.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orderk/bigint.hpp"
#include "orderk/compositions.hpp"
#include "orderk/pmf.hpp"
#include "orderk/rational.hpp"

namespace orderk {

struct GeomOrderKParams {
  int k;
  Rational p;  // success probability, exact rational in (0,1)
  Rational q;  // 1 - p, kept explicitly

  GeomOrderKParams(int k_, Rational p_) : k(k_), p(std::move(p_)) {
    if (k < 1) throw std::invalid_argument("geom order k: k >= 1");
    if (!(p > Rational(0) && p < Rational(1)))
      throw std::invalid_argument("geom order k: p must lie in (0,1)");
    q = Rational(1) - p;
  }
};

// P(N_k = n), with N_k the trial count at which the first k-run of
// successes completes. DP over the run-length state: state i < k is the
// probability that the last i trials were successes and no k-run has
// occurred yet. O(k) state, O(n k) time. Entries 0..n_max.
inline std::vector<Rational> geom_order_k_pmf_table(
    const GeomOrderKParams& params, long long n_max) {
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1, Rational(0));
  std::vector<Rational> state(static_cast<std::size_t>(params.k), Rational(0));
  state[0] = Rational(1);
  for (long long n = 1; n <= n_max; ++n) {
    std::vector<Rational> next(state.size(), Rational(0));
    Rational total;
    for (const Rational& s : state) total += s;
    next[0] = total * params.q;
    for (std::size_t i = 1; i < state.size(); ++i)
      next[i] = state[i - 1] * params.p;
    out[static_cast<std::size_t>(n)] = state.back() * params.p;
    state = std::move(next);
  }
  return out;
}

inline Rational geom_order_k_pmf(const GeomOrderKParams& params, long long n) {
  if (n < params.k) return Rational(0);
  return geom_order_k_pmf_table(params, n)[static_cast<std::size_t>(n)];
}

inline Rational geom_order_k_cdf(const GeomOrderKParams& params,
                                 long long n_max) {
  auto table = geom_order_k_pmf_table(params, n_max);
  Rational sum;
  for (const Rational& v : table) sum += v;
  return sum;
}

// k-step Fibonacci numbers: f_n = 0 for n <= 0, f_1 = 1, and
// f_n = f_{n-1} + ... + f_{n-k} for n >= 2. This indexing is pinned by
// the exact identity P(N_k = n | p = 1/2) = f_{n-k+1} / 2^n, which the
// test suite enforces; a failure there means the convention drifted and
// the build must stop rather than silently reindex.
class FibOrderK {
public:
  explicit FibOrderK(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("fibonacci order k: k >= 1");
    values_.push_back(BigInt(1));  // f_1
  }

  int k() const { return k_; }

  const BigInt& at(long long n) {
    if (n < 1) return zero_;
    while (static_cast<long long>(values_.size()) < n) {
      long long next = static_cast<long long>(values_.size()) + 1;
      BigInt sum;
      for (long long j = 1; j <= k_ && next - j >= 1; ++j)
        sum += values_[static_cast<std::size_t>(next - j - 1)];
      values_.push_back(std::move(sum));
    }
    return values_[static_cast<std::size_t>(n - 1)];
  }

private:
  int k_;
  std::vector<BigInt> values_;
  BigInt zero_;
};

inline BigInt fib_order_k(int k, long long n) {
  FibOrderK f(k);
  BigInt v = f.at(n);
  return v;
}

// P(Y_{k,r} = y) for Y the sum of r independent order-k geometric
// variables, as the r-fold convolution of the single-variable pmf.
inline Rational negbin_order_k_pmf_convolution(const GeomOrderKParams& params,
                                               int r, long long y) {
  if (r < 1) throw std::invalid_argument("negbin order k: r >= 1");
  long long kr = static_cast<long long>(params.k) * r;
  if (y < kr) return Rational(0);
  auto single = geom_order_k_pmf_table(params, y);
  // dist[i] = P(sum of j copies = i), truncated at y
  std::vector<Rational> dist = single;
  for (int j = 2; j <= r; ++j) {
    std::vector<Rational> next(static_cast<std::size_t>(y) + 1, Rational(0));
    for (long long a = params.k; a <= y; ++a) {
      if (dist[static_cast<std::size_t>(a)].is_zero()) continue;
      for (long long b = params.k; a + b <= y; ++b)
        next[static_cast<std::size_t>(a + b)] +=
            dist[static_cast<std::size_t>(a)] *
            single[static_cast<std::size_t>(b)];
    }
    dist = std::move(next);
  }
  return dist[static_cast<std::size_t>(y)];
}

// The multinomial form: P(Y_{k,r} = y) = p^y * sum over weight-(y - kr)
// tuples of C(y_1 + ... + y_k + r - 1; y_1, ..., y_k, r - 1) (q/p)^(sum y_i).
inline Rational negbin_order_k_pmf_formula(const GeomOrderKParams& params,
                                           int r, long long y) {
  if (r < 1) throw std::invalid_argument("negbin order k: r >= 1");
  long long kr = static_cast<long long>(params.k) * r;
  if (y < kr) return Rational(0);
  long long x = y - kr;
  std::vector<BigInt> fact(static_cast<std::size_t>(x + r) + 1);
  fact[0] = BigInt(1);
  for (long long i = 1; i <= x + r; ++i) {
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)];
    fact[static_cast<std::size_t>(i)].mul_small(static_cast<std::uint32_t>(i));
  }
  const BigInt& pn = params.p.numerator();
  const BigInt& pd = params.p.denominator();
  const BigInt& qn = params.q.numerator();
  const BigInt& qd = params.q.denominator();
  // accumulate C * q^m * p^(y-m) over the common denominator (pd*qd)^y
  BigInt acc;
  for_each_composition(params.k, x, [&](const std::vector<long long>& c) {
    long long m = 0;
    BigInt coeff = BigInt(1);
    for (long long ci : c) m += ci;
    coeff = fact[static_cast<std::size_t>(m + r - 1)];
    for (long long ci : c)
      if (ci >= 2) coeff /= fact[static_cast<std::size_t>(ci)];
    coeff /= fact[static_cast<std::size_t>(r - 1)];
    BigInt term = coeff * BigInt::pow(qn, static_cast<unsigned long long>(m)) *
                  BigInt::pow(qd, static_cast<unsigned long long>(y - m)) *
                  BigInt::pow(pn, static_cast<unsigned long long>(y - m)) *
                  BigInt::pow(pd, static_cast<unsigned long long>(m));
    acc += term;
  });
  BigInt den = BigInt::pow(pd * qd, static_cast<unsigned long long>(y));
  return Rational(std::move(acc), std::move(den));
}

// Both routes with mandatory exact agreement.
inline Rational negbin_order_k_pmf(const GeomOrderKParams& params, int r,
                                   long long y) {
  Rational conv = negbin_order_k_pmf_convolution(params, r, y);
  Rational form = negbin_order_k_pmf_formula(params, r, y);
  if (!(conv == form))
    throw std::logic_error(
        "negbin order k: convolution and multinomial routes disagree");
  return conv;
}

// Float path of the multinomial form for large r, in log space. The
// coefficient logs are summed term by term (m and the y_i stay small);
// this also keeps the function free of lgamma's signgam global, so it is
// safe to call across threads.
inline double negbin_order_k_pmf_float(int k, long long r, double q,
                                       long long y) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("negbin order k: q must lie in (0,1)");
  long long kr = static_cast<long long>(k) * r;
  if (y < kr) return 0.0;
  long long x = y - kr;
  double p = 1.0 - q;
  double log_p = std::log1p(-q);
  double log_ratio = std::log(q) - std::log(p);
  // log i! for 0 <= i <= x
  std::vector<double> log_fact(static_cast<std::size_t>(x) + 1, 0.0);
  for (long long i = 2; i <= x; ++i)
    log_fact[static_cast<std::size_t>(i)] =
        log_fact[static_cast<std::size_t>(i - 1)] +
        std::log(static_cast<double>(i));
  double sum = 0.0;
  for_each_composition(k, x, [&](const std::vector<long long>& c) {
    long long m = 0;
    double lg = 0.0;
    for (long long ci : c) {
      m += ci;
      lg -= log_fact[static_cast<std::size_t>(ci)];
    }
    // log (m+r-1)! / (r-1)! = sum of log(r), ..., log(r+m-1)
    for (long long i = 0; i < m; ++i)
      lg += std::log(static_cast<double>(r + i));
    lg += static_cast<double>(m) * log_ratio;
    lg += static_cast<double>(y) * log_p;
    sum += std::exp(lg);
  });
  return sum;
}

struct LimitDistanceRow {
  long long r;
  double distance;  // sup over the shared horizon of |negbin - poisson|
  bool skipped;     // q = lambda / r fell outside (0,1)
};

// Convergence of P(Y_{k,r} - kr = x) to the order-k Poisson pmf along
// q = lambda / r. Distances are measured on the horizon used for
// normalization checks so both distributions' mass is covered.
inline std::vector<LimitDistanceRow> poisson_limit_distances(
    int k, const Rational& lambda, const std::vector<long long>& r_list) {
  Params params = Params::exact(k, lambda);
  long long horizon = default_horizon(params);
  FloatPmfTable poisson(params, horizon);
  std::vector<LimitDistanceRow> out;
  for (long long r : r_list) {
    double q = lambda.to_double() / static_cast<double>(r);
    if (!(q > 0.0 && q < 1.0)) {
      out.push_back({r, 0.0, true});
      continue;
    }
    double worst = 0.0;
    long long kr = static_cast<long long>(k) * r;
    for (long long x = 0; x <= horizon; ++x) {
      double nb = negbin_order_k_pmf_float(k, r, q, kr + x);
      worst = std::max(worst, std::fabs(nb - poisson.p_value(x)));
    }
    out.push_back({r, worst, false});
  }
  return out;
}

}  // namespace orderk
