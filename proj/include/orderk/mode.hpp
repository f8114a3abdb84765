#pragma once

// Mode location for the order-k pmf. The search window [0, floor(lambda*T)]
// with T = k(k+1)/2 is complete: no mode can exceed floor(lambda*T), and the
// window's lower companion bound floor(lambda*T) - T + 1 - [k=1] together
// with the k-th-root lower bound give the report its sandwich. Exact-backend
// mode sets are decided by integer comparisons only.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "orderk/pmf.hpp"

namespace orderk {

enum class ConjectureVerdict { Holds, Fails, NotApplicable };

inline const char* to_cstring(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Holds: return "holds";
    case ConjectureVerdict::Fails: return "fails";
    default: return "not-applicable";
  }
}

struct ModeReport {
  Params params;
  Backend backend;
  std::vector<long long> modes;  // full argmax set, ascending
  long long thm21_lower;
  long long thm21_upper;
  double luo_lower;
  std::optional<long long> conjecture;  // lambda*T - floor(k/2), when defined
  ConjectureVerdict verdict;
  std::optional<std::pair<long long, long long>> witness;  // P_x > P_x'
  bool near_tie = false;  // float backend: several values within rel 1e-12

  ModeReport(Params p, Backend b)
      : params(std::move(p)),
        backend(b),
        thm21_lower(0),
        thm21_upper(0),
        luo_lower(0.0),
        verdict(ConjectureVerdict::NotApplicable) {}
};

// (floor(lambda*T) - T + 1 - [k=1], floor(lambda*T)); exact integer floor
// for rational lambda, double floor otherwise.
inline std::pair<long long, long long> thm21_bounds(const Params& params) {
  long long t = params.triangle();
  long long upper;
  if (params.has_exact_lambda()) {
    upper = (params.lambda() * Rational(t)).floor().to_long_long();
  } else {
    upper = static_cast<long long>(
        std::floor(params.lambda_value() * static_cast<double>(t)));
  }
  long long lower = upper - t + 1 - (params.k() == 1 ? 1 : 0);
  return {lower, upper};
}

// k * lambda * (k!)^(1/k) - k(k+1)/2; the root is irrational for k >= 2,
// so the bound is a float by nature. log(k!) is summed explicitly:
// lgamma is off limits here because it writes the global signgam, and
// grid scans call this from several threads.
inline double luo_lower_bound(const Params& params) {
  double log_kfact = 0.0;
  for (int i = 2; i <= params.k(); ++i)
    log_kfact += std::log(static_cast<double>(i));
  double k = static_cast<double>(params.k());
  double root = std::exp(log_kfact / k);
  return k * params.lambda_value() * root -
         static_cast<double>(params.triangle());
}

// Predicted unique mode lambda * k(k+1)/2 - floor(k/2) for integer lambda.
inline long long conjecture_mode(int k, long long lambda) {
  if (k < 2)
    throw NotApplicableError("conjectured mode needs k >= 2");
  if (lambda < 1)
    throw NotApplicableError("conjectured mode needs a positive integer lambda");
  return lambda * (static_cast<long long>(k) * (k + 1) / 2) - k / 2;
}

namespace detail {

// Table sizes above this would silently eat memory; the working grids top
// out near 400 entries.
inline constexpr long long kMaxExactWindow = 20000;
inline constexpr long long kMaxFloatWindow = 10000000;

inline void fill_conjecture(ModeReport& r) {
  const Params& p = r.params;
  if (p.k() >= 2 && p.lambda_is_integer())
    r.conjecture =
        conjecture_mode(p.k(), p.lambda().numerator().to_long_long());
  if (r.backend != Backend::Exact || !r.conjecture) {
    r.verdict = ConjectureVerdict::NotApplicable;
    return;
  }
  if (r.modes.size() == 1 && r.modes.front() == *r.conjecture) {
    r.verdict = ConjectureVerdict::Holds;
    return;
  }
  r.verdict = ConjectureVerdict::Fails;
  bool predicted_is_mode =
      std::binary_search(r.modes.begin(), r.modes.end(), *r.conjecture);
  if (!predicted_is_mode)  // any true mode strictly beats the predicted value
    r.witness = std::make_pair(r.modes.front(), *r.conjecture);
}

}  // namespace detail

inline ModeReport mode_set(const Params& params, Backend backend) {
  params.require_backend(backend);
  ModeReport report(params, backend);
  auto [lower, upper] = thm21_bounds(params);
  report.thm21_lower = lower;
  report.thm21_upper = upper;
  report.luo_lower = luo_lower_bound(params);

  if (backend == Backend::Exact) {
    if (upper > detail::kMaxExactWindow)
      throw std::domain_error("mode search window too large for the exact backend");
    ExactPmfTable t(params, upper);
    report.modes.push_back(0);
    for (long long x = 1; x <= upper; ++x) {
      int c = t.compare_q(x, report.modes.front());
      if (c > 0) {
        report.modes.clear();
        report.modes.push_back(x);
      } else if (c == 0) {
        report.modes.push_back(x);
      }
    }
  } else {
    if (upper > detail::kMaxFloatWindow)
      throw std::domain_error("mode search window too large");
    FloatPmfTable t(params, upper);
    long long best = 0;
    for (long long x = 1; x <= upper; ++x)
      if (t.q(x) > t.q(best)) best = x;
    ScaledFloat threshold = t.q(best) * (1.0 - 1e-12);
    for (long long x = 0; x <= upper; ++x)
      if (!(t.q(x) < threshold)) report.modes.push_back(x);
    report.near_tie = report.modes.size() > 1;
  }
  detail::fill_conjecture(report);
  return report;
}

// Exact-backend conjecture check at an integer grid point.
inline ModeReport verify_conjecture(int k, long long lambda) {
  if (k < 2 || lambda < 1)
    throw NotApplicableError("conjecture applies to k >= 2, integer lambda >= 1");
  return mode_set(Params::exact(k, Rational(lambda)), Backend::Exact);
}

// One exact ModeReport per grid point in ascending (k, lambda) order.
// Points are independent; jobs > 1 computes them concurrently with the
// output order fixed by the grid, not the schedule.
inline std::vector<ModeReport> scan_modes(int k_lo, int k_hi, long long l_lo,
                                          long long l_hi, int jobs = 1) {
  if (k_lo < 1 || k_lo > k_hi || l_lo < 1 || l_lo > l_hi)
    throw std::invalid_argument("scan: empty or invalid grid");
  struct Point {
    int k;
    long long lambda;
  };
  std::vector<Point> grid;
  for (int k = k_lo; k <= k_hi; ++k)
    for (long long l = l_lo; l <= l_hi; ++l) grid.push_back({k, l});

  std::vector<std::optional<ModeReport>> slots(grid.size());
  auto work = [&](std::size_t i) {
    slots[i] = mode_set(Params::exact(grid[i].k, Rational(grid[i].lambda)),
                        Backend::Exact);
  };

  int threads = std::min<int>(jobs, static_cast<int>(grid.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<ModeReport> out;
  out.reserve(grid.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace orderk
