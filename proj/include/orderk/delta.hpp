#pragma once

// Difference tables Delta_x = P_x - P_{x-1} in the same e^{k*lambda} scaling
// as the pmf tables, plus exact machine checks of the recurrences and
// polynomial identities that locate the mode. Every check clears
// denominators so that both reported sides compare with exact equality;
// pmf values at negative indices are zero.

#include <string>
#include <utility>
#include <vector>

#include "orderk/pmf.hpp"

namespace orderk {

class DeltaTable {
public:
  DeltaTable(const Params& params, long long upper, Backend backend)
      : table_(params, upper, backend) {}

  Backend backend() const { return table_.backend(); }
  const Params& params() const { return table_.params(); }
  long long upper() const { return table_.upper(); }
  void extend(long long new_upper) { table_.extend(new_upper); }

  int sign(long long x) const { return table_.delta_sign(x); }

  // Scaled difference e^{k*lambda} * Delta_x, exact backend.
  Rational rational(long long x) const {
    return table_.exact().delta_rational(x);
  }

  ScaledFloat floating_value(long long x) const {
    const FloatPmfTable& t = table_.floating();
    if (x == 0) return t.q(0);
    return t.q(x) - t.q(x - 1);
  }

  const ScaledPmfTable& pmf() const { return table_; }

private:
  ScaledPmfTable table_;
};

inline DeltaTable delta_table(const Params& params, long long upper,
                              Backend backend) {
  return DeltaTable(params, upper, backend);
}

struct IdentityReport {
  enum class Relation { Equal, Greater, Less };

  std::string id;
  Params params;
  long long x_lo, x_hi;     // single-point checks have x_lo == x_hi
  Rational lhs, rhs;
  Relation relation;
  bool pass;

  IdentityReport(std::string id_, Params params_, long long lo, long long hi,
                 Rational lhs_, Rational rhs_, Relation rel)
      : id(std::move(id_)),
        params(std::move(params_)),
        x_lo(lo),
        x_hi(hi),
        lhs(std::move(lhs_)),
        rhs(std::move(rhs_)),
        relation(rel) {
    auto c = lhs <=> rhs;
    pass = (rel == Relation::Equal && c == 0) ||
           (rel == Relation::Greater && c > 0) ||
           (rel == Relation::Less && c < 0);
  }
};

inline const char* to_cstring(IdentityReport::Relation r) {
  switch (r) {
    case IdentityReport::Relation::Equal: return "eq";
    case IdentityReport::Relation::Greater: return "gt";
    default: return "lt";
  }
}

namespace detail {

inline Rational q_at(const ExactPmfTable& t, long long x) {
  return x < 0 ? Rational(0) : t.q_rational(x);
}

inline Rational delta_at(const ExactPmfTable& t, long long x) {
  return x < 0 ? Rational(0) : t.delta_rational(x);
}

inline long long lambda_as_integer(const ExactPmfTable& t) {
  const Rational& lambda = t.params().lambda();
  if (!lambda.is_integer())
    throw NotApplicableError("identity requires an integer lambda");
  return lambda.numerator().to_long_long();
}

// Horner evaluation of c0 + c1*v + c2*v^2 + ... at an integer point.
inline BigInt poly_eval(std::initializer_list<long long> coeffs_low_first,
                        const BigInt& v) {
  BigInt acc;
  const long long* data = coeffs_low_first.begin();
  for (std::size_t i = coeffs_low_first.size(); i-- > 0;) {
    acc *= v;
    acc += BigInt(data[i]);
  }
  return acc;
}

}  // namespace detail

// Second-difference recurrence with pmf values on the right-hand side:
//   (x+1)(x+2) * Delta_{x+2}
//     = lambda * [ sum_{j=1}^{k-1} (j*lambda + x + 1 - j) * P_{x+1-j}
//                  + k*(lambda - x - 2) * P_{x-k+1} ]
// (both sides cleared of the 1/lambda factor).
inline IdentityReport check_delta_recurrence_p_form(ExactPmfTable& t,
                                                    long long x) {
  t.extend(x + 2);
  const Rational& lambda = t.params().lambda();
  int k = t.params().k();
  Rational lhs = Rational((x + 1) * (x + 2)) * detail::delta_at(t, x + 2);
  Rational sum;
  for (int j = 1; j <= k - 1; ++j)
    sum += (Rational(j) * lambda + Rational(x + 1 - j)) *
           detail::q_at(t, x + 1 - j);
  sum += Rational(k) * (lambda - Rational(x + 2)) * detail::q_at(t, x - k + 1);
  return IdentityReport("delta-rec-p", t.params(), x, x, std::move(lhs),
                        lambda * sum, IdentityReport::Relation::Equal);
}

// The same recurrence rewritten over differences:
//   (x+1)(x+2) * Delta_{x+2}
//     = lambda * [ sum_{j=1}^{k-1} (j(x+1) + (lambda-1) j(j+1)/2) * Delta_{x+1-j}
//                  + ((lambda-1) k(k+1)/2 - 1 - x) * P_{x+1-k} ]
inline IdentityReport check_delta_recurrence_d_form(ExactPmfTable& t,
                                                    long long x) {
  t.extend(x + 2);
  const Rational& lambda = t.params().lambda();
  int k = t.params().k();
  Rational lm1 = lambda - Rational(1);
  Rational lhs = Rational((x + 1) * (x + 2)) * detail::delta_at(t, x + 2);
  Rational sum;
  for (int j = 1; j <= k - 1; ++j)
    sum += (Rational(static_cast<long long>(j) * (x + 1)) +
            lm1 * Rational(static_cast<long long>(j) * (j + 1) / 2)) *
           detail::delta_at(t, x + 1 - j);
  sum += (lm1 * Rational(t.params().triangle()) - Rational(1 + x)) *
         detail::q_at(t, x + 1 - k);
  return IdentityReport("delta-rec-d", t.params(), x, x, std::move(lhs),
                        lambda * sum, IdentityReport::Relation::Equal);
}

// For lambda > 1, the pmf strictly increases on the initial stretch:
// Delta_x > 0 for 0 <= x <= (lambda-1) k(k+1)/2 - 1. The report carries
// the minimal difference over the range against zero.
inline IdentityReport check_increase_range(ExactPmfTable& t) {
  const Rational& lambda = t.params().lambda();
  if (!(lambda > Rational(1)))
    throw NotApplicableError("increase range requires lambda > 1");
  Rational bound = (lambda - Rational(1)) * Rational(t.params().triangle());
  long long x_max = bound.floor().to_long_long() - 1;
  if (x_max < 0)
    return IdentityReport("thm21-positivity", t.params(), 0, -1, Rational(1),
                          Rational(0), IdentityReport::Relation::Greater);
  t.extend(x_max);
  long long worst = 0;
  for (long long x = 1; x <= x_max; ++x) {
    // compare Delta_x with Delta_worst by cross multiplication
    BigInt a = t.delta_numerator(x) * t.q_denominator(worst);
    BigInt b = t.delta_numerator(worst) * t.q_denominator(x);
    if (a < b) worst = x;
  }
  return IdentityReport("thm21-positivity", t.params(), 0, x_max,
                        t.delta_rational(worst), Rational(0),
                        IdentityReport::Relation::Greater);
}

// Exact checks of the polynomial identities behind the unique-mode proof
// for k = 2 and k = 3 (integer lambda). Identities whose lambda
// precondition is not met are omitted from the result.
inline std::vector<IdentityReport> check_mode_proof_identities(
    ExactPmfTable& t) {
  int k = t.params().k();
  if (k != 2 && k != 3)
    throw NotApplicableError("proof identities cover k = 2 and k = 3");
  long long lam = detail::lambda_as_integer(t);
  const Rational& lambda = t.params().lambda();
  BigInt lam_big(lam);
  std::vector<IdentityReport> out;

  if (k == 2) {
    long long m = 3 * lam;
    t.extend(m);
    out.emplace_back("thm22-k2-a", t.params(), m, m,
                     Rational(3) * detail::delta_at(t, m),
                     Rational(-2) * detail::delta_at(t, m - 1),
                     IdentityReport::Relation::Equal);
    if (lam >= 3) {
      // ((3L-1)(3L-2)/L) D_{3L-1} = (4L-3) D_{3L-3} - P_{3L-4}, cleared by L
      Rational lhs_e = Rational((3 * lam - 1) * (3 * lam - 2)) *
                       detail::delta_at(t, m - 1);
      Rational rhs_e =
          lambda * (Rational(4 * lam - 3) * detail::delta_at(t, m - 3) -
                    detail::q_at(t, m - 4));
      out.emplace_back("thm22-k2-e", t.params(), m - 1, m - 1,
                       std::move(lhs_e), std::move(rhs_e),
                       IdentityReport::Relation::Equal);
      // (1/L^3) prod_{j=1..6}(3L-j) D_{3L-1}
      //   = (64L^3-267L^2+360L-156) D_{3L-7} + 3(L^2+8L-12) P_{3L-8}
      BigInt prod(1);
      for (long long j = 1; j <= 6; ++j) prod *= BigInt(3 * lam - j);
      Rational lhs_c = Rational(prod) * detail::delta_at(t, m - 1);
      Rational rhs_c =
          Rational::pow(lambda, 3) *
          (Rational(detail::poly_eval({-156, 360, -267, 64}, lam_big)) *
               detail::delta_at(t, m - 7) +
           Rational(detail::poly_eval({-36, 24, 3}, lam_big)) *
               detail::q_at(t, m - 8));
      out.emplace_back("thm22-k2-c", t.params(), m - 1, m - 1,
                       std::move(lhs_c), std::move(rhs_c),
                       IdentityReport::Relation::Equal);
    }
  } else {
    long long m = 6 * lam;
    t.extend(m);
    out.emplace_back("thm22-k3-b", t.params(), m, m,
                     Rational(6) * detail::delta_at(t, m),
                     Rational(-5) * detail::delta_at(t, m - 1) -
                         Rational(3) * detail::delta_at(t, m - 2),
                     IdentityReport::Relation::Equal);
    if (lam >= 2) {
      // the rising-then-falling route to the mode 6L-1: Delta_{6L-j} > 0
      // for j = 1..4 and Delta_{6L} < 0, checked directly since only the
      // j = 4 case has a worked polynomial chain. Lambda = 1 is excluded:
      // there Delta_4 < 0 (Q_3 = 13/6 > Q_4 = 49/24), the pmf dips before
      // its unique mode at 5, and only the direct argmax settles the mode.
      for (long long j = 1; j <= 4; ++j)
        out.emplace_back("thm22-k3-pos-j" + std::to_string(j), t.params(),
                         m - j, m - j, t.delta_rational(m - j), Rational(0),
                         IdentityReport::Relation::Greater);
      out.emplace_back("thm22-k3-neg-j0", t.params(), m, m,
                       t.delta_rational(m), Rational(0),
                       IdentityReport::Relation::Less);
      // ((6L-4)(6L-5)/L) D_{6L-4}
      //   = (7L-6) D_{6L-6} + (15L-13) D_{6L-7} - P_{6L-8}, cleared by L
      Rational lhs_f = Rational((6 * lam - 4) * (6 * lam - 5)) *
                       detail::delta_at(t, m - 4);
      Rational rhs_f =
          lambda * (Rational(7 * lam - 6) * detail::delta_at(t, m - 6) +
                    Rational(15 * lam - 13) * detail::delta_at(t, m - 7) -
                    detail::q_at(t, m - 8));
      out.emplace_back("thm22-k3-f", t.params(), m - 4, m - 4,
                       std::move(lhs_f), std::move(rhs_f),
                       IdentityReport::Relation::Equal);
      // (1/L^2) prod_{j=4..8}(6L-j) D_{6L-4}
      //   = (1015L^3-3234L^2+3396L-1176) D_{6L-9}
      //   + (1203L^3-3610L^2+3576L-1176) D_{6L-10}
      //   + 2(199L^2-372L+168) P_{6L-11}
      BigInt prod(1);
      for (long long j = 4; j <= 8; ++j) prod *= BigInt(6 * lam - j);
      Rational lhs_d = Rational(prod) * detail::delta_at(t, m - 4);
      Rational rhs_d =
          Rational::pow(lambda, 2) *
          (Rational(detail::poly_eval({-1176, 3396, -3234, 1015}, lam_big)) *
               detail::delta_at(t, m - 9) +
           Rational(detail::poly_eval({-1176, 3576, -3610, 1203}, lam_big)) *
               detail::delta_at(t, m - 10) +
           Rational(detail::poly_eval({336, -744, 398}, lam_big)) *
               detail::q_at(t, m - 11));
      out.emplace_back("thm22-k3-d", t.params(), m - 4, m - 4,
                       std::move(lhs_d), std::move(rhs_d),
                       IdentityReport::Relation::Equal);
    }
  }
  return out;
}

// Exact sign pattern that pins the unique mode for k = 4 and k = 5
// (integer lambda): with M = lambda*k(k+1)/2, Delta_{M-j} > 0 for
// 2 <= j <= k(k+1)/2 - 2 and Delta_{M-1} < 0, so the mode is M - 2.
inline std::vector<IdentityReport> check_mode_sign_patterns(
    ExactPmfTable& t) {
  int k = t.params().k();
  if (k != 4 && k != 5)
    throw NotApplicableError("sign patterns cover k = 4 and k = 5");
  long long lam = detail::lambda_as_integer(t);
  long long m = lam * t.params().triangle();
  long long j_hi = t.params().triangle() - 2;  // 8 for k=4, 13 for k=5
  t.extend(m - 1);
  std::vector<IdentityReport> out;
  std::string prefix = "thm22-k" + std::to_string(k);
  for (long long j = 2; j <= j_hi; ++j)
    out.emplace_back(prefix + "-pos-j" + std::to_string(j), t.params(),
                     m - j, m - j, t.delta_rational(m - j), Rational(0),
                     IdentityReport::Relation::Greater);
  out.emplace_back(prefix + "-neg-j1", t.params(), m - 1, m - 1,
                   t.delta_rational(m - 1), Rational(0),
                   IdentityReport::Relation::Less);
  return out;
}

// Convenience overloads building their own table.

inline IdentityReport check_delta_recurrence_p_form(const Params& params,
                                                    long long x) {
  ExactPmfTable t(params, x + 2);
  return check_delta_recurrence_p_form(t, x);
}

inline IdentityReport check_delta_recurrence_d_form(const Params& params,
                                                    long long x) {
  ExactPmfTable t(params, x + 2);
  return check_delta_recurrence_d_form(t, x);
}

inline IdentityReport check_increase_range(const Params& params) {
  ExactPmfTable t(params, 0);
  return check_increase_range(t);
}

inline std::vector<IdentityReport> check_mode_proof_identities(
    const Params& params) {
  ExactPmfTable t(params, 0);
  return check_mode_proof_identities(t);
}

inline std::vector<IdentityReport> check_mode_sign_patterns(
    const Params& params) {
  ExactPmfTable t(params, 0);
  return check_mode_sign_patterns(t);
}

}  // namespace orderk
