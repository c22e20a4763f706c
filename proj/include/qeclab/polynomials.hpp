#pragma once

// The polynomial family S_n(a, b; t):
//   S_0 = 1,  S_1 = a t + b,  S_n = (1 + 2t) S_{n-1} - t^2 S_{n-2}.
// Exact coefficient vectors, floating evaluation (recurrence and closed form),
// the W_n = S_n(2, 1; .) specialization, the four families with known roots,
// the thresholds t_n and the t^{2n} cross identity.

#include "qeclab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qeclab {

struct SParams {
  Rational a;
  Rational b;
  std::size_t n = 0;
};

namespace detail {

// (1 + 2t) p - t^2 q, computed directly on coefficient vectors.
inline RationalPoly recurrence_step(const RationalPoly& p, const RationalPoly& q) {
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  std::vector<Rational> out(std::max(pc.size() + 1, qc.size() + 2));
  for (std::size_t k = 0; k < pc.size(); ++k) {
    out[k] += pc[k];
    out[k + 1] += 2 * pc[k];
  }
  for (std::size_t k = 0; k < qc.size(); ++k) out[k + 2] -= qc[k];
  return RationalPoly(std::move(out));
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// S_0 .. S_count-1 for fixed (a, b), exact.
inline std::vector<RationalPoly> s_poly_sequence(const Rational& a, const Rational& b, std::size_t count) {
  std::vector<RationalPoly> seq;
  seq.reserve(count);
  if (count > 0) seq.push_back(RationalPoly::constant(1));
  if (count > 1) seq.push_back(RationalPoly::linear(a, b));
  for (std::size_t k = 2; k < count; ++k) seq.push_back(detail::recurrence_step(seq[k - 1], seq[k - 2]));
  return seq;
}

inline RationalPoly s_poly(const SParams& p) { return s_poly_sequence(p.a, p.b, p.n + 1).back(); }
inline RationalPoly s_poly(const Rational& a, const Rational& b, std::size_t n) { return s_poly({a, b, n}); }

/// Binomial-sum form, valid for n >= 1:
///   (a t + b) sum_{k<n} C(2n-k-1, k) t^k  -  sum_{k<n-1} C(2n-k-3, k) t^{k+2}.
inline RationalPoly s_poly_binomial(const Rational& a, const Rational& b, std::size_t n) {
  if (n == 0) throw std::domain_error("s_poly_binomial: requires n >= 1");
  const long nn = static_cast<long>(n);
  std::vector<Rational> first(n);
  for (long k = 0; k < nn; ++k) first[static_cast<std::size_t>(k)] = Rational(detail::binomial(2 * nn - k - 1, k));
  std::vector<Rational> second(n + 1);
  for (long k = 0; k + 2 <= nn; ++k)
    second[static_cast<std::size_t>(k + 2)] = Rational(detail::binomial(2 * nn - k - 3, k));
  return RationalPoly::linear(a, b) * RationalPoly(std::move(first)) - RationalPoly(std::move(second));
}

/// W_n(t) = sum_{k=0}^{n} C(2n-k+1, k) t^k.
inline RationalPoly w_poly(std::size_t n) {
  const long nn = static_cast<long>(n);
  std::vector<Rational> c(n + 1);
  for (long k = 0; k <= nn; ++k) c[static_cast<std::size_t>(k)] = Rational(detail::binomial(2 * nn - k + 1, k));
  return RationalPoly(std::move(c));
}

/// Floating value of S_n(a, b; t) with a first-order bound on its rounding
/// error. A local error made at step j reaches step n multiplied by
/// W_{n-j}(t), the solution of the recurrence started from (0, 1), so the bound
/// is sum_j |local_j| |W_{n-j}(t)|. It stays tight when S_n is the small mode
/// of the recurrence and the computed value is pure rounding noise.
struct SEvaluation {
  double value = 0.0;
  double error_bound = 0.0;
};

inline SEvaluation s_evaluate(double a, double b, std::size_t n, double t) {
  constexpr double u = std::numeric_limits<double>::epsilon();
  if (n == 0) return {1.0, 0.0};
  const double lin = 1.0 + 2.0 * t;
  const double sq = t * t;
  std::vector<double> local(n + 1, 0.0);
  double prev = 1.0;
  double cur = a * t + b;
  local[1] = u * (2.0 * std::abs(a * t) + std::abs(b) + std::abs(cur));  // |b| covers a rounded b
  for (std::size_t k = 2; k <= n; ++k) {
    const double x = lin * cur;
    const double y = sq * prev;
    prev = cur;
    cur = x - y;
    local[k] = u * (2.0 * std::abs(x) + 2.0 * std::abs(y) + std::abs(cur));
  }
  double bound = 0.0;
  double w_prev = 0.0;  // W_{-1}
  double w = 1.0;       // W_0
  for (std::size_t m = 0; m < n; ++m) {
    bound += local[n - m] * std::abs(w);
    const double w_next = lin * w - sq * w_prev;
    w_prev = w;
    w = w_next;
  }
  return {cur, (1.0 + 4.0 * u * static_cast<double>(n)) * bound};
}

inline double s_eval(double a, double b, std::size_t n, double t) { return s_evaluate(a, b, n, t).value; }

/// Closed form through the roots 1 + 2t +- sqrt(1 + 4t) of the characteristic
/// equation. For 1 + 4t < 0 the two terms are complex conjugates and the real
/// part is returned. Within 1e-13 of t = -1/4 the limit
/// (4nb - na - n + 1) / 4^n is used.
inline double s_eval_closed(double a, double b, std::size_t n, double t) {
  const double nd = static_cast<double>(n);
  if (std::abs(t + 0.25) <= 1e-13) return (4.0 * nd * b - nd * a - nd + 1.0) / std::pow(4.0, nd);
  using C = std::complex<double>;
  const C r = std::sqrt(C(1.0 + 4.0 * t, 0.0));
  const C w_plus = 2.0 * b - 1.0 + 2.0 * (a - 1.0) * t + r;
  const C w_minus = 2.0 * b - 1.0 + 2.0 * (a - 1.0) * t - r;
  const C z_plus = 1.0 + 2.0 * t + r;
  const C z_minus = 1.0 + 2.0 * t - r;
  const int ni = static_cast<int>(n);
  const C num = w_plus * std::pow(z_plus, ni) - w_minus * std::pow(z_minus, ni);
  return (num / (std::pow(2.0, nd + 1.0) * r)).real();
}

/// W_n(t) = [(1+2t+r)^{n+1} - (1+2t-r)^{n+1}] / (2^{n+1} r), r = sqrt(1+4t).
inline double w_eval_closed(std::size_t n, double t) {
  const double nd = static_cast<double>(n);
  if (std::abs(t + 0.25) <= 1e-13) return (nd + 1.0) / std::pow(4.0, nd);
  using C = std::complex<double>;
  const C r = std::sqrt(C(1.0 + 4.0 * t, 0.0));
  const int m = static_cast<int>(n) + 1;
  const C num = std::pow(1.0 + 2.0 * t + r, m) - std::pow(1.0 + 2.0 * t - r, m);
  return (num / (std::pow(2.0, nd + 1.0) * r)).real();
}

/// -1 / (2 + 2 cos(theta)): the map from an angle to a root of the family.
inline double angle_to_root(double theta) { return -1.0 / (2.0 + 2.0 * std::cos(theta)); }

/// The four (a, b) pairs whose roots are known in closed form.
enum class SpecialCase { TwoOne, OneHalf, OneOne, ThreeOne };

inline std::pair<Rational, Rational> special_case_params(SpecialCase c) {
  switch (c) {
    case SpecialCase::TwoOne: return {2, 1};
    case SpecialCase::OneHalf: return {1, Rational(1, 2)};
    case SpecialCase::OneOne: return {1, 1};
    case SpecialCase::ThreeOne: return {3, 1};
  }
  throw std::invalid_argument("unknown special case");
}

inline std::optional<SpecialCase> special_case_of(const Rational& a, const Rational& b) {
  for (auto c : {SpecialCase::TwoOne, SpecialCase::OneHalf, SpecialCase::OneOne, SpecialCase::ThreeOne}) {
    if (special_case_params(c) == std::pair<Rational, Rational>{a, b}) return c;
  }
  return std::nullopt;
}

inline std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::TwoOne: return "(2,1)";
    case SpecialCase::OneHalf: return "(1,1/2)";
    case SpecialCase::OneOne: return "(1,1)";
    case SpecialCase::ThreeOne: return "(3,1)";
  }
  return "?";
}

/// Angle of the k-th root (1 <= k <= n).
inline double special_case_angle(SpecialCase c, std::size_t k, std::size_t n) {
  const double pi = std::numbers::pi;
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  switch (c) {
    case SpecialCase::TwoOne: return kd * pi / (nd + 1.0);
    case SpecialCase::OneHalf: return (2.0 * kd - 1.0) * pi / (2.0 * nd);
    case SpecialCase::OneOne: return 2.0 * kd * pi / (2.0 * nd + 1.0);
    case SpecialCase::ThreeOne: return (2.0 * kd - 1.0) * pi / (2.0 * nd + 1.0);
  }
  throw std::invalid_argument("unknown special case");
}

/// Coefficient of t^n, a n - n + 1.
inline Rational leading_coefficient(const Rational& a, std::size_t n) {
  const Rational nn(static_cast<long long>(n));
  return a * nn - nn + 1;
}

/// The n roots of S_n(a, b; .) for a special (a, b), ascending.
inline std::vector<double> s_roots_special(SpecialCase c, std::size_t n) {
  if (n == 0) throw std::domain_error("s_roots_special: requires n >= 1");
  std::vector<double> roots;
  roots.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) roots.push_back(angle_to_root(special_case_angle(c, k, n)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// lead * prod (t - root_k): the factorized form of a special-case S_n.
inline double s_eval_factored(SpecialCase c, std::size_t n, double t) {
  double acc = to_double(leading_coefficient(special_case_params(c).first, n));
  for (double r : s_roots_special(c, n)) acc *= (t - r);
  return acc;
}

/// t_n: -infinity for n = 1, -1 / (2 + 2 cos(pi / n)) for n >= 2.
struct Threshold {
  std::size_t n = 1;
  double value = -std::numeric_limits<double>::infinity();

  bool is_minus_infinity() const { return std::isinf(value) && value < 0; }
};

inline Threshold t_threshold(std::size_t n) {
  if (n == 0) throw std::domain_error("t_threshold: requires n >= 1");
  if (n == 1) return {};
  return {n, angle_to_root(std::numbers::pi / static_cast<double>(n))};
}

/// S_n(2,1) S_n(a,b) - S_{n-1}(2,1) S_{n+1}(a,b), exact.
inline RationalPoly t2n_combination(const Rational& a, const Rational& b, std::size_t n) {
  if (n == 0) throw std::domain_error("t2n_combination: requires n >= 1");
  const auto w = s_poly_sequence(2, 1, n + 1);
  const auto s = s_poly_sequence(a, b, n + 2);
  return w[n] * s[n] - w[n - 1] * s[n + 1];
}

/// True iff the combination above is exactly t^{2n}.
inline bool check_t2n_identity(const Rational& a, const Rational& b, std::size_t n) {
  return t2n_combination(a, b, n) == RationalPoly::monomial(2 * n);
}

class AmbiguousThreshold : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Signs of (S_{n-1}(2,1;t), S_n(2,1;t)).
struct SignPattern {
  int previous = 0;
  int current = 0;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// Predicted signs of consecutive W polynomials from the position of t relative
/// to the thresholds: (+,-) on (t_n, t_{n+1}), (+,+) above t_{n+1}. Points
/// within 1e-12 of t_n or t_{n+1} are rejected, as are points below t_n where
/// no pattern is asserted.
inline SignPattern sign_pattern(std::size_t n, double t) {
  const double lower = t_threshold(n).value;
  const double upper = t_threshold(n + 1).value;
  constexpr double kBand = 1e-12;
  if (std::abs(t - upper) <= kBand || (!std::isinf(lower) && std::abs(t - lower) <= kBand))
    throw AmbiguousThreshold("sign_pattern: t is within 1e-12 of a threshold");
  if (t < lower) throw std::domain_error("sign_pattern: t lies below t_n; no sign pattern applies");
  return t < upper ? SignPattern{1, -1} : SignPattern{1, 1};
}

}  // namespace qeclab
