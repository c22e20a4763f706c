#pragma once

// The matrix family A_n(s, t) = [min(i, j) + s + t * delta_ij], 1 <= i, j <= n,
// including n = infinity for the positive semidefiniteness question.

#include "qeclab/eigen.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/matrix.hpp"
#include "qeclab/polynomials.hpp"
#include "qeclab/rational.hpp"
#include "qeclab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeclab {

/// Matrix order: a positive integer or infinity.
class Order {
 public:
  constexpr Order(std::size_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  static constexpr Order infinite() { return Order(std::numeric_limits<std::size_t>::max()); }

  constexpr bool is_infinite() const { return n_ == std::numeric_limits<std::size_t>::max(); }
  std::size_t value() const {
    if (is_infinite()) throw std::domain_error("infinite matrix order has no finite value");
    return n_;
  }
  friend constexpr bool operator==(Order, Order) = default;

 private:
  std::size_t n_;
};

struct FamilyParams {
  Order n = 1;
  double s = 0.0;
  double t = 0.0;
};

namespace detail {

inline std::size_t finite_order(Order n, const char* what) {
  if (n.is_infinite()) throw std::domain_error(std::string(what) + ": requires a finite order (use infinite_psd)");
  if (n.value() == 0) throw std::domain_error(std::string(what) + ": order must be at least 1");
  return n.value();
}

}  // namespace detail

/// A_n(s, t) over any scalar type (double or Rational).
template <typename T>
SymMatrix<T> build_a(std::size_t n, const T& s, const T& t) {
  if (n == 0) throw std::domain_error("build_a: order must be at least 1");
  return SymMatrix<T>::generate(n, [&](std::size_t i, std::size_t j) {
    T v = T(static_cast<long long>(std::min(i, j) + 1)) + s;
    if (i == j) v += t;
    return v;
  });
}

inline SymMatrix<double> build_a(const FamilyParams& p) {
  return build_a<double>(detail::finite_order(p.n, "build_a"), p.s, p.t);
}

/// det A_n(s, t) = S_n(1, s + 1; t), evaluated by the recurrence.
inline double det_a(const FamilyParams& p) {
  return s_eval(1.0, p.s + 1.0, detail::finite_order(p.n, "det_a"), p.t);
}

/// Exact determinant through the polynomial S_n(1, s + 1; .).
inline Rational det_a_exact(std::size_t n, const Rational& s, const Rational& t) {
  if (n == 0) throw std::domain_error("det_a_exact: order must be at least 1");
  return s_poly(1, s + 1, n)(t);
}

enum class PsdMethod { Criterion, Eigen, Both };

class MethodDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Threshold-and-determinant criterion: t > t_n and S_n(1, s+1; t) >= 0.
/// The determinant comparison allows twice the running rounding-error bound.
inline bool psd_criterion(std::size_t n, double s, double t) {
  const Threshold tn = t_threshold(n);
  if (!tn.is_minus_infinity() && !(t > tn.value)) return false;
  const SEvaluation det = s_evaluate(1.0, s + 1.0, n, t);
  return det.value >= -2.0 * det.error_bound;
}

/// Positive semidefiniteness of A_n(s, t). `Both` runs the criterion and the
/// eigenvalue test; they must agree unless the smallest eigenvalue lies within
/// the eigen tolerance of zero, where the eigen verdict is returned.
inline bool is_psd_a(const FamilyParams& p, PsdMethod method = PsdMethod::Criterion,
                     std::optional<double> eigen_tol = std::nullopt) {
  const std::size_t n = detail::finite_order(p.n, "is_psd_a");
  switch (method) {
    case PsdMethod::Criterion: return psd_criterion(n, p.s, p.t);
    case PsdMethod::Eigen: return psd_check(build_a(p), eigen_tol);
    case PsdMethod::Both: {
      const bool by_criterion = psd_criterion(n, p.s, p.t);
      const PsdVerdict by_eigen = psd_verdict(build_a(p), eigen_tol);
      if (std::abs(by_eigen.min_eigenvalue) <= by_eigen.tolerance) return by_eigen.psd;
      if (by_criterion != by_eigen.psd)
        throw MethodDisagreement("is_psd_a: criterion says " + std::string(by_criterion ? "psd" : "not psd") +
                                 " but min eigenvalue is " + std::to_string(by_eigen.min_eigenvalue) +
                                 " for n=" + std::to_string(n) + " s=" + std::to_string(p.s) +
                                 " t=" + std::to_string(p.t));
      return by_criterion;
    }
  }
  throw std::invalid_argument("is_psd_a: unknown method");
}

/// Lines through the (s, t) plane with closed-form psd thresholds.
enum class ThresholdLine { SEqualsT, SMinusHalf, SZero, STwiceT };

inline std::string to_string(ThresholdLine line) {
  switch (line) {
    case ThresholdLine::SEqualsT: return "s=t";
    case ThresholdLine::SMinusHalf: return "s=-1/2";
    case ThresholdLine::SZero: return "s=0";
    case ThresholdLine::STwiceT: return "s=2t";
  }
  return "?";
}

/// The point on `line` with parameter t.
inline FamilyParams on_line(ThresholdLine line, std::size_t n, double t) {
  switch (line) {
    case ThresholdLine::SEqualsT: return {n, t, t};
    case ThresholdLine::SMinusHalf: return {n, -0.5, t};
    case ThresholdLine::SZero: return {n, 0.0, t};
    case ThresholdLine::STwiceT: return {n, 2.0 * t, t};
  }
  throw std::invalid_argument("on_line: unknown line");
}

/// Angle theta with threshold -1 / (2 + 2 cos theta) on `line`.
inline double threshold_angle(ThresholdLine line, std::size_t n) {
  const double pi = std::numbers::pi;
  const double nd = static_cast<double>(n);
  switch (line) {
    case ThresholdLine::SEqualsT: return pi / (nd + 1.0);
    case ThresholdLine::SMinusHalf: return pi / (2.0 * nd);
    case ThresholdLine::SZero: return 2.0 * pi / (2.0 * nd + 1.0);
    case ThresholdLine::STwiceT: return pi / (2.0 * nd + 1.0);
  }
  throw std::invalid_argument("threshold_angle: unknown line");
}

/// Minimal t such that A_n is psd along `line`.
inline double psd_threshold_t(std::size_t n, ThresholdLine line) {
  if (n == 0) throw std::domain_error("psd_threshold_t: order must be at least 1");
  return angle_to_root(threshold_angle(line, n));
}

/// Minimal t with A_n psd along `line`, located by bisecting the criterion.
inline double psd_threshold_bisection(std::size_t n, ThresholdLine line, double tol = 1e-12) {
  return bisect_predicate([&](double t) { return psd_criterion(n, on_line(line, n, t).s, t); }, -2.0, 0.0, tol);
}

/// Positive semidefiniteness of the infinite matrix:
/// 1 + 4t >= 0 and 1 + 2s + sqrt(1 + 4t) >= 0.
inline bool infinite_psd(double s, double t) {
  const double disc = 1.0 + 4.0 * t;
  if (disc < 0.0) return false;
  return 1.0 + 2.0 * s + std::sqrt(disc) >= 0.0;
}

/// Roots of S_n(1, s + 1; .), obtained as the negated eigenvalues of
/// A_n(s, 0) (A_n(s, t) = A_n(s, 0) + t I). Each root is checked against the
/// exact polynomial: |p(r)| <= 1e-8 * sum_k |c_k| |r|^k.
struct RealRoots {
  std::vector<double> roots;
  double max_scaled_residual = 0.0;
};

inline RealRoots real_roots_check(const Rational& s, std::size_t n) {
  if (n == 0) throw std::domain_error("real_roots_check: order must be at least 1");
  const auto eig = sym_eigenvalues(build_a<double>(n, to_double(s), 0.0));
  const RationalPoly poly = s_poly(1, s + 1, n);
  RealRoots out;
  out.roots.reserve(n);
  for (auto it = eig.rbegin(); it != eig.rend(); ++it) out.roots.push_back(-*it);
  for (double r : out.roots) {
    const double residual = std::abs(poly.eval(r)) / std::max(poly.abs_scale(r), 1e-300);
    out.max_scaled_residual = std::max(out.max_scaled_residual, residual);
  }
  if (out.max_scaled_residual > 1e-8)
    throw std::runtime_error("real_roots_check: eigenvalue-derived root is not a zero of the polynomial");
  return out;
}

}  // namespace qeclab
