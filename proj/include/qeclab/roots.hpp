#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qeclab {

class InvalidBracket : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bisection on a sign-changing bracket [lo, hi]. Stops once the bracket is
/// no wider than `tol` (or f hits exactly zero) and returns its midpoint.
template <typename F>
double find_root(F&& f, double lo, double hi, double tol = 1e-12) {
  if (!(tol > 0)) throw std::invalid_argument("find_root: tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw InvalidBracket("find_root: f(lo) and f(hi) have the same sign on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  // 200 halvings exhaust double resolution on any finite bracket.
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

/// Smallest x in [lo, hi] at which a monotone predicate (false below, true
/// above) becomes true, to within `tol`. Returns the upper end of the final
/// bracket, where the predicate is known to hold.
template <typename P>
double bisect_predicate(P&& pred, double lo, double hi, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("bisect_predicate: tolerance must be positive");
  if (pred(lo)) return lo;
  if (!pred(hi)) throw InvalidBracket("bisect_predicate: predicate false on the whole bracket");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace qeclab
