#pragma once

#include "qeclab/eigen.hpp"
#include "qeclab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>

namespace qeclab {

/// Determinant by Gaussian elimination. Floating types use partial pivoting on
/// the largest magnitude; exact types (Rational) take the first nonzero pivot,
/// so the result is exact. A singular matrix yields 0.
template <typename T>
T lu_det(Matrix<T> a) {
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (std::is_floating_point_v<T>) {
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    } else {
      while (pivot < n && a(pivot, col) == T(0)) ++pivot;
      if (pivot == n) return T(0);
    }
    if (a(pivot, col) == T(0)) return T(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    const T p = a(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      const T factor = a(r, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

template <typename T>
T lu_det(const SymMatrix<T>& m) {
  return lu_det(m.to_matrix());
}

/// 1e-9 * n * max(1, max|entry|).
inline double default_psd_tolerance(const SymMatrix<double>& m) {
  return 1e-9 * static_cast<double>(m.size()) * std::max(1.0, max_abs_entry(m));
}

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Positive semidefiniteness by the smallest eigenvalue: psd iff
/// lambda_min >= -tol. Without `tol`, default_psd_tolerance applies.
inline PsdVerdict psd_verdict(const SymMatrix<double>& m, std::optional<double> tol = std::nullopt) {
  PsdVerdict v;
  v.tolerance = tol.value_or(default_psd_tolerance(m));
  v.min_eigenvalue = sym_eigenvalues(m).front();
  v.psd = v.min_eigenvalue >= -v.tolerance;
  return v;
}

inline bool psd_check(const SymMatrix<double>& m, std::optional<double> tol = std::nullopt) {
  return psd_verdict(m, tol).psd;
}

}  // namespace qeclab
