#pragma once

// Symmetric eigensolvers: cyclic Jacobi rotations (small matrices, and the
// reference path) and Householder tridiagonalization followed by implicit QL
// (large matrices, and the fast eigenvalues-only path).

#include "qeclab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeclab {

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues in ascending order; column k of `vectors` pairs with values[k].
struct EigenDecomposition {
  std::vector<double> values;
  Matrix<double> vectors;
};

namespace detail {

inline void sort_ascending(std::vector<double>& values, Matrix<double>* vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = values[order[k]];
  values = std::move(sorted);
  if (vectors) {
    Matrix<double> v(vectors->rows(), n);
    for (std::size_t i = 0; i < vectors->rows(); ++i)
      for (std::size_t k = 0; k < n; ++k) v(i, k) = (*vectors)(i, order[k]);
    *vectors = std::move(v);
  }
}

}  // namespace detail

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;

namespace detail {

inline void require_finite(const SymMatrix<double>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (!std::isfinite(m(i, j))) throw std::invalid_argument("eigensolver: matrix has non-finite entries");
}

}  // namespace detail

/// Cyclic Jacobi. Sweeps until the off-diagonal Frobenius norm is at most
/// 1e-13 * ||M||_F; throws NonConvergence after `max_sweeps` sweeps.
inline EigenDecomposition jacobi_eigen(const SymMatrix<double>& m, int max_sweeps = kJacobiMaxSweeps) {
  detail::require_finite(m);
  const std::size_t n = m.size();
  Matrix<double> a = m.to_matrix();
  Matrix<double> v = Matrix<double>::identity(n);
  const double target = kJacobiOffDiagonalThreshold * frobenius_norm(m);

  auto off_norm = [&] {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > max_sweeps)
      throw NonConvergence("jacobi_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(v);
  detail::sort_ascending(out.values, &out.vectors);
  return out;
}

namespace detail {

// Householder reduction to tridiagonal form (after the EISPACK tred2 routine).
// On return d holds the diagonal, e the subdiagonal in e[1..n-1]. When
// `accumulate` is set, v holds the orthogonal transformation.
inline void tridiagonalize(Matrix<double>& v, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
  const std::size_t n = v.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k + 1 <= i; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k + 1 <= i; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  if (!accumulate) {
    for (std::size_t j = 0; j < n; ++j) d[j] = v(j, j);
    e[0] = 0.0;
    return;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL on the symmetric tridiagonal (d, e) (after EISPACK tql2).
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Matrix<double>* v) {
  const std::size_t n = d.size();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  const double eps = std::numeric_limits<double>::epsilon();
  const int max_iter = 60;
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iter) throw NonConvergence("tridiagonal_ql: no convergence");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (v) {
            for (std::size_t k = 0; k < n; ++k) {
              h = (*v)(k, ii + 1);
              (*v)(k, ii + 1) = s * (*v)(k, ii) + c * h;
              (*v)(k, ii) = c * (*v)(k, ii) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace detail

/// Householder tridiagonalization + implicit QL, with eigenvectors.
inline EigenDecomposition tridiagonal_eigen(const SymMatrix<double>& m) {
  detail::require_finite(m);
  EigenDecomposition out;
  out.vectors = m.to_matrix();
  std::vector<double> e;
  detail::tridiagonalize(out.vectors, out.values, e, true);
  detail::tridiagonal_ql(out.values, e, &out.vectors);
  detail::sort_ascending(out.values, &out.vectors);
  return out;
}

/// Jacobi up to this dimension, tridiagonal QL beyond.
inline constexpr std::size_t kJacobiMaxDimension = 64;

/// Ascending eigenvalues with an orthonormal eigenvector basis.
inline EigenDecomposition sym_eigen(const SymMatrix<double>& m) {
  return m.size() <= kJacobiMaxDimension ? jacobi_eigen(m) : tridiagonal_eigen(m);
}

/// Ascending eigenvalues only. Skips the eigenvector accumulation entirely.
inline std::vector<double> sym_eigenvalues(const SymMatrix<double>& m) {
  detail::require_finite(m);
  Matrix<double> work = m.to_matrix();
  std::vector<double> d;
  std::vector<double> e;
  detail::tridiagonalize(work, d, e, false);
  detail::tridiagonal_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

/// ||M - V diag(values) V^T||_F.
inline double reconstruction_residual(const SymMatrix<double>& m, const EigenDecomposition& eig) {
  const std::size_t n = m.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double r = m(i, j);
      for (std::size_t k = 0; k < n; ++k) r -= eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      acc += r * r;
    }
  return std::sqrt(acc);
}

}  // namespace qeclab
