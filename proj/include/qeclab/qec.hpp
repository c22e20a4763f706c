#pragma once

// Quadratic embedding constants.
//
// QEC(G) = max { f^T D f : sum f = 0, |f| = 1 } for the distance matrix D of a
// finite connected graph. Computed as the top eigenpair of D compressed onto
// the sum-zero hyperplane, plus the closed form and the threshold bisection
// for paths.

#include "qeclab/eigen.hpp"
#include "qeclab/graphs.hpp"
#include "qeclab/matrices.hpp"
#include "qeclab/matrix.hpp"
#include "qeclab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeclab {

/// Orthonormal basis of {f : sum f = 0} in R^n as the n x (n-1) matrix of
/// Helmert contrasts: column k is (1, ..., 1, -(k+1), 0, ..., 0) normalized.
inline Matrix<double> helmert_basis(std::size_t n) {
  if (n < 2) throw std::domain_error("helmert_basis: n must be at least 2");
  Matrix<double> q(n, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double m = static_cast<double>(k + 1);
    const double norm = std::sqrt(m * (m + 1.0));
    for (std::size_t j = 0; j <= k; ++j) q(j, k) = 1.0 / norm;
    q(k + 1, k) = -m / norm;
  }
  return q;
}

struct QecResult {
  double value = 0.0;
  std::vector<double> argmax;  // sum 0, norm 1, first nonzero entry positive
};

/// f^T M f.
inline double quadratic_form(const SymMatrix<double>& m, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) acc += f[i] * m(i, j) * f[j];
  return acc;
}

inline QecResult qec_numeric(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (n < 2) throw std::domain_error("qec_numeric: needs at least 2 vertices (the constraint set is empty)");
  const SymMatrix<double> d = dist.to_real();
  const Matrix<double> q = helmert_basis(n);
  const Matrix<double> compressed = q.transposed() * d.to_matrix() * q;
  // Symmetrize away the rounding asymmetry of the triple product.
  const auto b = SymMatrix<double>::generate(
      n - 1, [&](std::size_t i, std::size_t j) { return 0.5 * (compressed(i, j) + compressed(j, i)); });
  const EigenDecomposition eig = sym_eigen(b);

  QecResult out;
  out.value = eig.values.back();
  out.argmax.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k + 1 < n; ++k) out.argmax[i] += q(i, k) * eig.vectors(k, n - 2);
  double norm = 0.0;
  for (double x : out.argmax) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : out.argmax) x /= norm;
  const auto lead = std::find_if(out.argmax.begin(), out.argmax.end(), [](double x) { return std::abs(x) > 1e-12; });
  if (lead != out.argmax.end() && *lead < 0)
    for (double& x : out.argmax) x = -x;
  return out;
}

inline QecResult qec_numeric(const Graph& g) { return qec_numeric(distance_matrix(g)); }

/// QEC(P_n) = -1 / (1 + cos(pi / n)).
inline double qec_path_closed(std::size_t n) {
  if (n < 2) throw std::domain_error("qec_path_closed: n must be at least 2");
  return -1.0 / (1.0 + std::cos(std::numbers::pi / static_cast<double>(n)));
}

/// QEC(P_n) as the least t in [-2, 0] with A_{n-1}(t/2, t/2) psd.
inline double qec_path_bisection(std::size_t n, double tol = 1e-12) {
  if (n < 2) throw std::domain_error("qec_path_bisection: n must be at least 2");
  return bisect_predicate([&](double t) { return is_psd_a({n - 1, t / 2.0, t / 2.0}, PsdMethod::Criterion); }, -2.0,
                          0.0, tol);
}

/// Largest two eigenvalues of a distance matrix.
struct TopEigenvalues {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

inline TopEigenvalues top_eigenvalues(const DistanceMatrix& dist) {
  if (dist.size() < 2) throw std::domain_error("top_eigenvalues: needs at least 2 vertices");
  const auto values = sym_eigenvalues(dist.to_real());
  return {values[values.size() - 1], values[values.size() - 2]};
}

/// Solutions of tan(theta/2) tan(n theta/2) = -1/n in (0, pi), n odd.
struct ThetaStar {
  double value = 0.0;           // the largest solution
  std::vector<double> roots;    // every solution found, descending
};

/// n sin(theta/2) sin(n theta/2) + cos(theta/2) cos(n theta/2): the tangent
/// equation multiplied through by the cosines, free of poles.
inline double theta_equation(std::size_t n, double theta) {
  const double nd = static_cast<double>(n);
  return nd * std::sin(theta / 2.0) * std::sin(nd * theta / 2.0) + std::cos(theta / 2.0) * std::cos(nd * theta / 2.0);
}

/// Walks the intervals between the poles (2k+1) pi / n of tan(n theta / 2)
/// from pi downward and bisects each sign change.
inline ThetaStar theta_star(std::size_t n, double tol = 1e-14) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("theta_star: n must be odd and at least 3");
  const double pi = std::numbers::pi;
  const double nd = static_cast<double>(n);
  std::vector<double> edges{0.0};
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k) edges.push_back(static_cast<double>(2 * k + 1) * pi / nd);
  edges.back() = pi;

  auto h = [n](double theta) { return theta_equation(n, theta); };
  ThetaStar out;
  for (std::size_t i = edges.size() - 1; i > 0; --i) {
    const double lo = edges[i - 1];
    const double hi = edges[i];
    if (std::signbit(h(lo)) == std::signbit(h(hi))) continue;
    out.roots.push_back(find_root(h, lo, hi, tol));
  }
  if (out.roots.empty()) throw std::runtime_error("theta_star: no sign change found in (0, pi)");
  out.value = out.roots.front();
  return out;
}

/// Top eigenvalues of D(P_n) together with the closed form for lambda_2:
/// -1/(1 + cos(pi/n)) for even n, -1/(1 - cos theta*) for odd n.
struct LambdaPath {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda2_closed = 0.0;
  double deviation = 0.0;
};

inline LambdaPath lambda_path(std::size_t n) {
  if (n < 2) throw std::domain_error("lambda_path: n must be at least 2");
  const auto top = top_eigenvalues(distance_matrix(path_graph(n)));
  LambdaPath out{top.lambda1, top.lambda2, 0.0, 0.0};
  out.lambda2_closed =
      n % 2 == 0 ? qec_path_closed(n) : -1.0 / (1.0 - std::cos(theta_star(n).value));
  out.deviation = std::abs(out.lambda2 - out.lambda2_closed);
  if (out.deviation > 1e-8)
    throw std::runtime_error("lambda_path: eigen lambda_2 of P_" + std::to_string(n) +
                             " differs from the closed form by " + std::to_string(out.deviation));
  return out;
}

/// x_i = (-1)^i sin((2i - 1) pi / (2n)), i = 1..n, and the unit-norm copy
/// x * sqrt(2 / n).
struct ExtremalVector {
  std::vector<double> x;
  std::vector<double> normalized;
};

inline ExtremalVector path_extremal_vector(std::size_t n) {
  if (n < 2) throw std::domain_error("path_extremal_vector: n must be at least 2");
  const double nd = static_cast<double>(n);
  ExtremalVector out;
  out.x.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    out.x.push_back(sign * std::sin(static_cast<double>(2 * i - 1) * std::numbers::pi / (2.0 * nd)));
  }
  const double scale = std::sqrt(2.0 / nd);
  for (double v : out.x) out.normalized.push_back(v * scale);
  return out;
}

/// The three sums of the extremal vector and their distance from
/// 0, n/2 and -n / (2 (1 + cos(pi/n))).
struct ExtremalSums {
  double sum = 0.0;
  double sum_of_squares = 0.0;
  double weighted = 0.0;  // sum_{i,j} |i - j| x_i x_j
  double max_deviation = 0.0;
};

inline ExtremalSums verify_extremal_sums(std::size_t n) {
  const auto x = path_extremal_vector(n).x;
  ExtremalSums out;
  for (std::size_t i = 0; i < n; ++i) {
    out.sum += x[i];
    out.sum_of_squares += x[i] * x[i];
    for (std::size_t j = 0; j < n; ++j) out.weighted += static_cast<double>(i > j ? i - j : j - i) * x[i] * x[j];
  }
  const double nd = static_cast<double>(n);
  out.max_deviation = std::max({std::abs(out.sum), std::abs(out.sum_of_squares - nd / 2.0),
                                std::abs(out.weighted - qec_path_closed(n) * nd / 2.0)});
  return out;
}

/// QEC(P_n) for n = 2..n_max.
inline std::vector<double> qec_limit_check(std::size_t n_max) {
  if (n_max < 2) throw std::domain_error("qec_limit_check: n_max must be at least 2");
  std::vector<double> out;
  for (std::size_t n = 2; n <= n_max; ++n) out.push_back(qec_path_closed(n));
  return out;
}

}  // namespace qeclab
