#include <catch_amalgamated.hpp>

#include "qeclab/eigen.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/matrices.hpp"
#include "qeclab/random.hpp"
#include "qeclab/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace qeclab;
using Catch::Matchers::WithinAbs;

namespace {

SymMatrix<double> random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix<double> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

// B B^T with B of size n x rank: psd, singular when rank < n.
SymMatrix<double> random_gram(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix<double> b(n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rank; ++k) b(i, k) = u(rng);
  return SymMatrix<double>::generate(n, [&](std::size_t i, std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rank; ++k) acc += b(i, k) * b(j, k);
    return acc;
  });
}

// Symmetric pivoted Cholesky as an independent psd oracle.
bool cholesky_psd(const SymMatrix<double>& m, double tol) {
  const std::size_t n = m.size();
  Matrix<double> a = m.to_matrix();
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && (p == n || a(i, i) > a(p, p))) p = i;
    const double d = a(p, p);
    if (d < -tol) return false;
    if (d <= tol) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!used[i] && !used[j] && std::abs(a(i, j)) > std::sqrt(tol)) return false;
      return true;
    }
    used[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) a(i, j) -= a(i, p) * a(p, j) / d;
    }
  }
  return true;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("eigenvalues of small known matrices", "[eigen]") {
  const auto m = SymMatrix<double>::generate(2, [](std::size_t i, std::size_t j) { return i == j ? 2.0 : 1.0; });
  const auto e = sym_eigen(m);
  CHECK_THAT(e.values[0], WithinAbs(1.0, 1e-14));
  CHECK_THAT(e.values[1], WithinAbs(3.0, 1e-14));

  // Distance matrix of the path on three vertices.
  const auto d = SymMatrix<double>::generate(3, [](std::size_t i, std::size_t j) {
    return std::abs(static_cast<double>(i) - static_cast<double>(j));
  });
  const auto v = sym_eigenvalues(d);
  CHECK_THAT(v[0], WithinAbs(-2.0, 1e-13));
  CHECK_THAT(v[1], WithinAbs(1.0 - std::sqrt(3.0), 1e-13));
  CHECK_THAT(v[2], WithinAbs(1.0 + std::sqrt(3.0), 1e-13));

  const auto one = sym_eigen(SymMatrix<double>::generate(1, [](std::size_t, std::size_t) { return -4.5; }));
  CHECK(one.values == std::vector<double>{-4.5});
  CHECK(one.vectors(0, 0) == 1.0);
}

TEST_CASE("both eigensolvers agree and reconstruct the matrix", "[eigen][property]") {
  std::mt19937_64 rng(seed_from_env());
  for (std::size_t n : {2u, 3u, 5u, 8u, 13u, 30u, 64u, 65u, 100u}) {
    const auto m = random_symmetric(rng, n);
    const auto j = jacobi_eigen(m);
    const auto q = tridiagonal_eigen(m);
    const auto v = sym_eigenvalues(m);
    INFO("n = " << n);
    REQUIRE(max_abs_diff(j.values, q.values) <= 1e-12 * std::sqrt(double(n)));
    REQUIRE(max_abs_diff(v, q.values) <= 1e-12 * std::sqrt(double(n)));
    REQUIRE(reconstruction_residual(m, j) <= 1e-12 * frobenius_norm(m) * n);
    REQUIRE(reconstruction_residual(m, q) <= 1e-12 * frobenius_norm(m) * n);
    REQUIRE(std::is_sorted(q.values.begin(), q.values.end()));
  }
}

TEST_CASE("eigenvalue sum equals the trace and product the determinant", "[eigen][property]") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto a = build_a<double>(n, 0.3, 0.7);
    const auto d = SymMatrix<double>::generate(n, [](std::size_t i, std::size_t j) {
      return std::abs(static_cast<double>(i) - static_cast<double>(j));
    });
    for (const auto& m : {a, d}) {
      const auto v = sym_eigenvalues(m);
      double sum = 0.0;
      double prod = 1.0;
      for (double x : v) {
        sum += x;
        prod *= x;
      }
      const double det = lu_det(m);
      INFO("n = " << n);
      REQUIRE_THAT(sum, WithinAbs(m.trace(), 1e-10 * std::max(1.0, std::abs(m.trace()))));
      REQUIRE_THAT(prod, WithinAbs(det, 1e-9 * std::max(1.0, std::abs(det))));
    }
  }
}

TEST_CASE("solvers report failure instead of returning garbage", "[eigen]") {
  std::mt19937_64 rng(7);
  const auto m = random_symmetric(rng, 10);
  CHECK_THROWS_AS(jacobi_eigen(m, 1), NonConvergence);
  auto bad = m;
  bad.set(2, 3, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(jacobi_eigen(bad), std::invalid_argument);
  CHECK_THROWS_AS(tridiagonal_eigen(bad), std::invalid_argument);
  CHECK_THROWS_AS(psd_check(bad), std::invalid_argument);
}

TEST_CASE("determinants by elimination", "[linalg]") {
  const auto m = SymMatrix<double>::generate(2, [](std::size_t i, std::size_t j) { return double(1 + i + j); });
  CHECK_THAT(lu_det(m), WithinAbs(-1.0, 1e-15));
  Matrix<double> needs_pivot(2, 2);
  needs_pivot(0, 1) = 1.0;
  needs_pivot(1, 0) = 1.0;
  CHECK(lu_det(needs_pivot) == -1.0);
  const auto exact = build_a<Rational>(3, Rational(1, 2), Rational(1, 4));
  CHECK(lu_det(exact) == Rational(239, 64));
  CHECK(lu_det(SymMatrix<Rational>::generate(2, [](std::size_t, std::size_t) { return Rational(1); })) == 0);
}

TEST_CASE("psd_check on examples", "[linalg][psd]") {
  CHECK(psd_check(SymMatrix<double>::identity(4)));
  const auto ones = SymMatrix<double>::generate(3, [](std::size_t, std::size_t) { return 1.0; });
  CHECK(psd_check(ones));
  const auto indefinite = SymMatrix<double>::generate(2, [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 2.0; });
  const auto verdict = psd_verdict(indefinite);
  CHECK_FALSE(verdict.psd);
  CHECK_THAT(verdict.min_eigenvalue, WithinAbs(-1.0, 1e-14));
  CHECK(psd_check(indefinite, 1.5));
  CHECK(default_psd_tolerance(indefinite) == 2e-9 * 2.0);
}

TEST_CASE("psd_check agrees with a pivoted Cholesky oracle", "[linalg][psd][property]") {
  std::mt19937_64 rng(seed_from_env() + 2);
  int psd_count = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    SymMatrix<double> m(n);
    switch (trial % 3) {
      case 0: m = random_symmetric(rng, n); break;
      case 1: m = random_gram(rng, n, n); break;
      default: m = random_gram(rng, n, std::uniform_int_distribution<std::size_t>(1, n)(rng)); break;
    }
    const bool got = psd_check(m);
    psd_count += got;
    INFO("trial " << trial << " n = " << n);
    REQUIRE(got == cholesky_psd(m, default_psd_tolerance(m)));
  }
  CHECK(psd_count > 200);
}

TEST_CASE("bisection root finding", "[roots]") {
  const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14);
  CHECK_THAT(r, WithinAbs(std::numbers::sqrt2, 1e-14));
  CHECK(find_root([](double x) { return x; }, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), InvalidBracket);
  CHECK_THROWS_AS(find_root([](double x) { return x; }, -1.0, 1.0, 0.0), std::invalid_argument);

  const double edge = bisect_predicate([](double x) { return x >= 0.3; }, 0.0, 1.0, 1e-12);
  CHECK(edge >= 0.3);
  CHECK(edge - 0.3 <= 1e-12);
  CHECK_THROWS_AS(bisect_predicate([](double) { return false; }, 0.0, 1.0, 1e-9), InvalidBracket);
}
