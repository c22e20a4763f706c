#include <catch_amalgamated.hpp>

#include "qeclab/qec.hpp"
#include "qeclab/random.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace qeclab;
using Catch::Matchers::WithinAbs;

namespace {

// Power iteration on the shifted, projected distance matrix: an oracle for
// QEC that does not go through the library's eigensolvers.
double qec_power_oracle(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  const double shift = static_cast<double>(n * static_cast<std::size_t>(std::max(1, d.diameter())));
  auto project = [n](std::vector<double>& f) {
    double mean = 0.0;
    for (double x : f) mean += x;
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& x : f) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : f) x /= norm;
  };
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(1.0 + 0.7 * static_cast<double>(i * i));
  project(f);
  double value = 0.0;
  for (int iter = 0; iter < 200000; ++iter) {
    std::vector<double> g(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = shift * f[i];
      for (std::size_t j = 0; j < n; ++j) g[i] += d(i + 1, j + 1) * f[j];
    }
    project(g);
    double next = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next += g[i] * d(i + 1, j + 1) * g[j];
    f = std::move(g);
    if (iter > 50 && std::abs(next - value) < 1e-15) {
      value = next;
      break;
    }
    value = next;
  }
  return value;
}

// QEC(P_3) by scanning the unit circle of the hyperplane sum f = 0.
double p3_circle_oracle() {
  const double u[3] = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  const double w[3] = {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};
  double best = -1e300;
  const int steps = 2000000;
  for (int k = 0; k < steps; ++k) {
    const double phi = std::numbers::pi * k / steps;
    double f[3];
    for (int i = 0; i < 3; ++i) f[i] = std::cos(phi) * u[i] + std::sin(phi) * w[i];
    double q = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q += std::abs(i - j) * f[i] * f[j];
    best = std::max(best, q);
  }
  return best;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (std::size_t v = 2; v <= n; ++v) g.add_edge(v, std::uniform_int_distribution<std::size_t>(1, v - 1)(rng));
  std::uniform_int_distribution<std::size_t> pick(1, n);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t u = pick(rng);
    const std::size_t v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("qec_numeric examples", "[qec]") {
  const auto p2 = qec_numeric(path_graph(2));
  CHECK_THAT(p2.value, WithinAbs(-1.0, 1e-14));
  CHECK_THAT(p2.argmax[0], WithinAbs(1.0 / std::sqrt(2.0), 1e-14));
  CHECK_THAT(p2.argmax[1], WithinAbs(-1.0 / std::sqrt(2.0), 1e-14));
  CHECK_THAT(qec_numeric(complete_graph(3)).value, WithinAbs(-1.0, 1e-14));
  const auto p3 = qec_numeric(path_graph(3));
  CHECK_THAT(p3.value, WithinAbs(-2.0 / 3.0, 1e-14));
  CHECK_THAT(p3_circle_oracle(), WithinAbs(-2.0 / 3.0, 1e-10));
  CHECK_THROWS_AS(qec_numeric(path_graph(1)), std::domain_error);
  CHECK_THROWS_AS(qec_numeric(parse_edge_list("1 2\n3 4")), DisconnectedGraph);
}

TEST_CASE("the Helmert basis is orthonormal and orthogonal to ones", "[qec]") {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto q = helmert_basis(n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += q(i, a);
      REQUIRE(std::abs(sum) <= 1e-14);
      for (std::size_t b = 0; b + 1 < n; ++b) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, a) * q(i, b);
        REQUIRE_THAT(dot, WithinAbs(a == b ? 1.0 : 0.0, 1e-14));
      }
    }
  }
}

TEST_CASE("closed form and bisection for paths", "[qec]") {
  CHECK_THAT(qec_path_closed(2), WithinAbs(-1.0, 1e-15));
  CHECK_THAT(qec_path_closed(3), WithinAbs(-2.0 / 3.0, 1e-15));
  CHECK_THAT(qec_path_closed(4), WithinAbs(-(2.0 - std::numbers::sqrt2), 1e-15));
  CHECK_THAT(qec_path_bisection(2), WithinAbs(-1.0, 1e-11));
  CHECK_THAT(qec_path_bisection(3), WithinAbs(-2.0 / 3.0, 1e-11));
  CHECK_THAT(qec_path_bisection(4), WithinAbs(-(2.0 - std::numbers::sqrt2), 1e-11));
  CHECK_THROWS(qec_path_closed(1));
  CHECK_THROWS(qec_path_bisection(1));
  for (std::size_t n = 2; n <= 30; ++n)
    REQUIRE_THAT(qec_path_closed(n), WithinAbs(2.0 * psd_threshold_t(n - 1, ThresholdLine::SEqualsT), 1e-15));
}

TEST_CASE("lambda_path examples", "[qec]") {
  const auto l2 = lambda_path(2);
  CHECK_THAT(l2.lambda1, WithinAbs(1.0, 1e-14));
  CHECK_THAT(l2.lambda2, WithinAbs(-1.0, 1e-14));
  const auto l3 = lambda_path(3);
  CHECK_THAT(l3.lambda1, WithinAbs(1.0 + std::sqrt(3.0), 1e-13));
  CHECK_THAT(l3.lambda2, WithinAbs(1.0 - std::sqrt(3.0), 1e-13));
  CHECK_THAT(lambda_path(4).lambda2, WithinAbs(-0.5857864376269049, 1e-13));
  CHECK_THAT(lambda_path(5).lambda2, WithinAbs(-0.557799942211, 1e-11));
  CHECK_THROWS(lambda_path(1));
}

TEST_CASE("theta_star examples", "[qec]") {
  const auto t3 = theta_star(3);
  CHECK_THAT(t3.value, WithinAbs(1.9455307595036367, 1e-12));
  CHECK_THAT(std::cos(t3.value), WithinAbs(-0.36602540378443865, 1e-12));
  CHECK_THAT(-1.0 / (1.0 - std::cos(t3.value)), WithinAbs(1.0 - std::sqrt(3.0), 1e-10));
  CHECK_THAT(std::tan(t3.value / 2.0) * std::tan(3.0 * t3.value / 2.0), WithinAbs(-1.0 / 3.0, 1e-9));
  const double lambda2_p5 = top_eigenvalues(distance_matrix(path_graph(5))).lambda2;
  CHECK_THAT(-1.0 / (1.0 - std::cos(theta_star(5).value)), WithinAbs(lambda2_p5, 1e-8));
  CHECK_THROWS_AS(theta_star(4), std::domain_error);
  CHECK_THROWS_AS(theta_star(1), std::domain_error);
  for (std::size_t n = 3; n <= 41; n += 2) {
    const auto t = theta_star(n);
    INFO("n=" << n);
    REQUIRE(t.value > 0.0);
    REQUIRE(t.value < std::numbers::pi);
    REQUIRE(std::is_sorted(t.roots.rbegin(), t.roots.rend()));
    REQUIRE(t.value == t.roots.front());
    REQUIRE(std::abs(theta_equation(n, t.value)) <= 1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("extremal vector examples", "[qec]") {
  const auto x2 = path_extremal_vector(2).x;
  CHECK_THAT(x2[0], WithinAbs(-std::sqrt(2.0) / 2.0, 1e-15));
  CHECK_THAT(x2[1], WithinAbs(std::sqrt(2.0) / 2.0, 1e-15));
  const auto x3 = path_extremal_vector(3).x;
  CHECK_THAT(x3[0], WithinAbs(-0.5, 1e-15));
  CHECK_THAT(x3[1], WithinAbs(1.0, 1e-15));
  CHECK_THAT(x3[2], WithinAbs(-0.5, 1e-15));
  const auto x4 = path_extremal_vector(4).x;
  const double pi = std::numbers::pi;
  CHECK_THAT(x4[0], WithinAbs(-std::sin(pi / 8), 1e-15));
  CHECK_THAT(x4[1], WithinAbs(std::sin(3 * pi / 8), 1e-15));
  CHECK_THAT(x4[2], WithinAbs(-std::sin(5 * pi / 8), 1e-15));
  CHECK_THAT(x4[3], WithinAbs(std::sin(7 * pi / 8), 1e-15));
  CHECK_THROWS(path_extremal_vector(1));
}

TEST_CASE("extremal sums", "[qec]") {
  const auto s2 = verify_extremal_sums(2);
  CHECK_THAT(s2.sum, WithinAbs(0.0, 1e-15));
  CHECK_THAT(s2.sum_of_squares, WithinAbs(1.0, 1e-15));
  CHECK_THAT(s2.weighted, WithinAbs(-1.0, 1e-15));
  CHECK_THAT(verify_extremal_sums(3).weighted, WithinAbs(-1.0, 1e-15));
  for (std::size_t n = 2; n <= 64; ++n) {
    REQUIRE(verify_extremal_sums(n).max_deviation <= 1e-10);
    const auto f = path_extremal_vector(n).normalized;
    REQUIRE_THAT(quadratic_form(distance_matrix(path_graph(n)).to_real(), f), WithinAbs(qec_path_closed(n), 1e-9));
  }
}

TEST_CASE("qec limit", "[qec]") {
  const auto first = qec_limit_check(4);
  REQUIRE(first.size() == 3);
  CHECK_THAT(first[0], WithinAbs(-1.0, 1e-15));
  CHECK_THAT(first[1], WithinAbs(-2.0 / 3.0, 1e-15));
  CHECK_THAT(first[2], WithinAbs(-(2.0 - std::numbers::sqrt2), 1e-15));
  const auto seq = qec_limit_check(1024);
  for (std::size_t k = 1; k < seq.size(); ++k) REQUIRE(seq[k] > seq[k - 1]);
  for (double v : seq) REQUIRE(v <= -0.5);
  CHECK_THAT(seq.back(), WithinAbs(-0.5000011765503745, 1e-15));
  CHECK(std::abs(seq.back() + 0.5) < 1e-5);
  CHECK_THROWS(qec_limit_check(1));
}

TEST_CASE("path QEC by three methods", "[qec][property]") {
  for (std::size_t n = 2; n <= 64; ++n) {
    const double closed = qec_path_closed(n);
    INFO("n=" << n);
    REQUIRE_THAT(qec_numeric(path_graph(n)).value, WithinAbs(closed, 1e-8));
    REQUIRE_THAT(qec_path_bisection(n), WithinAbs(closed, 1e-9));
    const auto l = lambda_path(n);
    if (n % 2 == 0)
      REQUIRE_THAT(l.lambda2, WithinAbs(closed, 1e-8));
    else
      REQUIRE(closed - l.lambda2 >= (n <= 11 ? 1e-4 : 1e-8));
  }
}

TEST_CASE("eigenvalue bracket and the power-iteration oracle", "[qec][property]") {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 2; n <= 64; n += (n < 12 ? 1 : 7)) graphs.emplace_back("path:" + std::to_string(n), path_graph(n));
  for (std::size_t n = 3; n <= 20; ++n) graphs.emplace_back("cycle:" + std::to_string(n), cycle_graph(n));
  for (std::size_t n = 2; n <= 20; ++n) graphs.emplace_back("star:" + std::to_string(n), star_graph(n));
  for (std::size_t n = 2; n <= 12; ++n) graphs.emplace_back("complete:" + std::to_string(n), complete_graph(n));
  std::mt19937_64 rng(seed_from_env());
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    graphs.emplace_back("random#" + std::to_string(k), random_connected(rng, n));
  }
  for (const auto& [name, g] : graphs) {
    INFO(name);
    const auto d = distance_matrix(g);
    const auto q = qec_numeric(d);
    const auto top = top_eigenvalues(d);
    REQUIRE(top.lambda2 - 1e-8 <= q.value);
    REQUIRE(q.value < top.lambda1);
    double sum = 0.0;
    double norm = 0.0;
    for (double x : q.argmax) {
      sum += x;
      norm += x * x;
    }
    REQUIRE(std::abs(sum) <= 1e-10);
    REQUIRE(std::abs(norm - 1.0) <= 1e-10);
    REQUIRE_THAT(quadratic_form(d.to_real(), q.argmax), WithinAbs(q.value, 1e-8));
    if (g.vertex_count() <= 12) REQUIRE_THAT(qec_power_oracle(d), WithinAbs(q.value, 1e-7));
  }
}
