#pragma once

#include "qeclab/graphs.hpp"
#include "qeclab/qec.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qeclab {

struct QecReport {
  std::string graph_id;
  std::size_t n = 0;
  double qec_numeric = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::vector<double> extremal_vector;
  std::vector<std::pair<std::string, double>> method_deltas;
  // Paths only.
  std::optional<double> qec_closed;
  std::optional<double> qec_bisection;
  std::optional<double> theta_star;  // odd n only

  double max_delta() const {
    double m = 0.0;
    for (const auto& [name, d] : method_deltas) m = std::max(m, d);
    return m;
  }
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Computes every quantity for `g` and checks
/// lambda_2 <= QEC < lambda_1, sum f = 0, |f| = 1 and f^T D f = QEC.
inline QecReport make_report(const Graph& g, std::string graph_id, double bisect_tol = 1e-12) {
  const DistanceMatrix dist = distance_matrix(g);
  const QecResult qec = qec_numeric(dist);
  const TopEigenvalues top = top_eigenvalues(dist);

  QecReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.vertex_count();
  r.qec_numeric = qec.value;
  r.lambda1 = top.lambda1;
  r.lambda2 = top.lambda2;
  r.extremal_vector = qec.argmax;

  const double rayleigh = quadratic_form(dist.to_real(), qec.argmax);
  r.method_deltas.emplace_back("rayleigh_vs_eigen", std::abs(rayleigh - qec.value));

  if (is_path(g)) {
    r.qec_closed = qec_path_closed(r.n);
    r.qec_bisection = qec_path_bisection(r.n, bisect_tol);
    if (r.n % 2 == 1 && r.n >= 3) r.theta_star = theta_star(r.n).value;
    r.method_deltas.emplace_back("numeric_vs_closed", std::abs(r.qec_numeric - *r.qec_closed));
    r.method_deltas.emplace_back("bisection_vs_closed", std::abs(*r.qec_bisection - *r.qec_closed));
    r.method_deltas.emplace_back("numeric_vs_bisection", std::abs(r.qec_numeric - *r.qec_bisection));
  }

  constexpr double kBand = 1e-8;
  if (!(r.lambda2 - kBand <= r.qec_numeric && r.qec_numeric < r.lambda1 + kBand))
    throw InvariantViolation("qec report for " + r.graph_id + ": QEC outside [lambda_2, lambda_1)");
  const double sum = std::accumulate(qec.argmax.begin(), qec.argmax.end(), 0.0);
  const double sq = std::inner_product(qec.argmax.begin(), qec.argmax.end(), qec.argmax.begin(), 0.0);
  if (std::abs(sum) > 1e-10 || std::abs(sq - 1.0) > 1e-10)
    throw InvariantViolation("qec report for " + r.graph_id + ": extremal vector off the constraint set");
  if (std::abs(rayleigh - qec.value) > kBand)
    throw InvariantViolation("qec report for " + r.graph_id + ": f^T D f does not reproduce QEC");
  return r;
}

namespace detail {

inline std::string sig12(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string sig12(const std::optional<double>& x) { return x ? sig12(*x) : std::string(); }

}  // namespace detail

/// One `field: value` line per field.
inline std::string render_text(const QecReport& r) {
  using detail::sig12;
  std::ostringstream os;
  os << "graph: " << r.graph_id << '\n';
  os << "n: " << r.n << '\n';
  os << "qec_numeric: " << sig12(r.qec_numeric) << '\n';
  if (r.qec_closed) os << "qec_closed: " << sig12(r.qec_closed) << '\n';
  if (r.qec_bisection) os << "qec_bisection: " << sig12(r.qec_bisection) << '\n';
  os << "lambda1: " << sig12(r.lambda1) << '\n';
  os << "lambda2: " << sig12(r.lambda2) << '\n';
  if (r.theta_star) os << "theta_star: " << sig12(r.theta_star) << '\n';
  os << "extremal_vector:";
  for (double x : r.extremal_vector) os << ' ' << sig12(x);
  os << '\n';
  for (const auto& [name, d] : r.method_deltas) os << "delta_" << name << ": " << sig12(d) << '\n';
  os << "max_delta: " << sig12(r.max_delta()) << '\n';
  return os.str();
}

inline constexpr const char* kReportCsvHeader = "n,qec_numeric,qec_closed,qec_bisection,lambda1,lambda2,theta_star,max_delta";

inline std::string render_csv_row(const QecReport& r) {
  using detail::sig12;
  std::ostringstream os;
  os << r.n << ',' << sig12(r.qec_numeric) << ',' << sig12(r.qec_closed) << ',' << sig12(r.qec_bisection) << ','
     << sig12(r.lambda1) << ',' << sig12(r.lambda2) << ',' << sig12(r.theta_star) << ',' << sig12(r.max_delta());
  return os.str();
}

/// CSV table of path reports for n_min..n_max.
inline std::string path_table_csv(std::size_t n_min, std::size_t n_max, double bisect_tol = 1e-12) {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("path table: need 2 <= n_min <= n_max");
  std::ostringstream os;
  os << kReportCsvHeader << '\n';
  for (std::size_t n = n_min; n <= n_max; ++n)
    os << render_csv_row(make_report(path_graph(n), "path:" + std::to_string(n), bisect_tol)) << '\n';
  return os.str();
}

}  // namespace qeclab
