#pragma once

// Self-check suites over every identity the library implements. Each suite
// reports its worst deviation against a tolerance; exact suites count
// mismatches and always use tolerance 0.

#include "qeclab/graphs.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/matrices.hpp"
#include "qeclab/polynomials.hpp"
#include "qeclab/qec.hpp"
#include "qeclab/random.hpp"
#include "qeclab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qeclab {

struct SuiteResult {
  std::string name;
  std::string checks;
  bool exact = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  std::size_t n_max = 8;
  std::optional<double> tolerance;  // replaces every floating tolerance
  std::uint64_t seed = kDefaultSeed;
};

namespace detail {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace detail

inline std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
  const std::size_t n_max = std::max<std::size_t>(opt.n_max, 2);
  std::mt19937_64 rng(opt.seed);
  std::vector<SuiteResult> out;

  auto exact_suite = [&](std::string name, std::string checks, const std::function<double()>& body) {
    SuiteResult r{std::move(name), std::move(checks), true, body(), 0.0, false};
    r.passed = r.max_deviation == 0.0;
    out.push_back(std::move(r));
  };
  auto float_suite = [&](std::string name, std::string checks, double tol, const std::function<double()>& body) {
    SuiteResult r{std::move(name), std::move(checks), false, body(), opt.tolerance.value_or(tol), false};
    r.passed = r.max_deviation <= r.tolerance;
    out.push_back(std::move(r));
  };

  exact_suite("leading-coefficient", "deg S_n <= n and [t^n] S_n = a n - n + 1", [&] {
    double bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const Rational a = random_rational(rng, -3, 3);
      const Rational b = random_rational(rng, -3, 3);
      const auto seq = s_poly_sequence(a, b, n_max + 1);
      for (std::size_t n = 0; n <= n_max; ++n)
        if (seq[n].degree() > static_cast<long>(n) || seq[n].coeff(n) != leading_coefficient(a, n)) ++bad;
    }
    return bad;
  });

  exact_suite("binomial-sum-form", "recurrence S_n equals the binomial-sum form", [&] {
    double bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Rational a = random_rational(rng, -3, 3);
      const Rational b = random_rational(rng, -3, 3);
      const auto seq = s_poly_sequence(a, b, n_max + 1);
      for (std::size_t n = 1; n <= n_max; ++n)
        if (seq[n] != s_poly_binomial(a, b, n)) ++bad;
    }
    return bad;
  });

  exact_suite("w-polynomial-forms", "W_n binomial sum = S_n(2,1) and = S_n(1, t+1; t) pointwise", [&] {
    double bad = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const RationalPoly w = w_poly(n);
      if (w != s_poly(2, 1, n)) ++bad;
      for (int k = 0; k < 5; ++k) {
        const Rational t = random_rational(rng, -2, 2);
        if (w(t) != s_poly(1, t + 1, n)(t)) ++bad;
      }
    }
    return bad;
  });

  exact_suite("shifted-decomposition", "S_n(1, s+1) = S_n(1,1) + s S_{n-1}(2,1)", [&] {
    double bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Rational s = random_rational(rng, -3, 3);
      for (std::size_t n = 1; n <= n_max; ++n)
        if (s_poly(1, s + 1, n) != s_poly(1, 1, n) + s * s_poly(2, 1, n - 1)) ++bad;
    }
    return bad;
  });

  exact_suite("t2n-identity", "S_n(2,1) S_n(a,b) - S_{n-1}(2,1) S_{n+1}(a,b) = t^{2n}", [&] {
    double bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Rational a = random_rational(rng, -3, 3);
      const Rational b = random_rational(rng, -3, 3);
      for (std::size_t n = 1; n <= n_max; ++n)
        if (!check_t2n_identity(a, b, n)) ++bad;
    }
    return bad;
  });

  float_suite("closed-form-evaluation", "closed form of S_n(a,b;t) vs exact coefficients", 1e-9, [&] {
    double worst = 0;
    const double ts[] = {-2.0, -0.7, -0.3, -0.25 - 1e-6, -0.25, -0.25 + 1e-6, -0.1, 0.0, 0.4, 1.5};
    for (int trial = 0; trial < 5; ++trial) {
      const Rational a = random_rational(rng, -3, 3);
      const Rational b = random_rational(rng, -3, 3);
      for (std::size_t n = 0; n <= n_max; ++n) {
        const RationalPoly p = s_poly(a, b, n);
        for (double t : ts) {
          const double exact = to_double(p(from_double(t)));
          const double closed = s_eval_closed(to_double(a), to_double(b), n, t);
          worst = std::max(worst, std::abs(closed - exact) / std::max(1.0, p.abs_scale(t)));
        }
      }
    }
    return worst;
  });

  float_suite("special-case-roots", "product over closed-form roots reproduces S_n for the four (a,b)", 1e-9, [&] {
    double worst = 0;
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (auto c : {SpecialCase::TwoOne, SpecialCase::OneHalf, SpecialCase::OneOne, SpecialCase::ThreeOne}) {
      const auto [a, b] = special_case_params(c);
      for (std::size_t n = 1; n <= n_max; ++n) {
        const RationalPoly p = s_poly(a, b, n);
        for (int k = 0; k < 5; ++k) {
          const double t = unif(rng);
          const double exact = to_double(p(from_double(t)));
          worst = std::max(worst, std::abs(s_eval_factored(c, n, t) - exact) / std::max(std::abs(exact), 1e-300));
        }
        for (double r : s_roots_special(c, n)) worst = std::max(worst, std::abs(p.eval(r)) / p.abs_scale(r));
      }
    }
    return worst;
  });

  exact_suite("sign-pattern", "signs of W_{n-1}, W_n between consecutive thresholds", [&] {
    double bad = 0;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double lo = n == 1 ? -2.0 : t_threshold(n).value;
      const double mid = t_threshold(n + 1).value;
      for (int k = 0; k < 10; ++k) {
        const double t = k < 5 ? lo + (mid - lo) * (0.01 + 0.98 * unif(rng)) : mid + 1e-6 + 2.0 * unif(rng);
        const Rational tr = from_double(t);
        const auto sgn = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
        const SignPattern actual{sgn(w_poly(n - 1)(tr)), sgn(w_poly(n)(tr))};
        if (!(sign_pattern(n, t) == actual)) ++bad;
      }
    }
    return bad;
  });

  exact_suite("determinant-identity-exact", "det A_n(s,t) = S_n(1, s+1; t) in rationals", [&] {
    double bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Rational s = random_rational(rng, -3, 3);
      const Rational t = random_rational(rng, -3, 3);
      for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 12); ++n)
        if (lu_det(build_a<Rational>(n, s, t)) != det_a_exact(n, s, t)) ++bad;
    }
    return bad;
  });

  float_suite("determinant-identity-float", "det A_n(s,t) by elimination vs the recurrence", 1e-8, [&] {
    double worst = 0;
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
      const double s = unif(rng);
      const double t = unif(rng);
      for (std::size_t n = 1; n <= n_max; ++n) {
        const double exact = to_double(det_a_exact(n, from_double(s), from_double(t)));
        const double lu = lu_det(build_a<double>(n, s, t));
        worst = std::max(worst, std::abs(lu - exact) / std::max(std::abs(exact), 1e-300));
      }
    }
    return worst;
  });

  float_suite("threshold-lines", "psd thresholds along s=t, s=-1/2, s=0, s=2t", 1e-9, [&] {
    double worst = 0;
    for (auto line : {ThresholdLine::SEqualsT, ThresholdLine::SMinusHalf, ThresholdLine::SZero, ThresholdLine::STwiceT})
      for (std::size_t n = 1; n <= n_max; ++n) {
        const double bound = psd_threshold_t(n, line);
        worst = std::max(worst, std::abs(psd_threshold_bisection(n, line) - bound));
        const bool below = is_psd_a(on_line(line, n, bound - 5e-8));
        const bool above = is_psd_a(on_line(line, n, bound + 5e-8));
        if (below || !above) worst = std::max(worst, 1.0);
      }
    return worst;
  });

  exact_suite("infinite-region", "A_n psd inside the infinite region; criterion failures confirmed by eigenvalues",
              [&] {
                double bad = 0;
                std::uniform_real_distribution<double> us(-2.0, 2.0);
                std::uniform_real_distribution<double> ut(-0.6, 1.0);
                for (int k = 0; k < 40; ++k) {
                  const double s = us(rng);
                  const double t = ut(rng);
                  const bool inside = infinite_psd(s, t);
                  for (std::size_t n = 1; n <= n_max; ++n) {
                    const bool criterion = is_psd_a({n, s, t});
                    if (inside && !criterion) ++bad;
                    if (!criterion) {
                      const auto m = build_a({n, s, t});
                      if (psd_verdict(m).min_eigenvalue >= 0) ++bad;
                    }
                  }
                }
                return bad;
              });

  float_suite("path-qec-agreement", "eigen QEC(P_n), bisection QEC(P_n) and -1/(1+cos(pi/n))", 1e-8, [&] {
    double worst = 0;
    for (std::size_t n = 2; n <= n_max; ++n) {
      const double closed = qec_path_closed(n);
      worst = std::max(worst, std::abs(qec_numeric(path_graph(n)).value - closed));
      worst = std::max(worst, std::abs(qec_path_bisection(n) - closed));
    }
    return worst;
  });

  float_suite("lambda2-dichotomy", "lambda_2(P_n) = QEC for even n; lambda_2 < QEC (gap > 1e-10) for odd n", 1e-8,
              [&] {
                double worst = 0;
                for (std::size_t n = 2; n <= n_max; ++n) {
                  const auto top = top_eigenvalues(distance_matrix(path_graph(n)));
                  const double q = qec_path_closed(n);
                  if (n % 2 == 0)
                    worst = std::max(worst, std::abs(top.lambda2 - q));
                  else if (q - top.lambda2 <= 1e-10)
                    worst = std::max(worst, 1.0);
                }
                return worst;
              });

  float_suite("theta-star", "-1/(1 - cos theta*) = lambda_2(P_n) for odd n", 1e-8, [&] {
    double worst = 0;
    for (std::size_t n = 3; n <= n_max; n += 2) {
      const double th = theta_star(n).value;
      const auto top = top_eigenvalues(distance_matrix(path_graph(n)));
      worst = std::max(worst, std::abs(-1.0 / (1.0 - std::cos(th)) - top.lambda2));
      const double nd = static_cast<double>(n);
      worst = std::max(worst, std::abs(std::tan(th / 2.0) * std::tan(nd * th / 2.0) + 1.0 / nd));
    }
    return worst;
  });

  float_suite("extremal-vector-sums", "sum x = 0, sum x^2 = n/2, sum |i-j| x_i x_j = QEC(P_n) n/2", 1e-10, [&] {
    double worst = 0;
    for (std::size_t n = 2; n <= n_max; ++n) worst = std::max(worst, verify_extremal_sums(n).max_deviation);
    return worst;
  });

  exact_suite("qec-limit", "QEC(P_n) strictly increasing and at most -1/2", [&] {
    double bad = 0;
    const auto seq = qec_limit_check(n_max);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] > -0.5) ++bad;
      if (i > 0 && !(seq[i] > seq[i - 1])) ++bad;
    }
    return bad;
  });

  float_suite("real-rooted-determinant", "roots of S_n(1, s+1; .) from eigenvalues of A_n(s, 0)", 1e-8, [&] {
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const Rational s = random_rational(rng, -3, 3);
      for (std::size_t n = 1; n <= n_max; ++n) {
        const auto eig = sym_eigenvalues(build_a<double>(n, to_double(s), 0.0));
        const RationalPoly p = s_poly(1, s + 1, n);
        for (double mu : eig) worst = std::max(worst, std::abs(p.eval(-mu)) / p.abs_scale(-mu));
      }
    }
    return worst;
  });

  return out;
}

}  // namespace qeclab
