// qeclab command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 computation failure.

#include "qeclab/qeclab.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<double> tol;
  double bisect_tol = 1e-12;
  qeclab::GridSpec grid;
  std::vector<std::size_t> orders{1, 2, 3, 5, 10};
  std::string out;
  std::string format;
};

// Writes next to the target and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << contents;
    if (!os.flush()) throw std::runtime_error("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path);
  }
}

void emit(const Config& cfg, const std::string& contents) {
  if (cfg.out.empty() || cfg.out == "-")
    std::cout << contents;
  else
    write_atomically(cfg.out, contents);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

qeclab::GridSpec parse_grid(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--grid: '" + item + "' is not a number");
    }
  }
  if (v.size() != 5 && v.size() != 6) throw UsageError("--grid expects smin,smax,tmin,tmax,steps[,tsteps]");
  auto count = [](double x) {
    if (x < 1 || x != static_cast<double>(static_cast<std::size_t>(x))) throw UsageError("--grid: steps must be a positive integer");
    return static_cast<std::size_t>(x);
  };
  qeclab::GridSpec g{v[0], v[1], v[2], v[3], count(v[4]), count(v.size() == 6 ? v[5] : v[4])};
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

int cmd_qec(const Config& cfg, const std::string& generator, const std::string& file) {
  qeclab::Graph g;
  std::string id;
  if (!generator.empty()) {
    try {
      g = qeclab::generate_graph(generator);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    id = generator;
  } else {
    g = qeclab::parse_edge_list(read_file(file));
    id = file;
  }
  const auto report = qeclab::make_report(g, id, cfg.tol.value_or(cfg.bisect_tol));
  if (cfg.format == "csv")
    emit(cfg, std::string(qeclab::kReportCsvHeader) + "\n" + qeclab::render_csv_row(report) + "\n");
  else
    emit(cfg, qeclab::render_text(report));
  return kExitOk;
}

int cmd_table(const Config& cfg, std::size_t n_min, std::size_t n_max) {
  if (n_min < 2 || n_min > n_max) throw UsageError("table: need 2 <= n-min <= n-max");
  emit(cfg, qeclab::path_table_csv(n_min, n_max, cfg.tol.value_or(cfg.bisect_tol)));
  return kExitOk;
}

int cmd_region(const Config& cfg) {
  const auto grid = qeclab::region_sample(cfg.grid, cfg.orders);
  const std::string base = cfg.out.empty() ? "region" : cfg.out;
  const bool csv = cfg.format.empty() || cfg.format == "csv";
  const bool svg = cfg.format.empty() || cfg.format == "svg";
  if (csv) write_atomically(base + ".csv", qeclab::region_csv(grid));
  if (svg) write_atomically(base + ".svg", qeclab::region_svg(grid));
  std::cout << "region: " << grid.cells.size() << " cells";
  if (csv) std::cout << ", wrote " << base << ".csv";
  if (svg) std::cout << ", wrote " << base << ".svg";
  std::cout << '\n';
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::size_t n_max) {
  if (n_max < 2) throw UsageError("verify: n-max must be at least 2");
  qeclab::VerifyOptions opt;
  opt.n_max = n_max;
  opt.tolerance = cfg.tol;
  opt.seed = qeclab::seed_from_env();
  const auto results = qeclab::run_verification(opt);
  std::ostringstream os;
  bool all = true;
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-4s %-28s max_dev=%-12.3g tol=%-8.3g %s\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.max_deviation, r.tolerance, r.checks.c_str());
    os << line;
    all = all && r.passed;
  }
  os << (all ? "all suites passed" : "FAILED:");
  for (const auto& r : results)
    if (!r.passed) os << ' ' << r.name;
  os << '\n';
  emit(cfg, os.str());
  return all ? kExitOk : kExitFailure;
}

int cmd_poly(const Config& cfg, const std::string& a_text, const std::string& b_text, std::size_t n,
             const std::string& t_text, bool roots) {
  qeclab::Rational a;
  qeclab::Rational b;
  try {
    a = qeclab::parse_rational(a_text);
    b = qeclab::parse_rational(b_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto p = qeclab::s_poly(a, b, n);
  std::ostringstream os;
  os << "S_" << n << "(" << qeclab::to_string(a) << "," << qeclab::to_string(b) << ";t) = " << p.to_string() << '\n';
  os << "coefficients:";
  for (const auto& c : p.coeffs()) os << ' ' << qeclab::to_string(c);
  os << '\n';
  if (!t_text.empty()) {
    qeclab::Rational t;
    try {
      t = qeclab::parse_rational(t_text);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    const auto v = p(t);
    os << "value at t=" << qeclab::to_string(t) << ": " << qeclab::to_string(v) << " ("
       << qeclab::detail::sig12(qeclab::to_double(v)) << ")\n";
  }
  if (roots) {
    const auto sc = qeclab::special_case_of(a, b);
    if (!sc) throw UsageError("--roots: closed-form roots exist only for (a,b) in {(2,1),(1,1/2),(1,1),(3,1)}");
    if (n == 0) throw UsageError("--roots: n must be at least 1");
    os << "roots:";
    for (double r : qeclab::s_roots_special(*sc, n)) os << ' ' << qeclab::detail::sig12(r);
    os << '\n';
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_matrix(const Config& cfg, const std::string& n_text, const std::string& s_text, const std::string& t_text) {
  qeclab::Rational s;
  qeclab::Rational t;
  try {
    s = qeclab::parse_rational(s_text);
    t = qeclab::parse_rational(t_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const double sd = qeclab::to_double(s);
  const double td = qeclab::to_double(t);
  std::ostringstream os;
  if (n_text == "inf" || n_text == "infinity") {
    os << "n: infinity\ns: " << qeclab::to_string(s) << "\nt: " << qeclab::to_string(t) << '\n';
    os << "psd: " << (qeclab::infinite_psd(sd, td) ? "true" : "false") << '\n';
    emit(cfg, os.str());
    return kExitOk;
  }
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(n_text, &used);
    if (used != n_text.size() || v < 1) throw std::invalid_argument(n_text);
    n = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("--n must be a positive integer or 'inf'");
  }
  const auto m = qeclab::build_a<double>(n, sd, td);
  const auto verdict = qeclab::psd_verdict(m, cfg.tol);
  os << "n: " << n << "\ns: " << qeclab::to_string(s) << "\nt: " << qeclab::to_string(t) << '\n';
  if (n <= 12) os << "matrix:\n" << qeclab::to_string(m);
  os << "det_exact: " << qeclab::to_string(qeclab::det_a_exact(n, s, t)) << '\n';
  os << "det: " << qeclab::detail::sig12(qeclab::det_a({n, sd, td})) << '\n';
  os << "det_elimination: " << qeclab::detail::sig12(qeclab::lu_det(m)) << '\n';
  os << "threshold_t_n: " << qeclab::detail::sig12(qeclab::t_threshold(n).value) << '\n';
  os << "psd_criterion: " << (qeclab::is_psd_a({n, sd, td}, qeclab::PsdMethod::Criterion) ? "true" : "false") << '\n';
  os << "psd_eigen: " << (verdict.psd ? "true" : "false") << '\n';
  os << "min_eigenvalue: " << qeclab::detail::sig12(verdict.min_eigenvalue) << '\n';
  os << "eigen_tolerance: " << qeclab::detail::sig12(verdict.tolerance) << '\n';
  emit(cfg, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qeclab: quadratic embedding constants and the A_n(s,t) / S_n(a,b;t) families"};
  app.require_subcommand(1);
  Config cfg;
  std::string grid_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output path ('-' or omitted: stdout)");
  };

  auto* qec = app.add_subcommand("qec", "Quadratic embedding constant of a graph");
  std::string generator;
  std::string file;
  auto* gen_opt = qec->add_option("generator", generator, "Generator spec kind:n (path, cycle, complete, star)");
  auto* file_opt = qec->add_option("--file", file, "Edge-list file")->check(CLI::ExistingFile);
  gen_opt->excludes(file_opt);
  file_opt->excludes(gen_opt);
  qec->add_option("--tol", cfg.tol, "Bisection tolerance for path graphs")->check(CLI::PositiveNumber);
  qec->add_option("--format", cfg.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  add_common(qec);

  auto* table = app.add_subcommand("table", "CSV table of path-graph reports");
  std::size_t n_min = 2;
  std::size_t n_max = 16;
  table->add_option("--n-min", n_min, "Smallest path order")->capture_default_str();
  table->add_option("--n-max", n_max, "Largest path order")->capture_default_str();
  table->add_option("--tol", cfg.tol, "Bisection tolerance")->check(CLI::PositiveNumber);
  table->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv"}));
  add_common(table);

  auto* region = app.add_subcommand("region", "Sample the psd region of A_n(s,t) on a grid (CSV and SVG)");
  region->add_option("--grid", grid_text, "smin,smax,tmin,tmax,steps[,tsteps]");
  region->add_option("--orders", cfg.orders, "Finite orders n to sample")->delimiter(',')->capture_default_str();
  region->add_option("--format", cfg.format, "csv or svg (default: both)")->check(CLI::IsMember({"csv", "svg"}));
  region->add_option("--out", cfg.out, "Output path prefix (default: region)");

  auto* verify = app.add_subcommand("verify", "Run every self-check suite");
  std::size_t verify_n = 8;
  verify->add_option("--n-max", verify_n, "Largest order checked")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "Replace every floating tolerance")->check(CLI::NonNegativeNumber);
  add_common(verify);

  auto* poly = app.add_subcommand("poly", "Print S_n(a,b;t), optionally evaluate it or list its roots");
  std::string a_text = "2";
  std::string b_text = "1";
  std::size_t poly_n = 0;
  std::string poly_t;
  bool roots = false;
  poly->add_option("--a", a_text, "a (rational, e.g. 1/2)")->capture_default_str();
  poly->add_option("--b", b_text, "b (rational)")->capture_default_str();
  poly->add_option("--n", poly_n, "Degree index n")->required();
  poly->add_option("--t", poly_t, "Evaluate exactly at this rational t");
  poly->add_flag("--roots", roots, "Closed-form roots (special (a,b) only)");
  add_common(poly);

  auto* matrix = app.add_subcommand("matrix", "Determinant and psd status of A_n(s,t)");
  std::string mat_n;
  std::string mat_s;
  std::string mat_t;
  matrix->add_option("--n", mat_n, "Order (positive integer or inf)")->required();
  matrix->add_option("--s", mat_s, "s (rational)")->required();
  matrix->add_option("--t", mat_t, "t (rational)")->required();
  matrix->add_option("--tol", cfg.tol, "Eigenvalue tolerance for the psd test")->check(CLI::NonNegativeNumber);
  add_common(matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*qec) {
      if (generator.empty() && file.empty()) throw UsageError("qec: give a generator spec or --file");
      return cmd_qec(cfg, generator, file);
    }
    if (*table) return cmd_table(cfg, n_min, n_max);
    if (*region) {
      if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
      return cmd_region(cfg);
    }
    if (*verify) return cmd_verify(cfg, verify_n);
    if (*poly) return cmd_poly(cfg, a_text, b_text, poly_n, poly_t, roots);
    if (*matrix) return cmd_matrix(cfg, mat_n, mat_s, mat_t);
  } catch (const UsageError& e) {
    std::cerr << "qeclab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qeclab: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
