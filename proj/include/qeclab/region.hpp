#pragma once

// Rectangular (s, t) sampling of positive semidefiniteness for A_n(s, t),
// finite orders and the infinite case, with CSV and SVG renderings.

#include "qeclab/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeclab {

struct GridSpec {
  double s_min = -2.0;
  double s_max = 2.0;
  double t_min = -0.6;
  double t_max = 1.0;
  std::size_t s_steps = 401;  // sample points along s, including both ends
  std::size_t t_steps = 321;

  /// Throws std::invalid_argument on unordered bounds or bad step counts.
  void validate() const {
    auto axis = [](double lo, double hi, std::size_t steps, const char* name) {
      if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw std::invalid_argument(std::string("grid: ") + name + " range must be finite and ordered");
      if (lo == hi ? steps != 1 : steps < 2)
        throw std::invalid_argument(std::string("grid: ") + name +
                                    " needs at least 2 steps (exactly 1 for a degenerate range)");
    };
    axis(s_min, s_max, s_steps, "s");
    axis(t_min, t_max, t_steps, "t");
  }

  double s_at(std::size_t i) const {
    return s_steps == 1 ? s_min : s_min + (s_max - s_min) * static_cast<double>(i) / static_cast<double>(s_steps - 1);
  }
  double t_at(std::size_t j) const {
    return t_steps == 1 ? t_min : t_min + (t_max - t_min) * static_cast<double>(j) / static_cast<double>(t_steps - 1);
  }
};

struct RegionCell {
  double s = 0.0;
  double t = 0.0;
  std::vector<bool> finite;  // one entry per order in RegionGrid::orders
  bool infinite = false;
};

/// Cells in row-major order: t outer, s inner.
struct RegionGrid {
  GridSpec spec;
  std::vector<std::size_t> orders;
  std::vector<RegionCell> cells;

  const RegionCell& at(std::size_t s_index, std::size_t t_index) const {
    return cells[t_index * spec.s_steps + s_index];
  }
};

inline RegionGrid region_sample(const GridSpec& spec, std::vector<std::size_t> orders) {
  spec.validate();
  for (auto n : orders)
    if (n == 0) throw std::invalid_argument("region_sample: orders must be positive");
  RegionGrid grid{spec, std::move(orders), {}};
  grid.cells.reserve(spec.s_steps * spec.t_steps);
  for (std::size_t j = 0; j < spec.t_steps; ++j) {
    for (std::size_t i = 0; i < spec.s_steps; ++i) {
      RegionCell cell;
      cell.s = spec.s_at(i);
      cell.t = spec.t_at(j);
      cell.finite.reserve(grid.orders.size());
      for (auto n : grid.orders) cell.finite.push_back(is_psd_a({n, cell.s, cell.t}, PsdMethod::Criterion));
      cell.infinite = infinite_psd(cell.s, cell.t);
      grid.cells.push_back(std::move(cell));
    }
  }
  return grid;
}

namespace detail {

inline std::string format_sig(double x, int digits) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace detail

/// Header `s,t,psd_n<k>...,psd_inf`; floats with 9 significant digits,
/// verdicts as 0/1.
inline std::string region_csv(const RegionGrid& grid) {
  std::ostringstream os;
  os << "s,t";
  for (auto n : grid.orders) os << ",psd_n" << n;
  os << ",psd_inf\n";
  for (const auto& c : grid.cells) {
    os << detail::format_sig(c.s, 9) << ',' << detail::format_sig(c.t, 9);
    for (bool b : c.finite) os << ',' << (b ? 1 : 0);
    os << ',' << (c.infinite ? 1 : 0) << '\n';
  }
  return os.str();
}

/// Shaded infinite-order region with one boundary polyline per finite order.
/// A boundary point is the lowest psd sample in each s column.
inline std::string region_svg(const RegionGrid& grid) {
  const GridSpec& g = grid.spec;
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 480.0;
  constexpr double kMargin = 40.0;
  const double s_span = g.s_max > g.s_min ? g.s_max - g.s_min : 1.0;
  const double t_span = g.t_max > g.t_min ? g.t_max - g.t_min : 1.0;
  auto px = [&](double s) { return kMargin + (s - g.s_min) / s_span * (kWidth - 2 * kMargin); };
  auto py = [&](double t) { return kHeight - kMargin - (t - g.t_min) / t_span * (kHeight - 2 * kMargin); };
  auto fmt = [](double x) { return detail::format_sig(x, 6); };

  // Lowest t index per s column where `pred` holds, or none.
  auto column_floor = [&](auto pred) {
    std::vector<std::ptrdiff_t> floor(g.s_steps, -1);
    for (std::size_t i = 0; i < g.s_steps; ++i)
      for (std::size_t j = 0; j < g.t_steps; ++j)
        if (pred(grid.at(i, j))) {
          floor[i] = static_cast<std::ptrdiff_t>(j);
          break;
        }
    return floor;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  const auto inf_floor = column_floor([](const RegionCell& c) { return c.infinite; });
  os << "<path fill=\"#9ecae1\" stroke=\"none\" d=\"";
  for (std::size_t i = 0; i < g.s_steps; ++i) {
    if (inf_floor[i] < 0) continue;
    const double s = g.s_at(i);
    const double lo = g.t_at(static_cast<std::size_t>(inf_floor[i]));
    const double s_next = i + 1 < g.s_steps ? g.s_at(i + 1) : s;
    os << "M" << fmt(px(s)) << ',' << fmt(py(g.t_max)) << "L" << fmt(px(s_next)) << ',' << fmt(py(g.t_max)) << "L"
       << fmt(px(s_next)) << ',' << fmt(py(lo)) << "L" << fmt(px(s)) << ',' << fmt(py(lo)) << "Z";
  }
  os << "\"/>\n";

  static const char* kColors[] = {"#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  for (std::size_t k = 0; k < grid.orders.size(); ++k) {
    const auto floor = column_floor([k](const RegionCell& c) { return c.finite[k]; });
    os << "<polyline fill=\"none\" stroke=\"" << kColors[k % 7] << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < g.s_steps; ++i) {
      if (floor[i] < 0) continue;
      os << (first ? "" : " ") << fmt(px(g.s_at(i))) << ',' << fmt(py(g.t_at(static_cast<std::size_t>(floor[i]))));
      first = false;
    }
    os << "\"/>\n";
    os << "<text x=\"" << fmt(kWidth - kMargin - 60) << "\" y=\"" << fmt(kMargin + 14.0 * static_cast<double>(k + 1))
       << "\" font-size=\"12\" fill=\"" << kColors[k % 7] << "\">n=" << grid.orders[k] << "</text>\n";
  }

  // axes
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\""
     << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (g.s_min <= 0 && 0 <= g.s_max)
    os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << kMargin << "\" x2=\"" << fmt(px(0)) << "\" y2=\""
       << kHeight - kMargin << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  if (g.t_min <= 0 && 0 <= g.t_max)
    os << "<line x1=\"" << kMargin << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
       << fmt(py(0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" font-size=\"14\">s</text>\n";
  os << "<text x=\"10\" y=\"" << kHeight / 2 << "\" font-size=\"14\">t</text>\n";
  os << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" font-size=\"11\">" << fmt(g.s_min)
     << "</text>\n";
  os << "<text x=\"" << kWidth - kMargin - 20 << "\" y=\"" << kHeight - kMargin + 16 << "\" font-size=\"11\">"
     << fmt(g.s_max) << "</text>\n";
  os << "<text x=\"4\" y=\"" << kHeight - kMargin << "\" font-size=\"11\">" << fmt(g.t_min) << "</text>\n";
  os << "<text x=\"4\" y=\"" << kMargin + 4 << "\" font-size=\"11\">" << fmt(g.t_max) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace qeclab
