#pragma once

// Finite simple graphs on vertices 1..n, edge-list parsing, generators and
// BFS distance matrices.

#include "qeclab/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeclab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph(std::size_t u, std::size_t v)
      : std::runtime_error("graph is disconnected: no walk between vertices " + std::to_string(u) + " and " +
                           std::to_string(v)),
        u_(u),
        v_(v) {}
  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// Simple undirected graph. Vertices are 1..n; edges are stored as (u, v)
/// with u < v.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Graph(std::size_t n = 0) : n_(n), adjacency_(n + 1) {}

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_)
      throw std::invalid_argument("vertex out of range 1.." + std::to_string(n_));
    if (u > v) std::swap(u, v);
    if (edges_.insert({u, v}).second) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Edge list: one `u v` pair of positive integers per line; blank lines and
/// lines starting with `#` are skipped. n is the largest label seen.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> pairs;
  std::size_t n = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex labels, got " + std::to_string(tokens.size()));
    std::size_t uv[2];
    for (int k = 0; k < 2; ++k) {
      const auto tok = tokens[static_cast<std::size_t>(k)];
      if (!tok.empty() && tok.front() == '-') throw ParseError(line_no, "vertex label must be >= 1");
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "malformed vertex label '" + std::string(tok) + "'");
      if (value < 1) throw ParseError(line_no, "vertex label must be >= 1");
      uv[k] = static_cast<std::size_t>(value);
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(uv[0]));
    n = std::max({n, uv[0], uv[1]});
    pairs.emplace_back(uv[0], uv[1]);
    if (end == text.size()) break;
  }
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_graph: n must be at least 1");
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  Graph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete_graph: n must be at least 1");
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

/// Star K_{1,n-1} centred at vertex 1.
inline Graph star_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star_graph: n must be at least 1");
  Graph g(n);
  for (std::size_t v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

/// Generator spec `kind:n`, kind in {path, cycle, complete, star}.
inline Graph generate_graph(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("generator spec must look like kind:n");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view count = spec.substr(colon + 1);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size() || count.empty())
    throw std::invalid_argument("generator spec: bad vertex count '" + std::string(count) + "'");
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "complete") return complete_graph(n);
  if (kind == "star") return star_graph(n);
  throw std::invalid_argument("generator spec: unknown kind '" + std::string(kind) + "'");
}

namespace detail {

inline constexpr int kUnreached = -1;

inline std::vector<int> bfs_levels(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count() + 1, kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] != kUnreached) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto d = detail::bfs_levels(g, 1);
  return std::none_of(d.begin() + 1, d.end(), [](int x) { return x == detail::kUnreached; });
}

/// True iff g is (isomorphic to) the path P_n.
inline bool is_path(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n || !is_connected(g)) return false;
  for (std::size_t v = 1; v <= n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

/// Graph distances d(x, y); 0-indexed storage of the 1-indexed vertices.
/// Symmetric, zero diagonal, positive off the diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(SymMatrix<int> d) : d_(std::move(d)) {}

  std::size_t size() const { return d_.size(); }
  /// Distance between 1-indexed vertices.
  int operator()(std::size_t x, std::size_t y) const { return d_(x - 1, y - 1); }
  const SymMatrix<int>& entries() const { return d_; }
  SymMatrix<double> to_real() const {
    return d_.map<double>([](int x) { return static_cast<double>(x); });
  }
  int diameter() const {
    int m = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m = std::max(m, d_(i, j));
    return m;
  }

 private:
  SymMatrix<int> d_;
};

/// BFS from every vertex. Throws DisconnectedGraph naming an unreachable pair.
inline DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("distance_matrix: empty graph");
  const auto from_first = detail::bfs_levels(g, 1);
  for (std::size_t v = 2; v <= n; ++v)
    if (from_first[v] == detail::kUnreached) throw DisconnectedGraph(1, v);
  SymMatrix<int> d(n);
  for (std::size_t u = 1; u <= n; ++u) {
    const auto levels = u == 1 ? from_first : detail::bfs_levels(g, u);
    for (std::size_t v = u + 1; v <= n; ++v) d.set(u - 1, v - 1, levels[v]);
  }
  return DistanceMatrix(std::move(d));
}

}  // namespace qeclab
