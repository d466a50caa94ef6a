#pragma once

// Compression G_{x->y}: move x's private neighbors over to y.
//
// Compression never decreases i(G) or i(complement G), and the same holds
// size by size. Repeating it until every pair has nested neighborhoods ends
// in a threshold graph.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngclique/graph.hpp"

namespace ngc {

/// The four-way split of V \ {x, y} by adjacency to x and y.
struct NeighborhoodPartition {
  VertexSet private_x;  // ~x, not ~y
  VertexSet private_y;  // ~y, not ~x
  VertexSet common;     // ~x and ~y
  VertexSet outside;    // neither

  bool operator==(const NeighborhoodPartition&) const = default;
};

namespace detail {
inline void check_pivot_pair(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::out_of_range("compression vertex out of range");
  if (x == y) throw std::invalid_argument("compression needs two distinct vertices, got x = y = " + std::to_string(x));
}
}  // namespace detail

inline NeighborhoodPartition partition(const Graph& g, Vertex x, Vertex y) {
  detail::check_pivot_pair(g, x, y);
  const VertexSet rest = g.vertices().without(VertexSet{x, y});
  const VertexSet nx = g.neighbors(x) & rest;
  const VertexSet ny = g.neighbors(y) & rest;
  return {nx.without(ny), ny.without(nx), nx & ny, rest.without(nx | ny)};
}

/// G_{x->y}. The edge xy and all edges away from {x, y} are untouched.
inline Graph compress(const Graph& g, Vertex x, Vertex y) {
  const auto parts = partition(g, x, y);
  Graph out = g;
  for (Vertex v : parts.private_x) {
    out.remove_edge(x, v);
    out.add_edge(y, v);
  }
  return out;
}

/// One applied compression, source -> target.
struct Pivot {
  Vertex source;
  Vertex target;
  bool operator==(const Pivot&) const = default;
};

struct CompressionTrace {
  Graph result;
  std::vector<Pivot> pivots;
};

/// Lexicographically first pair {u, v} whose private neighborhoods are both
/// non-empty, oriented so the target has degree >= source (lower index wins
/// ties). Returns false when no such pair exists, i.e. g is threshold.
inline bool next_pivot(const Graph& g, Pivot& pivot) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const VertexSet rest = g.vertices().without(VertexSet{u, v});
      const VertexSet nu = g.neighbors(u) & rest;
      const VertexSet nv = g.neighbors(v) & rest;
      if (nu.without(nv).empty() || nv.without(nu).empty()) continue;
      if (g.degree(v) > g.degree(u)) pivot = {u, v};
      else pivot = {v, u};
      return true;
    }
  }
  return false;
}

/// sum of squared degrees; strictly increases with every pivot chosen by next_pivot.
inline std::uint64_t degree_square_sum(const Graph& g) {
  std::uint64_t s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += static_cast<std::uint64_t>(g.degree(v)) * static_cast<std::uint64_t>(g.degree(v));
  return s;
}

inline CompressionTrace compress_to_threshold(const Graph& g) {
  CompressionTrace trace{g, {}};
  Pivot pivot{};
  while (next_pivot(trace.result, pivot)) {
    trace.result = compress(trace.result, pivot.source, pivot.target);
    trace.pivots.push_back(pivot);
  }
  return trace;
}

/// Re-applies a pivot list; used to audit traces.
inline Graph replay(const Graph& g, const std::vector<Pivot>& pivots) {
  Graph out = g;
  for (const auto& p : pivots) out = compress(out, p.source, p.target);
  return out;
}

}  // namespace ngc
