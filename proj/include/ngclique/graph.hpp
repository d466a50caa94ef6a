#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ngc {

/// Largest vertex count a Graph can hold; a vertex set fits one 64-bit word.
inline constexpr int kMaxVertices = 62;

using Vertex = int;

/// Subset of {0, ..., n-1} stored as a bit mask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Iterates members in increasing order.
  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most kMaxVertices vertices, one adjacency bit-row per vertex.
///
/// Rows are kept symmetric and loop-free by every mutator, so a Graph is always valid.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must lie in [0, 62], got " + std::to_string(n));
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.rows_[v] = VertexSet::range(n).without(VertexSet::single(v)).bits();
    return g;
  }
  static Graph empty(int n) { return Graph(n); }
  static Graph path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
  void set_edge(Vertex u, Vertex v, bool present) {
    if (present) add_edge(u, v);
    else remove_edge(u, v);
  }

  Graph complement() const {
    Graph out(n_);
    const std::uint64_t all = VertexSet::range(n_).bits();
    for (Vertex v = 0; v < n_; ++v) out.rows_[v] = ~rows_[v] & all & ~(std::uint64_t{1} << v);
    return out;
  }

  /// Subgraph induced by `s`, relabelled 0..|s|-1 in increasing vertex order.
  Graph induced(VertexSet s) const {
    const auto keep = s.to_vector();
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph out(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.add_edge(perm[u], perm[v]);
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
  }

private:
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

inline Graph complement(const Graph& g) { return g.complement(); }

/// True iff every pair in `s` is adjacent; the empty set and singletons are cliques.
inline bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!s.without(VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

/// True iff no pair in `s` is adjacent.
inline bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

/// Number of vertex pairs, i.e. edge slots of K_n.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Edge slots of K_n in graph6 order: (0,1), (0,2), (1,2), (0,3), ... (column-major upper triangle).
inline std::vector<std::pair<Vertex, Vertex>> edge_slots(int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(pair_count(n)));
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

/// Graph whose edge set is bit k of `mask` for edge slot k (see edge_slots); n <= 11.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) g.add_edge(i, j);
  return g;
}

}  // namespace ngc
