#pragma once

// Exact clique and independent-set counts.
//
// Conventions: the empty set is a clique and an independent set of every
// graph, so k_0 = i_0 = 1 and k_1 = i_1 = n; k(G) and i(G) include both.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ngclique/graph.hpp"
#include "ngclique/numeric.hpp"

namespace ngc {

/// k_t(G) for t = 0..n, plus their sum k(G).
struct CliqueProfile {
  std::vector<BigInt> by_size;
  BigInt total;

  /// Count of size-t members; zero when t exceeds n.
  BigInt at(int t) const {
    if (t < 0) throw std::invalid_argument("negative set size");
    return static_cast<std::size_t>(t) < by_size.size() ? by_size[static_cast<std::size_t>(t)] : BigInt(0);
  }

  bool operator==(const CliqueProfile&) const = default;
};

namespace detail {

// Splits on a max-degree vertex v of the candidate set P:
//   cliques(P) = cliques(P - v) + {v} x cliques(P & N(v)).
// Subproblems with at least kMemoMinSize candidates are memoized by their vertex mask.
class CliqueCounter {
public:
  static constexpr int kMemoMinSize = 10;

  explicit CliqueCounter(const Graph& g) : g_(g) {}

  std::vector<std::uint64_t> run() {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(g_.order()) + 1, 0);
    accumulate(g_.vertices().bits(), 0, out);
    return out;
  }

private:
  using Row = std::vector<std::uint64_t>;

  void accumulate(std::uint64_t p, std::size_t shift, std::span<std::uint64_t> out) {
    if (p == 0) {
      ++out[shift];
      return;
    }
    const int size = std::popcount(p);
    if (size >= kMemoMinSize) {
      const Row& row = memoized(p);
      for (std::size_t i = 0; i < row.size(); ++i) out[shift + i] += row[i];
      return;
    }
    const Vertex v = pivot(p);
    const std::uint64_t nb = g_.row(v) & p;
    if (max_degree_ == 0) {
      // P is independent.
      out[shift] += 1;
      out[shift + 1] += static_cast<std::uint64_t>(size);
      return;
    }
    accumulate(p & ~(std::uint64_t{1} << v), shift, out);
    accumulate(nb, shift + 1, out);
  }

  const Row& memoized(std::uint64_t p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    Row row(static_cast<std::size_t>(std::popcount(p)) + 1, 0);
    const Vertex v = pivot(p);
    const std::uint64_t nb = g_.row(v) & p;
    accumulate(p & ~(std::uint64_t{1} << v), 0, row);
    accumulate(nb, 1, row);
    return memo_.emplace(p, std::move(row)).first->second;
  }

  // Max-degree vertex of G[P], lowest index on ties; records the degree in max_degree_.
  Vertex pivot(std::uint64_t p) {
    Vertex best = std::countr_zero(p);
    int best_degree = -1;
    for (std::uint64_t rest = p; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const int d = std::popcount(g_.row(v) & p);
      if (d > best_degree) {
        best = v;
        best_degree = d;
      }
    }
    max_degree_ = best_degree;
    return best;
  }

  const Graph& g_;
  int max_degree_ = 0;
  std::unordered_map<std::uint64_t, Row> memo_;
};

inline CliqueProfile to_profile(const std::vector<std::uint64_t>& counts) {
  CliqueProfile out;
  out.by_size.reserve(counts.size());
  for (auto c : counts) {
    out.by_size.emplace_back(c);
    out.total += c;
  }
  return out;
}

}  // namespace detail

/// Fixed-width clique counts k_0..k_n (each fits 64 bits for n <= 62).
inline std::vector<std::uint64_t> clique_counts(const Graph& g) {
  return detail::CliqueCounter(g).run();
}

inline CliqueProfile clique_profile(const Graph& g) { return detail::to_profile(clique_counts(g)); }

inline CliqueProfile independent_profile(const Graph& g) { return clique_profile(g.complement()); }

/// Reference count by scanning all 2^n vertex subsets; n <= 24.
inline CliqueProfile clique_profile_by_scan(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw std::length_error("subset scan limited to n <= 24");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (is_clique(g, VertexSet(mask))) ++counts[static_cast<std::size_t>(std::popcount(mask))];
  return detail::to_profile(counts);
}

/// Both profiles of a graph, from which every Nordhaus-Gaddum quantity follows.
struct NordhausGaddumProfile {
  CliqueProfile cliques;       // k_t(G)
  CliqueProfile independents;  // i_t(G) = k_t(complement G)

  BigInt sigma() const { return cliques.total + independents.total; }
  BigInt pi() const { return cliques.total * independents.total; }
  BigInt sigma_t(int t) const { return cliques.at(t) + independents.at(t); }
  BigInt pi_t(int t) const { return cliques.at(t) * independents.at(t); }
};

inline NordhausGaddumProfile ng_profile(const Graph& g) {
  return {clique_profile(g), independent_profile(g)};
}

inline BigInt clique_count(const Graph& g) { return clique_profile(g).total; }
inline BigInt independent_count(const Graph& g) { return independent_profile(g).total; }

/// sigma(G) = k(G) + i(G).
inline BigInt sigma(const Graph& g) { return ng_profile(g).sigma(); }
/// pi(G) = k(G) * i(G).
inline BigInt pi(const Graph& g) { return ng_profile(g).pi(); }
inline BigInt sigma_t(const Graph& g, int t) { return ng_profile(g).sigma_t(t); }
inline BigInt pi_t(const Graph& g, int t) { return ng_profile(g).pi_t(t); }

/// Number of triangles, by popcount over edges.
inline std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::uint64_t above_u = g.row(u) & ~((std::uint64_t{2} << u) - 1);
    for (std::uint64_t rest = above_u; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const std::uint64_t above_v = ~((std::uint64_t{2} << v) - 1);
      count += static_cast<std::uint64_t>(std::popcount(g.row(u) & g.row(v) & above_v));
    }
  }
  return count;
}

}  // namespace ngc
