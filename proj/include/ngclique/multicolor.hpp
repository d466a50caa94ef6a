#pragma once

// r-colorings of K_n (total or partial) as families of edge-disjoint graphs:
// good-sequence certificates, product/sum of clique counts, covering tuples,
// and the tournament construction.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngclique/counting.hpp"
#include "ngclique/graph.hpp"
#include "ngclique/numeric.hpp"

namespace ngc {

/// r pairwise edge-disjoint graphs on one vertex set; colors are 0-based internally.
class GraphFamily {
public:
  GraphFamily(int n, int r) : n_(n), members_(static_cast<std::size_t>(r), Graph(n)) {
    if (r < 1) throw std::invalid_argument("a family needs at least one color");
  }

  explicit GraphFamily(std::vector<Graph> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("a family needs at least one color");
    n_ = members_.front().order();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].order() != n_) throw std::invalid_argument("family members differ in order");
      for (std::size_t j = 0; j < i; ++j)
        for (Vertex v = 0; v < n_; ++v)
          if ((members_[i].row(v) & members_[j].row(v)) != 0)
            throw std::invalid_argument("family members " + std::to_string(j) + " and " + std::to_string(i) +
                                        " share an edge at vertex " + std::to_string(v));
    }
  }

  /// One color per edge slot in graph6 order (see edge_slots); 0 = uncolored, 1..r = color.
  static GraphFamily from_slot_colors(int n, int r, const std::vector<int>& slot_colors) {
    if (static_cast<int>(slot_colors.size()) != pair_count(n)) throw std::invalid_argument("slot color count mismatch");
    GraphFamily fam(n, r);
    const auto slots = edge_slots(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slot_colors[k] != 0) fam.color_edge(slots[k].first, slots[k].second, slot_colors[k] - 1);
    return fam;
  }

  int order() const { return n_; }
  int colors() const { return static_cast<int>(members_.size()); }
  const Graph& member(int c) const { return members_.at(static_cast<std::size_t>(c)); }
  const std::vector<Graph>& members() const { return members_; }

  /// Colors uv with c (0-based); rejects an edge that already has a color.
  void color_edge(Vertex u, Vertex v, int c) {
    if (c < 0 || c >= colors()) throw std::out_of_range("color out of range");
    if (color_of(u, v)) throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " already colored");
    members_[static_cast<std::size_t>(c)].add_edge(u, v);
  }

  std::optional<int> color_of(Vertex u, Vertex v) const {
    for (std::size_t c = 0; c < members_.size(); ++c)
      if (members_[c].adjacent(u, v)) return static_cast<int>(c);
    return std::nullopt;
  }

  /// Neighbors of v in color c.
  VertexSet neighbors(Vertex v, int c) const { return member(c).neighbors(v); }

  bool covers_all_edges() const {
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t seen = 0;
      for (const auto& g : members_) seen |= g.row(v);
      if (seen != VertexSet::range(n_).without(VertexSet::single(v)).bits()) return false;
    }
    return true;
  }

  /// 0 = uncolored, else 1-based color, per edge slot.
  std::vector<int> slot_colors() const {
    std::vector<int> out;
    for (auto [u, v] : edge_slots(n_)) out.push_back(color_of(u, v).value_or(-1) + 1);
    return out;
  }

private:
  int n_ = 0;
  std::vector<Graph> members_;
};

/// Largest m with r^m <= n (integer arithmetic); r >= 2, n >= 1.
inline int log_floor(int n, int r) {
  if (r < 2 || n < 1) throw std::invalid_argument("log_floor needs r >= 2 and n >= 1");
  int m = 0;
  long long power = r;
  while (power <= n) {
    ++m;
    power *= r;
  }
  return m;
}

/// a_1 = n, a_{k+1} = ceil((a_k - 1) / r), for k = 1..q.
inline std::vector<int> good_sequence_recursion(int n, int r, int q) {
  std::vector<int> a;
  if (q <= 0) return a;
  a.push_back(n);
  while (static_cast<int>(a.size()) < q) {
    const int prev = a.back();
    a.push_back(prev <= 1 ? 0 : (prev - 1 + r - 1) / r);
  }
  return a;
}

/// Product of the first q recursion values: the lower side of |X(G,q)|.
inline BigInt good_sequence_lower_bound(int n, int r, int q) {
  BigInt out = 1;
  for (int v : good_sequence_recursion(n, r, q)) out *= v;
  return out;
}

struct GoodSequenceCertificate {
  std::vector<Vertex> vertices;  // v_1..v_q
  std::vector<int> colors;       // C_1..C_{q-1}, 0-based
  std::vector<int> a_seq;        // a_1..a_q
  Rational bound;                // prod a_i / q!
};

/// Greedy nested monochromatic neighborhoods: take the lowest-index candidate,
/// keep the color class of its neighborhood that is largest (lowest color on
/// ties). Needs a total coloring; q defaults to floor(log_r n).
inline GoodSequenceCertificate good_sequence_certificate(const GraphFamily& fam, std::optional<int> length = {}) {
  const int n = fam.order(), r = fam.colors();
  if (r < 2) throw std::invalid_argument("good-sequence certificates need r >= 2");
  if (!fam.covers_all_edges()) throw std::invalid_argument("good-sequence certificates need a total coloring");
  const int q = length.value_or(log_floor(n, r));
  if (q < 0) throw std::invalid_argument("negative certificate length");

  GoodSequenceCertificate cert;
  cert.a_seq = good_sequence_recursion(n, r, q);
  if (std::find(cert.a_seq.begin(), cert.a_seq.end(), 0) != cert.a_seq.end())
    throw std::invalid_argument("certificate length " + std::to_string(q) + " exceeds what n = " + std::to_string(n) +
                                " guarantees");
  VertexSet candidates = VertexSet::range(n);
  for (int k = 0; k < q; ++k) {
    const Vertex v = candidates.front();
    cert.vertices.push_back(v);
    candidates.erase(v);
    if (k + 1 == q) break;
    int best_color = 0, best_size = -1;
    for (int c = 0; c < r; ++c) {
      const int size = (fam.neighbors(v, c) & candidates).size();
      if (size > best_size) {
        best_color = c;
        best_size = size;
      }
    }
    cert.colors.push_back(best_color);
    candidates &= fam.neighbors(v, best_color);
  }
  BigInt product = 1;
  for (int v : cert.a_seq) product *= v;
  cert.bound = Rational(product, factorial(q));
  return cert;
}

/// Re-checks a certificate from scratch: distinct vertices, the nesting
/// property, the recursion values and the stated bound.
inline bool verify_certificate(const GraphFamily& fam, const GoodSequenceCertificate& cert) {
  const int q = static_cast<int>(cert.vertices.size());
  if (q > 0 && static_cast<int>(cert.colors.size()) != q - 1) return false;
  VertexSet seen;
  for (Vertex v : cert.vertices) {
    if (v < 0 || v >= fam.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i + 1 < q; ++i) {
    const int c = cert.colors[static_cast<std::size_t>(i)];
    if (c < 0 || c >= fam.colors()) return false;
    for (int j = i + 1; j < q; ++j)
      if (!fam.member(c).adjacent(cert.vertices[static_cast<std::size_t>(i)], cert.vertices[static_cast<std::size_t>(j)])) return false;
  }
  if (cert.a_seq != good_sequence_recursion(fam.order(), fam.colors(), q)) return false;
  BigInt product = 1;
  for (int v : cert.a_seq) product *= v;
  return cert.bound == Rational(product, factorial(q));
}

/// Largest n for which count_good_sequences runs.
inline constexpr int kMaxGoodSequenceOrder = 10;

/// |X(G, q)|: ordered sequences of q distinct vertices in which every vertex
/// sees all later ones in a single color. Brute force, n <= 10.
inline std::uint64_t count_good_sequences(const GraphFamily& fam, int q) {
  const int n = fam.order();
  if (n > kMaxGoodSequenceOrder) throw std::length_error("count_good_sequences limited to n <= 10");
  if (q < 0) throw std::invalid_argument("negative sequence length");
  if (q == 0) return 1;
  std::vector<Vertex> seq;
  std::uint64_t count = 0;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == q) {
      ++count;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 <= seq.size() && ok; ++i) {
        const auto cw = fam.color_of(seq[i], w);
        // C_i is fixed by the successor v_{i+1}; the first successor picks it.
        const auto ci = i + 1 < seq.size() ? fam.color_of(seq[i], seq[i + 1]) : cw;
        ok = cw.has_value() && cw == ci;
      }
      if (!ok) continue;
      seq.push_back(w);
      self(self);
      seq.pop_back();
    }
  };
  extend(extend);
  return count;
}

inline std::vector<BigInt> member_clique_counts(const GraphFamily& fam) {
  std::vector<BigInt> out;
  for (const auto& g : fam.members()) out.push_back(clique_count(g));
  return out;
}

/// prod_i k(G_i).
inline BigInt product_clique_counts(const GraphFamily& fam) {
  BigInt out = 1;
  for (const auto& k : member_clique_counts(fam)) out *= k;
  return out;
}

/// sum_i k(G_i).
inline BigInt sum_clique_counts(const GraphFamily& fam) {
  BigInt out = 0;
  for (const auto& k : member_clique_counts(fam)) out += k;
  return out;
}

/// (r-1)(n+1) + 2^n: the most sum_i k(G_i) can be over total r-colorings.
inline BigInt multicolor_sum_bound(int n, int r) {
  return BigInt(r - 1) * (n + 1) + (BigInt(1) << n);
}

/// (4r-2)^{r(r-1)} n^{C(r,2)}: cap on covering tuples.
inline BigInt covering_tuple_bound(int n, int r) {
  if (r < 1 || n < 0) throw std::invalid_argument("covering_tuple_bound needs r >= 1, n >= 0");
  return big_pow(BigInt(4 * r - 2), static_cast<unsigned>(r * (r - 1))) *
         big_pow(BigInt(n), static_cast<unsigned>(r * (r - 1) / 2));
}

/// (4r-2)^{r(r-1)} n^{C(r,2)} 2^n: cap on prod_i k(G_i) for edge-disjoint families.
inline BigInt multicolor_upper_bound(int n, int r) {
  return covering_tuple_bound(n, r) << n;
}

/// All cliques of g as vertex masks (empty set included); n <= 24.
inline std::vector<std::uint64_t> list_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  auto grow = [&](auto&& self, std::uint64_t clique, std::uint64_t candidates) -> void {
    out.push_back(clique);
    for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const std::uint64_t later = rest & ~((std::uint64_t{2} << v) - 1);
      self(self, clique | (std::uint64_t{1} << v), later & g.row(v));
    }
  };
  grow(grow, 0, g.vertices().bits());
  return out;
}

/// Largest n for which count_covering_tuples runs.
inline constexpr int kMaxCoveringOrder = 16;

/// Ordered tuples (S_1..S_r), S_j a clique of G_j, whose union is V.
/// Dynamic program over union masks, one color at a time.
inline BigInt count_covering_tuples(const GraphFamily& fam) {
  const int n = fam.order();
  if (n > kMaxCoveringOrder) throw std::length_error("count_covering_tuples limited to n <= 16");
  // GraphFamily guarantees edge-disjointness; re-check in case members were built elsewhere.
  GraphFamily checked(fam.members());
  const std::size_t states = std::size_t{1} << n;
  std::vector<BigInt> ways(states, 0);
  ways[0] = 1;
  for (const auto& g : checked.members()) {
    const auto cliques = list_cliques(g);
    std::vector<BigInt> next(states, 0);
    for (std::size_t u = 0; u < states; ++u) {
      if (ways[u] == 0) continue;
      for (auto c : cliques) next[u | c] += ways[u];
    }
    ways = std::move(next);
  }
  return ways[states - 1];
}

/// Orientation of every pair of {0..r-1}.
class Tournament {
public:
  /// Transitive tournament: i -> j whenever i < j.
  explicit Tournament(int r) : r_(r), forward_(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), false) {
    if (r < 1) throw std::invalid_argument("a tournament needs at least one vertex");
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) orient(i, j);
  }

  /// 0 -> 1 -> ... -> r-1 -> 0 on consecutive pairs; remaining pairs i -> j for i < j.
  static Tournament cyclic(int r) {
    Tournament t(r);
    if (r >= 3) t.orient(r - 1, 0);
    return t;
  }

  int order() const { return r_; }

  /// Makes the pair point from `from` to `to`.
  void orient(int from, int to) {
    if (from == to) throw std::invalid_argument("tournament loop");
    forward_.at(index(from, to)) = true;
    forward_.at(index(to, from)) = false;
  }
  bool beats(int i, int j) const { return forward_.at(index(i, j)); }

  /// Pairs {i < j} in lexicographic order, each reported with its direction.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < r_; ++j) out.emplace_back(beats(i, j) ? std::pair{i, j} : std::pair{j, i});
    return out;
  }

private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= r_ || j >= r_) throw std::out_of_range("tournament vertex out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(r_) + static_cast<std::size_t>(j);
  }

  int r_;
  std::vector<bool> forward_;
};

/// Vertex blocks S_e of the construction, one per arc in arcs() order; sizes
/// differ by at most one and the larger blocks come first.
inline std::vector<VertexSet> tournament_blocks(int n, const Tournament& t) {
  const auto arcs = t.arcs();
  const int e = static_cast<int>(arcs.size());
  std::vector<VertexSet> blocks(arcs.size());
  if (e == 0) return blocks;
  const int base = n / e, extra = n % e;
  Vertex next = 0;
  for (int k = 0; k < e; ++k) {
    const int size = base + (k < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) blocks[static_cast<std::size_t>(k)].insert(next++);
  }
  return blocks;
}

/// G_i = all edges inside S_{i->j} for each out-arc of i, plus all edges
/// between S_e and S_f for distinct arcs e, f incident to i. Edges between
/// blocks of vertex-disjoint arcs stay uncolored.
inline GraphFamily tournament_construction(int n, int r, const Tournament& t) {
  if (r < 2) throw std::invalid_argument("tournament construction needs r >= 2");
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("tournament construction needs 1 <= n <= 62");
  if (t.order() != r) throw std::invalid_argument("tournament order must equal r");
  const auto arcs = t.arcs();
  const auto blocks = tournament_blocks(n, t);
  std::vector<Graph> members(static_cast<std::size_t>(r), Graph(n));
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    Graph& tail = members[static_cast<std::size_t>(arcs[e].first)];
    for (Vertex u : blocks[e])
      for (Vertex v : blocks[e])
        if (u < v) tail.add_edge(u, v);
  }
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    for (std::size_t f = e + 1; f < arcs.size(); ++f) {
      const auto [e1, e2] = arcs[e];
      const auto [f1, f2] = arcs[f];
      int shared = -1;
      if (e1 == f1 || e1 == f2) shared = e1;
      else if (e2 == f1 || e2 == f2) shared = e2;
      if (shared < 0) continue;
      Graph& g = members[static_cast<std::size_t>(shared)];
      for (Vertex u : blocks[e])
        for (Vertex v : blocks[f]) g.add_edge(u, v);
    }
  }
  return GraphFamily(std::move(members));
}

/// 2^n prod_e (1 + |S_e|): lower bound on the construction's clique-count product,
/// counting only cliques inside each member's incident blocks.
inline BigInt tournament_product_formula(int n, const Tournament& t) {
  BigInt out = BigInt(1) << n;
  for (const auto& block : tournament_blocks(n, t)) out *= 1 + block.size();
  return out;
}

}  // namespace ngc
