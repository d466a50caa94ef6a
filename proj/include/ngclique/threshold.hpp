#pragma once

// Threshold graphs and their +/- codes.
//
// A threshold graph on n vertices starts from one vertex and adds n-1 more,
// each either dominating (+) or isolated (-). ThresholdCode stores those n-1
// symbols in insertion order: symbols()[0] is the first vertex added after
// the initial one.
//
// Display order is the reverse: codes are written right to left, so in the
// display string "(+)^a(-)^b" the - block is added first. Every function
// taking or returning a string uses display order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngclique/graph.hpp"
#include "ngclique/numeric.hpp"

namespace ngc {

enum class Sign : char { plus = '+', minus = '-' };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

class ThresholdCode {
public:
  ThresholdCode() = default;
  /// Symbols in insertion order.
  /// Any length; build() needs order() <= kMaxVertices.
  explicit ThresholdCode(std::vector<Sign> symbols) : symbols_(std::move(symbols)) {}

  /// Parses a display-order string of '+' and '-' (U+2212 MINUS SIGN is accepted too).
  static ThresholdCode from_display(std::string_view text) {
    std::vector<Sign> symbols;
    for (std::size_t k = 0; k < text.size(); ++k) {
      const char c = text[k];
      if (c == '+') {
        symbols.push_back(Sign::plus);
      } else if (c == '-') {
        symbols.push_back(Sign::minus);
      } else if (text.substr(k, 3) == "\xE2\x88\x92") {
        symbols.push_back(Sign::minus);
        k += 2;
      } else {
        throw std::invalid_argument("threshold code: unexpected character at position " + std::to_string(k));
      }
    }
    std::reverse(symbols.begin(), symbols.end());
    return ThresholdCode(std::move(symbols));
  }

  /// Display-order string, ASCII '+' and '-'.
  std::string to_display() const {
    std::string out;
    out.reserve(symbols_.size());
    for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.push_back(static_cast<char>(*it));
    return out;
  }

  const std::vector<Sign>& symbols() const { return symbols_; }
  int order() const { return static_cast<int>(symbols_.size()) + 1; }

  /// Number of adjacent symbol pairs that differ.
  int sign_changes() const {
    int changes = 0;
    for (std::size_t k = 1; k < symbols_.size(); ++k) changes += symbols_[k] != symbols_[k - 1];
    return changes;
  }

  bool operator==(const ThresholdCode&) const = default;

private:
  std::vector<Sign> symbols_;
};

/// Code of the complement: every symbol flipped.
inline ThresholdCode complement(const ThresholdCode& code) {
  std::vector<Sign> flipped;
  for (Sign s : code.symbols()) flipped.push_back(flip(s));
  return ThresholdCode(std::move(flipped));
}

/// Vertex 0 is the initial vertex; vertex k+1 is added with symbols()[k].
inline Graph build(const ThresholdCode& code) {
  Graph g(code.order());
  for (std::size_t k = 0; k < code.symbols().size(); ++k) {
    if (code.symbols()[k] != Sign::plus) continue;
    const auto v = static_cast<Vertex>(k + 1);
    for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

/// A code together with the original vertex behind each construction step:
/// insertion[0] is the initial vertex, insertion[k+1] the one added with symbols()[k].
struct ThresholdDecomposition {
  ThresholdCode code;
  std::vector<Vertex> insertion;
};

/// Strips a dominating or isolated vertex (lowest index first) until one is
/// left; fails when neither exists. build(code) relabelled by `insertion` equals g.
inline std::optional<ThresholdDecomposition> decompose_threshold(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  VertexSet alive = g.vertices();
  std::vector<Sign> stripped;
  std::vector<Vertex> removed;
  while (alive.size() > 1) {
    const int remaining = alive.size();
    bool found = false;
    for (Vertex v : alive) {
      const int d = (g.neighbors(v) & alive).size();
      if (d == remaining - 1 || d == 0) {
        stripped.push_back(d == 0 ? Sign::minus : Sign::plus);
        removed.push_back(v);
        alive.erase(v);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  removed.push_back(alive.front());
  std::reverse(stripped.begin(), stripped.end());
  std::reverse(removed.begin(), removed.end());
  return ThresholdDecomposition{ThresholdCode(std::move(stripped)), std::move(removed)};
}

inline std::optional<ThresholdCode> recognize(const Graph& g) {
  auto d = decompose_threshold(g);
  if (!d) return std::nullopt;
  return std::move(d->code);
}

inline bool is_threshold(const Graph& g) { return decompose_threshold(g).has_value(); }

/// Clique side V_K / independent side V_I of a threshold graph with its degree data.
struct SplitDegrees {
  int r = 0;               // |V_K|
  int s = 0;               // |V_I|
  std::vector<int> a;      // non-increasing: degrees in the complement of V_K vertices
  std::vector<int> b;      // non-decreasing: degrees of V_I vertices
  VertexSet clique_side;
  VertexSet independent_side;

  bool operator==(const SplitDegrees&) const = default;
};

/// Degree data for an explicit split: `clique_side` must be a clique and its
/// complement an independent set.
inline SplitDegrees split_degrees(const Graph& g, VertexSet clique_side) {
  if (!clique_side.subset_of(g.vertices())) throw std::invalid_argument("split side outside the vertex set");
  const VertexSet independent_side = g.vertices().without(clique_side);
  if (!is_clique(g, clique_side) || !is_independent(g, independent_side))
    throw std::invalid_argument("not a clique/independent split of the graph");
  SplitDegrees out;
  out.r = clique_side.size();
  out.s = independent_side.size();
  out.clique_side = clique_side;
  out.independent_side = independent_side;
  for (Vertex v : clique_side) out.a.push_back(independent_side.without(g.neighbors(v)).size());
  for (Vertex w : independent_side) out.b.push_back((g.neighbors(w) & clique_side).size());
  std::sort(out.a.begin(), out.a.end(), std::greater<>());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

/// Canonical split of a threshold graph: V_K holds the + vertices, plus the
/// initial vertex when the first added symbol is + (or the graph has one vertex).
inline SplitDegrees split_degrees(const Graph& g) {
  const auto d = decompose_threshold(g);
  if (!d) throw std::invalid_argument("split_degrees needs a threshold graph");
  const auto& symbols = d->code.symbols();
  VertexSet clique_side;
  if (symbols.empty() || symbols.front() == Sign::plus) clique_side.insert(d->insertion[0]);
  for (std::size_t k = 0; k < symbols.size(); ++k)
    if (symbols[k] == Sign::plus) clique_side.insert(d->insertion[k + 1]);
  return split_degrees(g, clique_side);
}

/// S_K = k_t(T) and S_I = i_t(T) of a threshold graph, from its split degrees.
struct ClosedFormCounts {
  std::uint64_t cliques;      // S_K
  std::uint64_t independents; // S_I
  bool operator==(const ClosedFormCounts&) const = default;
};

/// S_K = C(r,t) + sum_j C(b_j, t-1),  S_I = C(s,t) + sum_i C(a_i, t-1); valid for t >= 2.
inline ClosedFormCounts closed_form_counts(const SplitDegrees& sd, int t) {
  if (t < 2) throw std::invalid_argument("closed-form counts need t >= 2");
  if (sd.r < 0 || sd.s < 0 || sd.r + sd.s > kMaxVertices) throw std::invalid_argument("bad split sizes");
  ClosedFormCounts out{binomial(sd.r, t), binomial(sd.s, t)};
  for (int bj : sd.b) out.cliques += binomial(bj, t - 1);
  for (int ai : sd.a) out.independents += binomial(ai, t - 1);
  return out;
}

/// Threshold code with one sign change between a clique block of size r and
/// an independent block of size s (r + s >= 1).
///   complete_between = true : V_I added first, then V_K  -> K_r joined to E_s, display (+)^r(-)^{s-1}
///   complete_between = false: V_K added first, then V_I  -> K_r disjoint from E_s, display (-)^s(+)^{r-1}
/// The first vertex of the first block becomes the initial vertex.
inline ThresholdCode one_turn_code(int r, int s, bool complete_between) {
  if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("bad block sizes");
  std::vector<Sign> symbols;
  const Sign first = complete_between ? Sign::minus : Sign::plus;
  const int first_count = complete_between ? s : r;
  const int second_count = complete_between ? r : s;
  symbols.insert(symbols.end(), static_cast<std::size_t>(first_count), first);
  symbols.insert(symbols.end(), static_cast<std::size_t>(second_count), flip(first));
  symbols.erase(symbols.begin());
  return ThresholdCode(std::move(symbols));
}

}  // namespace ngc
