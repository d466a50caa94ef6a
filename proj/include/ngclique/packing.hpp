#pragma once

// Conjugate sequences, majorization, packed degree pairs and the exhaustive
// lattice-path (border) maximization behind the fixed-size product bound.
//
// Geometry: a threshold graph with |V_K| = r and |V_I| = s corresponds to a
// monotone path in the s x r rectangle from (0,0) to (s,r). Column j has
// height b_j (the V_I degrees), and the squares above the path, read by rows,
// give the packed V_K co-degrees a = conjugate(r - b).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngclique/numeric.hpp"

namespace ngc {

using IntSeq = std::vector<int>;

/// c*_j = |{i : c_i >= j}| for j = 1..max(c); order of c is irrelevant.
inline IntSeq conjugate(const IntSeq& c) {
  int top = 0;
  for (int v : c) {
    if (v < 0) throw std::invalid_argument("conjugate of a negative entry");
    top = std::max(top, v);
  }
  IntSeq out(static_cast<std::size_t>(top), 0);
  for (int v : c)
    for (int j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

inline bool is_non_increasing(const IntSeq& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

/// a is majorized by c (a < c): every prefix sum of a is at most that of c,
/// padding the shorter sequence with zeros. Both must be non-increasing.
inline bool majorized_by(const IntSeq& a, const IntSeq& c) {
  if (!is_non_increasing(a) || !is_non_increasing(c))
    throw std::invalid_argument("majorization needs non-increasing sequences");
  long long sa = 0, sc = 0;
  const std::size_t len = std::max(a.size(), c.size());
  for (std::size_t k = 0; k < len; ++k) {
    sa += k < a.size() ? a[k] : 0;
    sc += k < c.size() ? c[k] : 0;
    if (sa > sc) return false;
  }
  return true;
}

/// The unique a packed with b: a = conjugate(r - b), zero-padded to length r.
inline IntSeq packed_pair(const IntSeq& b, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative rectangle side");
  if (static_cast<int>(b.size()) != s)
    throw std::invalid_argument("b must have length s = " + std::to_string(s));
  if (!std::is_sorted(b.begin(), b.end())) throw std::invalid_argument("b must be non-decreasing");
  IntSeq c;
  c.reserve(b.size());
  for (int bj : b) {
    if (bj < 0 || bj > r) throw std::invalid_argument("b entries must lie in [0, r]");
    c.push_back(r - bj);
  }
  IntSeq a = conjugate(c);
  a.resize(static_cast<std::size_t>(r), 0);
  return a;
}

enum class BorderStart { up, right };

template <typename Coord>
struct BorderPoint {
  Coord x;
  Coord y;
  bool operator==(const BorderPoint&) const = default;
};

/// Monotone staircase from (0,0) to (width, height) stored by its corner points,
/// endpoints included. Segments alternate between vertical and horizontal.
template <typename Coord>
struct BorderPath {
  std::vector<BorderPoint<Coord>> turn_points;
  BorderStart start = BorderStart::up;

  int turns() const { return std::max(0, static_cast<int>(turn_points.size()) - 2); }
  bool operator==(const BorderPath&) const = default;
};

/// Path whose column j (x from j to j+1) sits at height b[j]; r is the rectangle height.
inline BorderPath<int> lattice_path_from_heights(const IntSeq& b, int r) {
  // Step string: U^{b_0} R U^{b_1 - b_0} R ... R U^{r - b_last}.
  std::vector<char> steps;
  int y = 0;
  for (int bj : b) {
    steps.insert(steps.end(), static_cast<std::size_t>(bj - y), 'U');
    steps.push_back('R');
    y = bj;
  }
  steps.insert(steps.end(), static_cast<std::size_t>(r - y), 'U');

  BorderPath<int> path;
  path.start = !steps.empty() && steps.front() == 'R' ? BorderStart::right : BorderStart::up;
  BorderPoint<int> at{0, 0};
  path.turn_points.push_back(at);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k > 0 && steps[k] != steps[k - 1]) path.turn_points.push_back(at);
    if (steps[k] == 'U') ++at.y;
    else ++at.x;
  }
  if (!(at == path.turn_points.back())) path.turn_points.push_back(at);
  return path;
}

struct BorderOptimum {
  int r = 0;
  int s = 0;
  int t = 0;
  IntSeq b;                   // optimal V_I degrees (non-decreasing)
  IntSeq a;                   // packed V_K co-degrees
  BorderPath<int> path;
  BigInt product;             // (r^t + t sum b^{t-1}) (s^t + t sum a^{t-1})
  Rational value;             // product / (t!)^2
  std::uint64_t paths_examined = 0;

  int turns() const { return path.turns(); }
};

/// Largest r + s accepted by discrete_border_max.
inline constexpr int kMaxBorderSide = 22;

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

using u128 = unsigned __int128;

inline BigInt to_big(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + BigInt(static_cast<std::uint64_t>(v));
}

}  // namespace detail

/// Exhaustive maximization over all C(r+s, s) monotone lattice paths of
///   (r^t + t sum_j b_j^{t-1}) (s^t + t sum_i a_i^{t-1}),  a packed with b.
/// Exact integer comparison; ties go to fewer turns, then the lexicographically smaller b.
inline BorderOptimum discrete_border_max(int r, int s, int t) {
  if (t < 2 || t > 10) throw std::invalid_argument("discrete_border_max supports 2 <= t <= 10");
  if (r < 0 || s < 0) throw std::invalid_argument("negative rectangle side");
  if (r + s > kMaxBorderSide)
    throw std::length_error("discrete_border_max: r + s = " + std::to_string(r + s) +
                            " exceeds the exhaustive limit " + std::to_string(kMaxBorderSide));

  std::vector<std::uint64_t> power(static_cast<std::size_t>(r + s) + 1);
  for (int v = 0; v <= r + s; ++v) power[static_cast<std::size_t>(v)] = detail::ipow(static_cast<std::uint64_t>(v), t - 1);
  const std::uint64_t rt = detail::ipow(static_cast<std::uint64_t>(r), t);
  const std::uint64_t st = detail::ipow(static_cast<std::uint64_t>(s), t);
  const auto tt = static_cast<std::uint64_t>(t);

  BorderOptimum best;
  best.r = r;
  best.s = s;
  best.t = t;
  detail::u128 best_product = 0;
  int best_turns = 0;
  bool have_best = false;

  IntSeq b(static_cast<std::size_t>(s), 0);
  // count_le[v] = |{j : b_j <= v}|; a_i = count_le[r - i] for i = 1..r.
  std::vector<int> count_le(static_cast<std::size_t>(r) + 1);
  std::uint64_t examined = 0;
  auto evaluate = [&] {
    ++examined;
    std::uint64_t sum_b = 0;
    for (int bj : b) sum_b += power[static_cast<std::size_t>(bj)];
    std::fill(count_le.begin(), count_le.end(), 0);
    for (int bj : b) ++count_le[static_cast<std::size_t>(bj)];
    for (int v = 1; v <= r; ++v) count_le[static_cast<std::size_t>(v)] += count_le[static_cast<std::size_t>(v - 1)];
    std::uint64_t sum_a = 0;
    for (int i = 1; i <= r; ++i) sum_a += power[static_cast<std::size_t>(count_le[static_cast<std::size_t>(r - i)])];
    const detail::u128 product = static_cast<detail::u128>(rt + tt * sum_b) * (st + tt * sum_a);

    int turns = 0;
    if (have_best && product < best_product) return;
    turns = lattice_path_from_heights(b, r).turns();
    if (have_best && product == best_product) {
      if (turns > best_turns) return;
      if (turns == best_turns && !(b < best.b)) return;
    }
    have_best = true;
    best_product = product;
    best_turns = turns;
    best.b = b;
  };

  // Non-decreasing sequences over [0, r] in lexicographic order.
  if (s == 0) {
    evaluate();
  } else {
    while (true) {
      evaluate();
      int k = s - 1;
      while (k >= 0 && b[static_cast<std::size_t>(k)] == r) --k;
      if (k < 0) break;
      const int next = b[static_cast<std::size_t>(k)] + 1;
      for (int j = k; j < s; ++j) b[static_cast<std::size_t>(j)] = next;
    }
  }

  best.a = packed_pair(best.b, r, s);
  best.path = lattice_path_from_heights(best.b, r);
  best.product = detail::to_big(best_product);
  const BigInt tf = factorial(t);
  best.value = Rational(best.product, tf * tf);
  best.paths_examined = examined;
  return best;
}

/// g_t(n) over every split r + s = n (both orientations, r = 0..n).
inline BorderOptimum discrete_border_max_all_splits(int n, int t) {
  BorderOptimum best = discrete_border_max(0, n, t);
  for (int r = 1; r <= n; ++r) {
    BorderOptimum cand = discrete_border_max(r, n - r, t);
    if (cand.product > best.product || (cand.product == best.product && cand.turns() < best.turns())) best = std::move(cand);
  }
  return best;
}

}  // namespace ngc
