#pragma once

// Exhaustive extremal scans over labeled graphs and total colorings, and the
// random-graph exponent experiment.
//
// Labeled graphs on n vertices are indexed by their edge mask (bit k = edge
// slot k in graph6 order). Shard k of K handles the masks congruent to k
// mod K; shard records merge associatively.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngclique/coloring_io.hpp"
#include "ngclique/counting.hpp"
#include "ngclique/graph.hpp"
#include "ngclique/graph6.hpp"
#include "ngclique/multicolor.hpp"
#include "ngclique/random.hpp"

namespace ngc {

enum class Quantity { sigma, pi, sigma_t, pi_t, multisum, multiproduct };
enum class Direction { min, max };

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::sigma: return "sigma";
    case Quantity::pi: return "pi";
    case Quantity::sigma_t: return "sigma_t";
    case Quantity::pi_t: return "pi_t";
    case Quantity::multisum: return "sum";
    case Quantity::multiproduct: return "product";
  }
  return "?";
}

inline std::string to_string(Direction d) { return d == Direction::min ? "min" : "max"; }

inline Quantity parse_quantity(const std::string& s) {
  for (auto q : {Quantity::sigma, Quantity::pi, Quantity::sigma_t, Quantity::pi_t, Quantity::multisum, Quantity::multiproduct})
    if (to_string(q) == s) return q;
  throw std::invalid_argument("unknown quantity '" + s + "'");
}

inline Direction parse_direction(const std::string& s) {
  if (s == "min") return Direction::min;
  if (s == "max") return Direction::max;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

inline bool is_graph_quantity(Quantity q) {
  return q == Quantity::sigma || q == Quantity::pi || q == Quantity::sigma_t || q == Quantity::pi_t;
}

struct ShardSpec {
  int count = 1;
  int index = 0;

  void validate() const {
    if (count < 1 || index < 0 || index >= count) throw std::invalid_argument("shard index must lie in [0, count)");
  }
};

/// Most witnesses an ExtremalRecord keeps (the smallest keys win).
inline constexpr std::size_t kWitnessCap = 100;

struct ExtremalRecord {
  int n = 0;
  int r = 0;  // colors; 0 for graph scans
  int t = 0;  // size for sigma_t / pi_t
  Quantity quantity = Quantity::pi;
  Direction direction = Direction::max;
  std::optional<BigInt> value;          // empty until something was scanned
  std::uint64_t witness_count = 0;      // all optimizers, uncapped
  std::vector<std::uint64_t> witness_keys;  // edge masks or coloring indices, ascending
  std::vector<std::string> witnesses;   // graph6 strings or coloring blobs, same order

  /// Folds one candidate in.
  void offer(const BigInt& v, std::uint64_t key) {
    const bool better = !value || (direction == Direction::max ? v > *value : v < *value);
    if (better) {
      value = v;
      witness_count = 0;
      witness_keys.clear();
    } else if (v != *value) {
      return;
    }
    ++witness_count;
    witness_keys.push_back(key);
    if (witness_keys.size() > 4 * kWitnessCap) trim();
  }

  void trim() {
    std::sort(witness_keys.begin(), witness_keys.end());
    witness_keys.erase(std::unique(witness_keys.begin(), witness_keys.end()), witness_keys.end());
    if (witness_keys.size() > kWitnessCap) witness_keys.resize(kWitnessCap);
  }
};

namespace detail {

inline void check_same_problem(const ExtremalRecord& a, const ExtremalRecord& b) {
  if (a.n != b.n || a.r != b.r || a.t != b.t || a.quantity != b.quantity || a.direction != b.direction)
    throw std::invalid_argument("merging records of different scans");
}

}  // namespace detail

inline void render_witnesses(ExtremalRecord& rec) {
  rec.trim();
  rec.witnesses.clear();
  for (auto key : rec.witness_keys) {
    if (rec.r == 0) {
      rec.witnesses.push_back(emit_graph6(graph_from_edge_mask(rec.n, key)));
    } else {
      std::vector<int> colors;
      for (int k = 0; k < pair_count(rec.n); ++k) {
        colors.push_back(static_cast<int>(key % static_cast<std::uint64_t>(rec.r)) + 1);
        key /= static_cast<std::uint64_t>(rec.r);
      }
      rec.witnesses.push_back(coloring_blob(GraphFamily::from_slot_colors(rec.n, rec.r, colors)));
    }
  }
}

/// Associative merge of two shard records of the same scan.
inline ExtremalRecord merge(ExtremalRecord a, const ExtremalRecord& b) {
  detail::check_same_problem(a, b);
  if (!b.value) return a;
  if (!a.value) return b;
  const bool b_better = a.direction == Direction::max ? *b.value > *a.value : *b.value < *a.value;
  if (b_better) return b;
  if (*b.value == *a.value) {
    a.witness_count += b.witness_count;
    a.witness_keys.insert(a.witness_keys.end(), b.witness_keys.begin(), b.witness_keys.end());
    render_witnesses(a);
  }
  return a;
}

/// The scanned quantity of one graph.
inline BigInt evaluate(const Graph& g, Quantity q, int t = 0) {
  const auto p = ng_profile(g);
  switch (q) {
    case Quantity::sigma: return p.sigma();
    case Quantity::pi: return p.pi();
    case Quantity::sigma_t: return p.sigma_t(t);
    case Quantity::pi_t: return p.pi_t(t);
    default: throw std::invalid_argument("not a single-graph quantity");
  }
}

inline BigInt evaluate(const GraphFamily& fam, Quantity q) {
  switch (q) {
    case Quantity::multisum: return sum_clique_counts(fam);
    case Quantity::multiproduct: return product_clique_counts(fam);
    default: throw std::invalid_argument("not a family quantity");
  }
}

/// Largest n for full clique-profile scans, and for size-restricted scans with t <= 3.
inline constexpr int kMaxExhaustiveOrder = 7;
inline constexpr int kMaxExhaustiveOrderSmallT = 8;

namespace detail {

// k_t and i_t for t <= 3 from edge and triangle counts, maintained under
// single edge flips while walking a Gray code over the free mask bits.
class SmallSizeScanner {
public:
  SmallSizeScanner(int n, int t, Quantity q, ExtremalRecord& rec) : n_(n), t_(t), q_(q), rec_(rec), slots_(edge_slots(n)) {}

  void run(const ShardSpec& shard) {
    const int total_bits = pair_count(n_);
    const auto total = std::uint64_t{1} << total_bits;
    const bool pow2 = std::has_single_bit(static_cast<unsigned>(shard.count));
    if (!pow2 || static_cast<std::uint64_t>(shard.count) > total) {
      for (std::uint64_t mask = static_cast<std::uint64_t>(shard.index); mask < total; mask += static_cast<std::uint64_t>(shard.count)) {
        const Graph g = graph_from_edge_mask(n_, mask);
        k3_ = triangle_count(g);
        i3_ = triangle_count(g.complement());
        edges_ = g.edge_count();
        offer(mask);
      }
      return;
    }
    // Masks = index | (gray(j) << low) for j = 0 .. 2^(total_bits - low) - 1.
    const int low = std::countr_zero(static_cast<unsigned>(shard.count));
    std::uint64_t mask = static_cast<std::uint64_t>(shard.index);
    Graph g = graph_from_edge_mask(n_, mask);
    k3_ = triangle_count(g);
    i3_ = triangle_count(g.complement());
    edges_ = g.edge_count();
    offer(mask);
    const std::uint64_t steps = std::uint64_t{1} << (total_bits - low);
    const std::uint64_t all = VertexSet::range(n_).bits();
    for (std::uint64_t j = 1; j < steps; ++j) {
      const int bit = low + std::countr_zero(j);
      const auto [u, v] = slots_[static_cast<std::size_t>(bit)];
      const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      const auto common = static_cast<std::uint64_t>(std::popcount(g.row(u) & g.row(v)));
      const auto neither = static_cast<std::uint64_t>(std::popcount(~(g.row(u) | g.row(v)) & all & ~uv));
      if (g.adjacent(u, v)) {
        g.remove_edge(u, v);
        k3_ -= common;
        i3_ += neither;
        --edges_;
      } else {
        g.add_edge(u, v);
        k3_ += common;
        i3_ -= neither;
        ++edges_;
      }
      mask ^= std::uint64_t{1} << bit;
      offer(mask);
    }
  }

private:
  void offer(std::uint64_t mask) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(pair_count(n_));
    std::uint64_t k = 0, i = 0;
    switch (t_) {
      case 0: k = i = 1; break;
      case 1: k = i = static_cast<std::uint64_t>(n_); break;
      case 2: k = edges_; i = pairs - edges_; break;
      default: k = k3_; i = i3_; break;
    }
    rec_.offer(q_ == Quantity::sigma_t ? BigInt(k + i) : BigInt(k) * i, mask);
  }

  int n_, t_;
  Quantity q_;
  ExtremalRecord& rec_;
  std::vector<std::pair<Vertex, Vertex>> slots_;
  std::uint64_t k3_ = 0, i3_ = 0, edges_ = 0;
};

}  // namespace detail

/// Exact extremum of a graph quantity over all labeled graphs on n vertices
/// handled by `shard`. n <= 7, or n <= 8 for sigma_t / pi_t with t <= 3.
inline ExtremalRecord exhaustive_extremal(int n, Quantity quantity, Direction direction, int t = 0, ShardSpec shard = {}) {
  shard.validate();
  if (!is_graph_quantity(quantity)) throw std::invalid_argument("exhaustive_extremal scans graph quantities");
  const bool sized = quantity == Quantity::sigma_t || quantity == Quantity::pi_t;
  if (sized && t < 0) throw std::invalid_argument("t must be non-negative");
  const int limit = sized && t <= 3 ? kMaxExhaustiveOrderSmallT : kMaxExhaustiveOrder;
  if (n < 0 || n > limit)
    throw std::length_error("exhaustive scan limited to n <= " + std::to_string(limit) + " for this quantity");

  ExtremalRecord rec;
  rec.n = n;
  rec.t = sized ? t : 0;
  rec.quantity = quantity;
  rec.direction = direction;
  if (sized && t <= 3) {
    detail::SmallSizeScanner(n, t, quantity, rec).run(shard);
  } else {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = static_cast<std::uint64_t>(shard.index); mask < total; mask += static_cast<std::uint64_t>(shard.count))
      rec.offer(evaluate(graph_from_edge_mask(n, mask), quantity, t), mask);
  }
  render_witnesses(rec);
  return rec;
}

/// All shards of a scan, `workers` at a time, merged.
inline ExtremalRecord exhaustive_extremal_sharded(int n, Quantity quantity, Direction direction, int t, int shards, int workers = 1) {
  if (shards < 1 || workers < 1) throw std::invalid_argument("shards and workers must be positive");
  std::optional<ExtremalRecord> out;
  for (int start = 0; start < shards; start += workers) {
    std::vector<std::future<ExtremalRecord>> running;
    for (int k = start; k < std::min(shards, start + workers); ++k)
      running.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                   [=] { return exhaustive_extremal(n, quantity, direction, t, {shards, k}); }));
    for (auto& f : running) out = out ? merge(std::move(*out), f.get()) : f.get();
  }
  return *out;
}

/// Largest number of colorings exhaustive_coloring_extremal enumerates.
inline constexpr std::uint64_t kMaxColoringScan = std::uint64_t{1} << 24;

/// Exact extremum of sum or product of k(G_i) over all total r-colorings of K_n.
/// Coloring index x encodes slot k's color as base-r digit k of x (plus one).
inline ExtremalRecord exhaustive_coloring_extremal(int n, int r, Quantity quantity, Direction direction, ShardSpec shard = {}) {
  shard.validate();
  if (quantity != Quantity::multisum && quantity != Quantity::multiproduct)
    throw std::invalid_argument("coloring scans support sum and product");
  if (r < 1 || n < 0) throw std::invalid_argument("coloring scan needs r >= 1, n >= 0");
  std::uint64_t total = 1;
  for (int k = 0; k < pair_count(n); ++k) {
    total *= static_cast<std::uint64_t>(r);
    if (total > kMaxColoringScan) throw std::length_error("coloring scan exceeds 2^24 colorings");
  }
  ExtremalRecord rec;
  rec.n = n;
  rec.r = r;
  rec.quantity = quantity;
  rec.direction = direction;
  std::vector<int> colors(static_cast<std::size_t>(pair_count(n)));
  for (std::uint64_t x = static_cast<std::uint64_t>(shard.index); x < total; x += static_cast<std::uint64_t>(shard.count)) {
    std::uint64_t rest = x;
    for (auto& c : colors) {
      c = static_cast<int>(rest % static_cast<std::uint64_t>(r)) + 1;
      rest /= static_cast<std::uint64_t>(r);
    }
    rec.offer(evaluate(GraphFamily::from_slot_colors(n, r, colors), quantity), x);
  }
  render_witnesses(rec);
  return rec;
}

/// Re-evaluates every witness; true iff each reproduces the recorded value.
inline bool verify_record(const ExtremalRecord& rec) {
  if (!rec.value) return rec.witnesses.empty();
  for (const auto& w : rec.witnesses) {
    const BigInt v = rec.r == 0 ? evaluate(parse_graph6(w), rec.quantity, rec.t)
                                : evaluate(parse_coloring_blob(rec.n, rec.r, w), rec.quantity);
    if (v != *rec.value) return false;
  }
  return true;
}

/// Lexicographically smallest graph6 over all relabelings; n <= 8.
inline std::string canonical_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::length_error("canonical_graph6 limited to n <= 8");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = emit_graph6(g);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, emit_graph6(g.relabeled(perm)));
  return best;
}

/// Witness list reduced to one representative per isomorphism class.
inline std::vector<std::string> isomorphism_classes(const std::vector<std::string>& graph6_witnesses) {
  std::vector<std::string> out;
  for (const auto& w : graph6_witnesses) out.push_back(canonical_graph6(parse_graph6(w)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void write_extremal_csv_header(std::ostream& out) {
  out << "n,r,quantity,t,direction,value,witness_count,witnesses\n";
}

/// One CSV row; witnesses are ';'-separated (graph6 strings never contain ';' or ',').
inline void write_extremal_csv_row(std::ostream& out, const ExtremalRecord& rec) {
  out << rec.n << ',' << rec.r << ',' << to_string(rec.quantity) << ',' << rec.t << ',' << to_string(rec.direction) << ','
      << (rec.value ? rec.value->str() : std::string()) << ',' << rec.witness_count << ',';
  for (std::size_t k = 0; k < rec.witnesses.size(); ++k) out << (k ? ";" : "") << rec.witnesses[k];
  out << '\n';
}

struct ExponentTrial {
  std::uint64_t trial = 0;
  BigInt cliques;
  BigInt independents;
  double ratio = 0;  // ln pi / (ln n * log2 n)
};

struct ExponentStudy {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<ExponentTrial> trials;
  double min = 0, median = 0, max = 0;
};

/// log pi(G) / (log n log_2 n) for `trials` samples of G(n, 1/2). Advisory only:
/// the exponent statement is asymptotic.
inline ExponentStudy random_pi_exponent(int n, int trials, std::uint64_t seed) {
  if (n < 2 || n > 50) throw std::invalid_argument("random_pi_exponent needs 2 <= n <= 50");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  ExponentStudy study;
  study.n = n;
  study.seed = seed;
  const double scale = std::log(static_cast<double>(n)) * std::log2(static_cast<double>(n));
  std::vector<double> ratios;
  for (int k = 0; k < trials; ++k) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
    const auto p = ng_profile(sample_random_graph(n, rng));
    ExponentTrial tr{static_cast<std::uint64_t>(k), p.cliques.total, p.independents.total, 0};
    const double log_pi = std::log(p.cliques.total.convert_to<double>()) + std::log(p.independents.total.convert_to<double>());
    tr.ratio = log_pi / scale;
    ratios.push_back(tr.ratio);
    study.trials.push_back(std::move(tr));
  }
  std::sort(ratios.begin(), ratios.end());
  study.min = ratios.front();
  study.max = ratios.back();
  const std::size_t mid = ratios.size() / 2;
  study.median = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
  return study;
}

inline void write_exponent_csv(std::ostream& out, const ExponentStudy& study) {
  out << "trial,n,seed,k,i,ratio\n";
  out.precision(12);
  for (const auto& tr : study.trials)
    out << tr.trial << ',' << study.n << ',' << study.seed << ',' << tr.cliques << ',' << tr.independents << ',' << tr.ratio << '\n';
}

}  // namespace ngc
