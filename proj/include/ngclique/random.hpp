#pragma once

// Seeded sampling of G(n, 1/2) and uniform r-colorings of K_n.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// standard. Raw 64-bit outputs are turned into edge bits and colors here
// (no std::*_distribution), so samples match across platforms. Trial k of a
// run with seed s uses the stream seeded by splitmix64(s ^ splitmix64(k)).

#include <cstdint>
#include <random>

#include "ngclique/graph.hpp"
#include "ngclique/multicolor.hpp"

namespace ngc {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(seed ^ splitmix64(trial))); }

/// Uniform integer in [0, bound) by rejection on raw outputs.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

/// Each edge slot present with probability 1/2, one generator bit per slot.
inline Graph sample_random_graph(int n, Rng& rng) {
  Graph g(n);
  std::uint64_t bits = 0;
  int left = 0;
  for (auto [u, v] : edge_slots(n)) {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    if (bits & 1U) g.add_edge(u, v);
    bits >>= 1;
    --left;
  }
  return g;
}

inline Graph sample_random_graph(int n, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  return sample_random_graph(n, rng);
}

/// Total coloring with each edge slot uniform over the r colors.
inline GraphFamily sample_random_coloring(int n, int r, Rng& rng) {
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int k = 0; k < pair_count(n); ++k) colors.push_back(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r))) + 1);
  return GraphFamily::from_slot_colors(n, r, colors);
}

inline GraphFamily sample_random_coloring(int n, int r, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  return sample_random_coloring(n, r, rng);
}

/// Edge-disjoint family where each slot gets one of r colors or stays
/// uncolored, all r + 1 outcomes equally likely.
inline GraphFamily sample_partial_coloring(int n, int r, Rng& rng) {
  std::vector<int> colors;
  for (int k = 0; k < pair_count(n); ++k) colors.push_back(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r) + 1)));
  return GraphFamily::from_slot_colors(n, r, colors);
}

}  // namespace ngc
