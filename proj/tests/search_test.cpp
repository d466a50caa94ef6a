#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "ngclique/coloring_io.hpp"
#include "ngclique/compression.hpp"
#include "ngclique/graph6.hpp"
#include "ngclique/random.hpp"
#include "ngclique/search.hpp"
#include "ngclique/threshold.hpp"

namespace ngc {
namespace {

std::set<std::string> witness_set(const ExtremalRecord& rec) { return {rec.witnesses.begin(), rec.witnesses.end()}; }

TEST(Exhaustive, MaxPiSmallOrders) {
  const int expected[] = {4, 12, 32, 80, 192};
  for (int n = 1; n <= 5; ++n) {
    const auto rec = exhaustive_extremal(n, Quantity::pi, Direction::max);
    EXPECT_EQ(*rec.value, expected[n - 1]);
    EXPECT_EQ(witness_set(rec), (std::set<std::string>{emit_graph6(Graph::complete(n)), emit_graph6(Graph(n))}));
    EXPECT_TRUE(verify_record(rec));
  }
}

TEST(Exhaustive, TriangleMaxPi) {
  const auto rec = exhaustive_extremal(3, Quantity::pi, Direction::max);
  EXPECT_EQ(*rec.value, 32);
  EXPECT_EQ(rec.witness_count, 2U);
}

TEST(Exhaustive, SigmaExtremes) {
  const auto max4 = exhaustive_extremal(4, Quantity::sigma, Direction::max);
  EXPECT_EQ(*max4.value, 21);
  EXPECT_EQ(witness_set(max4), (std::set<std::string>{"C~", "C?"}));
  const int min_sigma[] = {4, 7, 11, 16, 22};
  const std::uint64_t min_count[] = {1, 2, 6, 18, 12};
  for (int n = 1; n <= 5; ++n) {
    const auto rec = exhaustive_extremal(n, Quantity::sigma, Direction::min);
    EXPECT_EQ(*rec.value, min_sigma[n - 1]);
    EXPECT_EQ(rec.witness_count, min_count[n - 1]);
    EXPECT_TRUE(verify_record(rec));
  }
}

TEST(Exhaustive, MaxPiThreeSmallOrders) {
  // Independent enumeration over all labeled graphs.
  const int value[] = {0, 0, 3, 16, 52};
  const std::uint64_t count[] = {8, 64, 20, 30, 70};
  for (int n = 3; n <= 7; ++n) {
    const auto rec = exhaustive_extremal(n, Quantity::pi_t, Direction::max, 3);
    EXPECT_EQ(*rec.value, value[n - 3]) << n;
    EXPECT_EQ(rec.witness_count, count[n - 3]) << n;
    EXPECT_TRUE(verify_record(rec));
  }
}

TEST(Exhaustive, SmallSizeScanAgreesWithProfileScan) {
  // Gray-code counters vs full clique profiles, on every shard layout.
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t <= 3; ++t) {
      for (Quantity q : {Quantity::pi_t, Quantity::sigma_t}) {
        for (Direction d : {Direction::min, Direction::max}) {
          ExtremalRecord slow;
          slow.n = n;
          slow.t = t;
          slow.quantity = q;
          slow.direction = d;
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask)
            slow.offer(evaluate(graph_from_edge_mask(n, mask), q, t), mask);
          render_witnesses(slow);
          for (int shards : {1, 3, 4}) {
            const auto fast = exhaustive_extremal_sharded(n, q, d, t, shards);
            EXPECT_EQ(*fast.value, *slow.value);
            EXPECT_EQ(fast.witness_count, slow.witness_count);
            EXPECT_EQ(fast.witnesses, slow.witnesses);
          }
        }
      }
    }
  }
}

TEST(Exhaustive, ShardsMergeToFullScan) {
  const auto full = exhaustive_extremal(5, Quantity::sigma, Direction::min);
  for (int shards : {2, 5, 7}) {
    const auto merged = exhaustive_extremal_sharded(5, Quantity::sigma, Direction::min, 0, shards, 2);
    EXPECT_EQ(*merged.value, *full.value);
    EXPECT_EQ(merged.witness_count, full.witness_count);
    EXPECT_EQ(merged.witnesses, full.witnesses);
  }
}

TEST(Exhaustive, WitnessCap) {
  // Every graph has pi_0 = 1, so all 1024 graphs on 5 vertices tie.
  const auto rec = exhaustive_extremal(5, Quantity::pi_t, Direction::max, 0);
  EXPECT_EQ(*rec.value, 1);
  EXPECT_EQ(rec.witness_count, 1024U);
  EXPECT_EQ(rec.witnesses.size(), kWitnessCap);
  EXPECT_EQ(rec.witness_keys.front(), 0U);
  EXPECT_EQ(rec.witness_keys.back(), kWitnessCap - 1);
}

TEST(Exhaustive, Guards) {
  EXPECT_THROW(exhaustive_extremal(8, Quantity::pi, Direction::max), std::length_error);
  EXPECT_THROW(exhaustive_extremal(9, Quantity::pi_t, Direction::max, 3), std::length_error);
  EXPECT_THROW(exhaustive_extremal(8, Quantity::pi_t, Direction::max, 4), std::length_error);
  EXPECT_THROW(exhaustive_extremal(4, Quantity::multiproduct, Direction::max), std::invalid_argument);
  EXPECT_THROW(exhaustive_extremal(4, Quantity::pi, Direction::max, 0, {4, 4}), std::invalid_argument);
  EXPECT_THROW(exhaustive_coloring_extremal(5, 6, Quantity::multisum, Direction::max), std::length_error);
}

TEST(Exhaustive, MaximizersCompressToMaximizers) {
  const auto rec = exhaustive_extremal(6, Quantity::pi_t, Direction::max, 3);
  for (const auto& w : rec.witnesses) {
    const auto trace = compress_to_threshold(parse_graph6(w));
    EXPECT_EQ(pi_t(trace.result, 3), *rec.value) << w;
  }
}

TEST(Colorings, SumOverThreeColoringsOfK4) {
  const auto rec = exhaustive_coloring_extremal(4, 3, Quantity::multisum, Direction::max);
  EXPECT_EQ(*rec.value, 26);
  EXPECT_EQ(rec.witness_count, 3U);
  EXPECT_EQ(witness_set(rec), (std::set<std::string>{"111111", "222222", "333333"}));
  const auto low = exhaustive_coloring_extremal(4, 3, Quantity::multisum, Direction::min);
  EXPECT_EQ(*low.value, 21);
  EXPECT_EQ(low.witness_count, 450U);
}

TEST(Colorings, ProductExtremes) {
  EXPECT_EQ(*exhaustive_coloring_extremal(3, 2, Quantity::multiproduct, Direction::max).value, 32);
  const auto min3 = exhaustive_coloring_extremal(3, 3, Quantity::multiproduct, Direction::min);
  EXPECT_EQ(*min3.value, 120);
  EXPECT_EQ(min3.witness_count, 18U);
  EXPECT_GE(BigInt(*min3.value), good_sequence_lower_bound(3, 3, log_floor(3, 3)));
  const auto max3 = exhaustive_coloring_extremal(3, 3, Quantity::multiproduct, Direction::max);
  EXPECT_EQ(*max3.value, 128);
  const auto k4 = exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::max);
  EXPECT_EQ(*k4.value, 400);
  EXPECT_TRUE(verify_record(k4));
}

TEST(Colorings, ShardedScanMatches) {
  const auto full = exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::min);
  ExtremalRecord merged = exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::min, {3, 0});
  merged = merge(merged, exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::min, {3, 1}));
  merged = merge(merged, exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::min, {3, 2}));
  EXPECT_EQ(*merged.value, 315);
  EXPECT_EQ(merged.witness_count, full.witness_count);
  EXPECT_EQ(merged.witnesses, full.witnesses);
}

TEST(Records, MergeRejectsDifferentScans) {
  const auto a = exhaustive_extremal(3, Quantity::pi, Direction::max);
  const auto b = exhaustive_extremal(3, Quantity::pi, Direction::min);
  EXPECT_THROW(merge(a, b), std::invalid_argument);
}

TEST(Records, CsvRow) {
  std::ostringstream out;
  write_extremal_csv_header(out);
  write_extremal_csv_row(out, exhaustive_extremal(3, Quantity::pi, Direction::max));
  EXPECT_EQ(out.str(), "n,r,quantity,t,direction,value,witness_count,witnesses\n3,0,pi,0,max,32,2,B?;Bw\n");
}

TEST(Records, QuantityNames) {
  for (Quantity q : {Quantity::sigma, Quantity::pi, Quantity::sigma_t, Quantity::pi_t, Quantity::multisum, Quantity::multiproduct})
    EXPECT_EQ(parse_quantity(to_string(q)), q);
  EXPECT_THROW(parse_quantity("tau"), std::invalid_argument);
  EXPECT_EQ(parse_direction("min"), Direction::min);
  EXPECT_THROW(parse_direction("up"), std::invalid_argument);
}

TEST(Canonical, IsomorphismClasses) {
  EXPECT_EQ(canonical_graph6(Graph(3, {{0, 1}})), canonical_graph6(Graph(3, {{1, 2}})));
  EXPECT_NE(canonical_graph6(Graph::path(4)), canonical_graph6(Graph(4, {{0, 1}, {2, 3}})));
  const auto rec = exhaustive_extremal(5, Quantity::sigma, Direction::min);
  // The 12 labeled minimizers on 5 vertices are the labelings of C_5.
  EXPECT_EQ(isomorphism_classes(rec.witnesses), std::vector<std::string>{canonical_graph6(Graph::cycle(5))});
}

TEST(Sampling, Deterministic) {
  EXPECT_EQ(sample_random_graph(30, 5), sample_random_graph(30, 5));
  EXPECT_NE(sample_random_graph(30, 5), sample_random_graph(30, 6));
  EXPECT_EQ(sample_random_coloring(10, 3, 8).members(), sample_random_coloring(10, 3, 8).members());
  // Output sequence fixed by the standard.
  EXPECT_EQ(Rng(5489)(), 14514284786278117030ULL);
}

TEST(Sampling, EdgeDensity) {
  Rng rng = trial_rng(51, 0);
  std::uint64_t edges = 0;
  const int samples = 100;
  for (int k = 0; k < samples; ++k) edges += static_cast<std::uint64_t>(sample_random_graph(30, rng).edge_count());
  const double trials = samples * 435.0;
  EXPECT_NEAR(static_cast<double>(edges) / trials, 0.5, 3 * std::sqrt(0.25 / trials));
}

TEST(Sampling, ColorFrequencies) {
  Rng rng = trial_rng(52, 0);
  std::uint64_t hits[3] = {0, 0, 0};
  const int samples = 100;
  for (int k = 0; k < samples; ++k)
    for (int c : sample_random_coloring(20, 3, rng).slot_colors()) ++hits[c - 1];
  const double trials = samples * 190.0;
  for (auto h : hits) EXPECT_NEAR(static_cast<double>(h) / trials, 1.0 / 3, 3 * std::sqrt((2.0 / 9) / trials));
}

TEST(Exponent, DeterministicAndFinite) {
  const auto a = random_pi_exponent(30, 50, 7);
  const auto b = random_pi_exponent(30, 50, 7);
  ASSERT_EQ(a.trials.size(), 50U);
  for (std::size_t k = 0; k < a.trials.size(); ++k) {
    EXPECT_TRUE(std::isfinite(a.trials[k].ratio));
    EXPECT_GT(a.trials[k].ratio, 0);
    EXPECT_EQ(a.trials[k].ratio, b.trials[k].ratio);
    EXPECT_EQ(a.trials[k].cliques, b.trials[k].cliques);
  }
  EXPECT_LE(a.min, a.median);
  EXPECT_LE(a.median, a.max);
  std::ostringstream out;
  write_exponent_csv(out, a);
  const std::string csv = out.str();
  EXPECT_EQ(csv.substr(0, 22), "trial,n,seed,k,i,ratio");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
}

TEST(ColoringFormat, ParsesCommentsAndBlanks) {
  const auto fam = parse_coloring("# K_3 in two colors\n3 2\n\n0 1 1\n0 2 2  # trailing\n1 2 1\n");
  EXPECT_EQ(fam.order(), 3);
  EXPECT_EQ(fam.colors(), 2);
  EXPECT_EQ(fam.member(0), Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(fam.covers_all_edges());
  EXPECT_EQ(emit_coloring(fam), "3 2\n0 1 1\n0 2 2\n1 2 1\n");
}

TEST(ColoringFormat, RoundTrip) {
  Rng rng = trial_rng(53, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto fam = sample_partial_coloring(1 + static_cast<int>(uniform_below(rng, 15)), 1 + static_cast<int>(uniform_below(rng, 5)), rng);
    EXPECT_EQ(parse_coloring(emit_coloring(fam)).members(), fam.members());
    EXPECT_EQ(parse_coloring_blob(fam.order(), fam.colors(), coloring_blob(fam)).members(), fam.members());
  }
}

TEST(ColoringFormat, Errors) {
  auto error_line = [](std::string_view text) -> std::size_t {
    try {
      parse_coloring(text);
    } catch (const ColoringParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(error_line(""), 1U);
  EXPECT_EQ(error_line("3\n"), 1U);
  EXPECT_EQ(error_line("3 2\n0 1 1\n1 0 2\n"), 3U);
  EXPECT_EQ(error_line("3 2\n0 3 1\n"), 2U);
  EXPECT_EQ(error_line("3 2\n0 1 3\n"), 2U);
  EXPECT_EQ(error_line("3 2\n1 1 1\n"), 2U);
  EXPECT_EQ(error_line("3 2\n0 1\n"), 2U);
  EXPECT_EQ(error_line("3 2\n0 x 1\n"), 2U);
  EXPECT_EQ(error_line("63 2\n"), 1U);
  EXPECT_THROW(parse_coloring_blob(3, 2, "13."), std::invalid_argument);
}

}  // namespace
}  // namespace ngc
