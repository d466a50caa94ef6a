#include <gtest/gtest.h>

#include <cmath>

#include "ngclique/coloring_io.hpp"
#include "ngclique/counting.hpp"
#include "ngclique/multicolor.hpp"
#include "ngclique/random.hpp"
#include "ngclique/search.hpp"

namespace ngc {
namespace {

TEST(GraphFamily, RejectsSharedEdges) {
  EXPECT_THROW(GraphFamily({Graph::complete(3), Graph(3, {{0, 2}})}), std::invalid_argument);
  EXPECT_THROW(GraphFamily({Graph(3), Graph(4)}), std::invalid_argument);
  GraphFamily fam(3, 2);
  fam.color_edge(0, 1, 0);
  EXPECT_THROW(fam.color_edge(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(fam.color_edge(1, 2, 2), std::out_of_range);
}

TEST(GraphFamily, Totality) {
  GraphFamily fam(3, 2);
  EXPECT_FALSE(fam.covers_all_edges());
  fam.color_edge(0, 1, 0);
  fam.color_edge(0, 2, 1);
  EXPECT_FALSE(fam.covers_all_edges());
  fam.color_edge(1, 2, 1);
  EXPECT_TRUE(fam.covers_all_edges());
  EXPECT_TRUE(GraphFamily(1, 3).covers_all_edges());
}

TEST(GraphFamily, SlotColorsRoundTrip) {
  Rng rng = trial_rng(41, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto fam = sample_partial_coloring(7, 3, rng);
    EXPECT_EQ(GraphFamily::from_slot_colors(7, 3, fam.slot_colors()).members(), fam.members());
  }
}

TEST(GoodSequences, LogFloorIsExact) {
  EXPECT_EQ(log_floor(1, 2), 0);
  EXPECT_EQ(log_floor(8, 2), 3);
  EXPECT_EQ(log_floor(7, 2), 2);
  EXPECT_EQ(log_floor(9, 3), 2);
  EXPECT_EQ(log_floor(26, 3), 2);
  EXPECT_EQ(log_floor(27, 3), 3);
  EXPECT_EQ(log_floor(1000, 10), 3);
  EXPECT_EQ(log_floor(999, 10), 2);
}

TEST(GoodSequences, RecursionValues) {
  EXPECT_EQ(good_sequence_recursion(8, 2, 3), (std::vector<int>{8, 4, 2}));
  EXPECT_EQ(good_sequence_recursion(9, 3, 2), (std::vector<int>{9, 3}));
  EXPECT_EQ(good_sequence_recursion(5, 2, 0), std::vector<int>{});
}

TEST(GoodSequences, CertificateExamples) {
  Rng rng = trial_rng(42, 0);
  const auto c8 = good_sequence_certificate(sample_random_coloring(8, 2, rng));
  EXPECT_EQ(c8.a_seq, (std::vector<int>{8, 4, 2}));
  EXPECT_EQ(c8.vertices.size(), 3U);
  EXPECT_EQ(c8.bound, Rational(64, 6));
  const auto c9 = good_sequence_certificate(sample_random_coloring(9, 3, rng));
  EXPECT_EQ(c9.a_seq, (std::vector<int>{9, 3}));
  EXPECT_EQ(c9.bound, Rational(27, 2));
  const auto c1 = good_sequence_certificate(GraphFamily(1, 2));
  EXPECT_TRUE(c1.vertices.empty());
  EXPECT_EQ(c1.bound, 1);
}

TEST(GoodSequences, CertificateRejectsPartialColoring) {
  EXPECT_THROW(good_sequence_certificate(GraphFamily(4, 2)), std::invalid_argument);
  EXPECT_THROW(good_sequence_certificate(GraphFamily({Graph::complete(4)})), std::invalid_argument);
}

TEST(GoodSequences, CertificatesVerify) {
  Rng rng = trial_rng(43, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 2 + static_cast<int>(uniform_below(rng, 3));
    const int n = 1 + static_cast<int>(uniform_below(rng, 40));
    const auto fam = sample_random_coloring(n, r, rng);
    const auto cert = good_sequence_certificate(fam);
    EXPECT_TRUE(verify_certificate(fam, cert));
    EXPECT_EQ(static_cast<int>(cert.vertices.size()), log_floor(n, r));
  }
}

TEST(GoodSequences, VerifierCatchesTampering) {
  Rng rng = trial_rng(44, 0);
  const auto fam = sample_random_coloring(16, 2, rng);
  const auto cert = good_sequence_certificate(fam);
  ASSERT_GE(cert.vertices.size(), 3U);
  auto bad = cert;
  bad.colors[0] = 1 - bad.colors[0];
  EXPECT_FALSE(verify_certificate(fam, bad));
  bad = cert;
  bad.vertices[1] = bad.vertices[0];
  EXPECT_FALSE(verify_certificate(fam, bad));
  bad = cert;
  bad.bound += 1;
  EXPECT_FALSE(verify_certificate(fam, bad));
}

TEST(GoodSequences, CountsOnFixedColorings) {
  // Enumerated independently over all vertex permutations.
  const auto c5 = parse_coloring_blob(5, 2, "1212211221");
  EXPECT_EQ(c5.member(0), Graph::cycle(5));
  const std::uint64_t c5_counts[] = {1, 5, 20, 20, 0, 0};
  for (int q = 0; q <= 5; ++q) EXPECT_EQ(count_good_sequences(c5, q), c5_counts[q]) << q;

  const auto a = parse_coloring_blob(6, 3, "123123123123123");
  const std::uint64_t a_counts[] = {1, 6, 30, 30, 4, 0, 0};
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(count_good_sequences(a, q), a_counts[q]) << q;
  EXPECT_EQ(member_clique_counts(a), (std::vector<BigInt>{13, 12, 12}));

  const auto b = parse_coloring_blob(6, 3, "112233112233123");
  const std::uint64_t b_counts[] = {1, 6, 30, 32, 10, 0, 0};
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(count_good_sequences(b, q), b_counts[q]) << q;
}

TEST(GoodSequences, SandwichOnRandomColorings) {
  Rng rng = trial_rng(45, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + trial % 2;
    const int n = 2 + static_cast<int>(uniform_below(rng, 7));
    const auto fam = sample_random_coloring(n, r, rng);
    const BigInt product = product_clique_counts(fam);
    for (int q = 0; q <= 3; ++q) {
      const BigInt x = count_good_sequences(fam, q);
      EXPECT_LE(good_sequence_lower_bound(n, r, q), x);
      EXPECT_LE(x, factorial(q) * product);
    }
  }
}

TEST(GoodSequences, SizeGuard) {
  EXPECT_THROW(count_good_sequences(GraphFamily(11, 2), 2), std::length_error);
}

TEST(CliqueCounts, SumAndProduct) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 2; r <= 4; ++r) {
      std::vector<Graph> members(static_cast<std::size_t>(r), Graph(n));
      members[0] = Graph::complete(n);
      const GraphFamily fam(members);
      EXPECT_EQ(sum_clique_counts(fam), multicolor_sum_bound(n, r));
      if (r == 2) {
        EXPECT_EQ(product_clique_counts(fam), pi(Graph::complete(n)));
      }
    }
  }
  EXPECT_EQ(product_clique_counts(GraphFamily(3, 2)), 16);
}

TEST(CliqueCounts, AmGm) {
  Rng rng = trial_rng(46, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(uniform_below(rng, 3));
    const auto fam = sample_random_coloring(1 + static_cast<int>(uniform_below(rng, 14)), r, rng);
    const double sum = sum_clique_counts(fam).convert_to<double>();
    const double prod = product_clique_counts(fam).convert_to<double>();
    EXPECT_GE(sum * (1 + 1e-12), r * std::pow(prod, 1.0 / r));
  }
}

TEST(Covering, Examples) {
  EXPECT_EQ(count_covering_tuples(GraphFamily({Graph::complete(2), Graph(2)})), 5);
  EXPECT_EQ(count_covering_tuples(GraphFamily({Graph(3), Graph(3)})), 0);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(count_covering_tuples(GraphFamily({Graph::complete(n)})), 1);
    EXPECT_EQ(covering_tuple_bound(n, 1), 1);
  }
}

TEST(Covering, MatchesBruteForce) {
  // Direct enumeration of clique tuples on small partial families.
  Rng rng = trial_rng(47, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const auto fam = sample_partial_coloring(n, 2, rng);
    const auto a = list_cliques(fam.member(0));
    const auto b = list_cliques(fam.member(1));
    std::uint64_t direct = 0;
    for (auto x : a)
      for (auto y : b) direct += (x | y) == fam.member(0).vertices().bits();
    EXPECT_EQ(count_covering_tuples(fam), direct);
  }
}

TEST(Covering, UpperBounds) {
  EXPECT_EQ(multicolor_upper_bound(4, 2), 2304);
  EXPECT_EQ(multicolor_upper_bound(5, 1), 32);
  EXPECT_EQ(covering_tuple_bound(6, 3), BigInt(10) * 10 * 10 * 10 * 10 * 10 * 216);
}

TEST(Covering, UpperBoundDominatesAllThreeColoringsOfK4) {
  const auto best = exhaustive_coloring_extremal(4, 3, Quantity::multiproduct, Direction::max);
  EXPECT_LE(*best.value, multicolor_upper_bound(4, 3));
}

TEST(Tournament, Orientation) {
  const Tournament t = Tournament::cyclic(3);
  EXPECT_TRUE(t.beats(0, 1));
  EXPECT_TRUE(t.beats(1, 2));
  EXPECT_TRUE(t.beats(2, 0));
  EXPECT_FALSE(t.beats(0, 2));
  EXPECT_EQ(t.arcs(), (std::vector<std::pair<int, int>>{{0, 1}, {2, 0}, {1, 2}}));
}

TEST(Tournament, BlocksAsEqualAsPossible) {
  const auto blocks = tournament_blocks(7, Tournament(3));
  ASSERT_EQ(blocks.size(), 3U);
  EXPECT_EQ(blocks[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(blocks[1], (VertexSet{3, 4}));
  EXPECT_EQ(blocks[2], (VertexSet{5, 6}));
}

TEST(Tournament, TwoColorsGiveCompleteAndEmpty) {
  for (int n = 1; n <= 10; ++n) {
    const auto fam = tournament_construction(n, 2, Tournament(2));
    EXPECT_EQ(fam.member(0), Graph::complete(n));
    EXPECT_EQ(fam.member(1), Graph(n));
    EXPECT_EQ(product_clique_counts(fam), (BigInt(n) + 1) << n);
  }
}

TEST(Tournament, CyclicTriangle) {
  const auto fam = tournament_construction(3, 3, Tournament::cyclic(3));
  for (int c = 0; c < 3; ++c) EXPECT_EQ(fam.member(c).edge_count(), 1);
  EXPECT_EQ(member_clique_counts(fam), (std::vector<BigInt>{5, 5, 5}));
  EXPECT_EQ(product_clique_counts(fam), 125);
  EXPECT_EQ(tournament_product_formula(3, Tournament::cyclic(3)), 64);
}

TEST(Tournament, ProductsAgainstEnumeration) {
  // Clique counts per member from subset enumeration.
  EXPECT_EQ(member_clique_counts(tournament_construction(6, 3, Tournament::cyclic(3))), (std::vector<BigInt>{14, 14, 14}));
  EXPECT_EQ(member_clique_counts(tournament_construction(6, 3, Tournament(3))), (std::vector<BigInt>{18, 14, 11}));
  EXPECT_EQ(product_clique_counts(tournament_construction(9, 3, Tournament::cyclic(3))), 42875);
  EXPECT_EQ(product_clique_counts(tournament_construction(9, 3, Tournament(3))), 44555);
  for (int n : {3, 6, 9})
    EXPECT_GE(product_clique_counts(tournament_construction(n, 3, Tournament::cyclic(3))), BigInt(n / 3) * (n / 3) * (n / 3) << n);
}

TEST(Tournament, RandomTournamentsAreEdgeDisjoint) {
  Rng rng = trial_rng(48, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(uniform_below(rng, 5));
    Tournament t(r);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (rng() & 1U) t.orient(j, i);
    const int n = 1 + static_cast<int>(uniform_below(rng, 40));
    const auto fam = tournament_construction(n, r, t);
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        for (Vertex v = 0; v < n; ++v) ASSERT_EQ(fam.member(a).row(v) & fam.member(b).row(v), 0U);
    // Arcs of a triangle pairwise meet, so only r >= 4 leaves pairs uncolored.
    if (r == 3) {
      EXPECT_TRUE(fam.covers_all_edges());
    } else if (r >= 4 && n >= r * (r - 1) / 2) {
      EXPECT_FALSE(fam.covers_all_edges());
    }
    EXPECT_GE(product_clique_counts(fam), tournament_product_formula(n, t));
  }
}

}  // namespace
}  // namespace ngc
