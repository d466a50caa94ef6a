#include <gtest/gtest.h>

#include "ngclique/compression.hpp"
#include "ngclique/counting.hpp"
#include "ngclique/graph6.hpp"
#include "ngclique/random.hpp"
#include "ngclique/threshold.hpp"

namespace ngc {
namespace {

TEST(Partition, SingleEdge) {
  // x = 0, y = 1, z = 2, edge xz.
  const Graph g(3, {{0, 2}});
  const auto p = partition(g, 0, 1);
  EXPECT_EQ(p.private_x, VertexSet{2});
  EXPECT_TRUE(p.private_y.empty());
  EXPECT_TRUE(p.common.empty());
  EXPECT_TRUE(p.outside.empty());
}

TEST(Partition, TriangleAndEmpty) {
  EXPECT_EQ(partition(Graph::complete(3), 2, 0).common, VertexSet{1});
  EXPECT_EQ(partition(Graph::empty(3), 1, 2).outside, VertexSet{0});
}

TEST(Partition, RejectsEqualVertices) {
  EXPECT_THROW(partition(Graph::complete(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(compress(Graph::complete(3), 2, 2), std::invalid_argument);
  EXPECT_THROW(partition(Graph::complete(3), 0, 3), std::out_of_range);
}

TEST(Partition, CoversRestDisjointly) {
  Rng rng = trial_rng(4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 20));
    const Graph g = sample_random_graph(n, rng);
    const auto x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    auto y = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    if (y >= x) ++y;
    const auto p = partition(g, x, y);
    const VertexSet all[] = {p.private_x, p.private_y, p.common, p.outside};
    VertexSet uni;
    int total = 0;
    for (const auto& s : all) {
      uni = uni | s;
      total += s.size();
    }
    EXPECT_EQ(uni, g.vertices().without(VertexSet{x, y}));
    EXPECT_EQ(total, n - 2);
    for (Vertex v : p.private_x) EXPECT_TRUE(g.adjacent(v, x) && !g.adjacent(v, y));
  }
}

TEST(Compress, MovesPrivateNeighbors) {
  const Graph g(3, {{0, 2}});
  const Graph out = compress(g, 0, 1);
  EXPECT_EQ(out, Graph(3, {{1, 2}}));
  EXPECT_EQ(independent_count(g), 6);
  EXPECT_EQ(independent_count(out), 6);
}

TEST(Compress, IdentityWhenSourceHasNoPrivateNeighbors) {
  const Graph g = Graph::complete(4);
  EXPECT_EQ(compress(g, 0, 3), g);
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(compress(star, 1, 0), star);
}

TEST(Compress, PostconditionsAndComplementRelation) {
  Rng rng = trial_rng(12, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 11));
    const Graph g = sample_random_graph(n, rng);
    const auto x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    auto y = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    if (y >= x) ++y;
    const auto before = partition(g, x, y);
    const Graph out = compress(g, x, y);
    const auto after = partition(out, x, y);
    EXPECT_TRUE(after.private_x.empty());
    EXPECT_EQ(after.private_y, before.private_x | before.private_y);
    EXPECT_EQ(after.common, before.common);
    EXPECT_EQ(after.outside, before.outside);
    EXPECT_EQ(out.adjacent(x, y), g.adjacent(x, y));
    EXPECT_EQ(out.edge_count(), g.edge_count());
    EXPECT_EQ(complement(out), compress(complement(g), y, x));
  }
}

TEST(Compress, IndependentCountsMonotone) {
  Rng rng = trial_rng(13, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 11));
    const Graph g = sample_random_graph(n, rng);
    const auto x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    auto y = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    if (y >= x) ++y;
    const Graph out = compress(g, x, y);
    const auto before = independent_profile(g);
    const auto after = independent_profile(out);
    const auto before_c = independent_profile(complement(g));
    const auto after_c = independent_profile(complement(out));
    for (int t = 0; t <= n; ++t) {
      ASSERT_GE(after.at(t), before.at(t)) << emit_graph6(g) << " " << x << "->" << y;
      ASSERT_GE(after_c.at(t), before_c.at(t)) << emit_graph6(g) << " " << x << "->" << y;
    }
  }
}

TEST(CompressToThreshold, ThresholdInputUnchanged) {
  for (const char* code : {"", "+", "-", "++-+-", "---+", "+-+-+-+"}) {
    const Graph g = build(ThresholdCode::from_display(code));
    const auto trace = compress_to_threshold(g);
    EXPECT_EQ(trace.result, g);
    EXPECT_TRUE(trace.pivots.empty());
  }
}

TEST(CompressToThreshold, FourCycle) {
  const Graph c4 = Graph::cycle(4);
  const auto trace = compress_to_threshold(c4);
  EXPECT_TRUE(is_threshold(trace.result));
  EXPECT_FALSE(trace.pivots.empty());
  EXPECT_GE(pi(trace.result), pi(c4));
  EXPECT_EQ(replay(c4, trace.pivots), trace.result);
}

TEST(CompressToThreshold, FiveCycle) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_EQ(pi(c5), 121);
  const auto trace = compress_to_threshold(c5);
  EXPECT_TRUE(is_threshold(trace.result));
  EXPECT_GE(pi(trace.result), 121);
}

TEST(CompressToThreshold, TraceProperties) {
  Rng rng = trial_rng(14, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 14));
    const Graph g = sample_random_graph(n, rng);
    const auto trace = compress_to_threshold(g);
    ASSERT_TRUE(is_threshold(trace.result)) << emit_graph6(g);
    ASSERT_LE(trace.pivots.size(), static_cast<std::size_t>(n * n));
    ASSERT_EQ(replay(g, trace.pivots), trace.result);
    Graph cur = g;
    auto prev = ng_profile(cur);
    std::uint64_t prev_sq = degree_square_sum(cur);
    for (const auto& p : trace.pivots) {
      cur = compress(cur, p.source, p.target);
      const auto next = ng_profile(cur);
      ASSERT_GT(degree_square_sum(cur), prev_sq);
      ASSERT_GE(next.pi(), prev.pi());
      for (int t = 0; t <= n; ++t) ASSERT_GE(next.pi_t(t), prev.pi_t(t));
      prev = next;
      prev_sq = degree_square_sum(cur);
    }
    EXPECT_LE(prev_sq, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>((n - 1) * (n - 1)));
  }
}

TEST(CompressToThreshold, PivotOrientation) {
  // P_4 = 0-1-2-3: (0,1) and (0,2) are nested, (0,3) is not. Equal degrees, so 0 is the target.
  const Graph p4 = Graph::path(4);
  Pivot pivot{};
  ASSERT_TRUE(next_pivot(p4, pivot));
  EXPECT_EQ(pivot, (Pivot{3, 0}));
  const auto parts = partition(p4, pivot.source, pivot.target);
  EXPECT_FALSE(parts.private_x.empty());
  EXPECT_FALSE(parts.private_y.empty());
  EXPECT_GE(p4.degree(pivot.target), p4.degree(pivot.source));
}

}  // namespace
}  // namespace ngc
