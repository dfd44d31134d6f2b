#include <gtest/gtest.h>

#include "fastsi/neighborhood.h"
#include "fastsi/oracle.h"
#include "support.h"

namespace fastsi {
namespace {

using testing::SmallPair;

TEST(Neighborhood, SmallPairExamples) {
  SmallPair f;
  const LabeledNeighborhood v1 = {{f.v("A"), f.e("X")}, {f.v("B"), f.e("Y")}, {f.v("B"), f.e("Y")}};
  EXPECT_EQ(compute_neighborhood(f.g, 0), v1);
  EXPECT_EQ(compute_neighborhood(f.g, 1), v1);
  const LabeledNeighborhood u1 = {{f.v("B"), f.e("Y")}, {f.v("B"), f.e("Y")}};
  EXPECT_EQ(compute_neighborhood(f.q, 0), u1);
}

TEST(Neighborhood, SingleEdge) {
  Alphabet a;
  const LabeledGraph g = testing::make_graph(a, "A B", {{0, 1, "X"}});
  const LabeledNeighborhood expected = {{*a.vertex.find("B"), *a.edge.find("X")}};
  EXPECT_EQ(compute_neighborhood(g, 0), expected);
  EXPECT_THROW(compute_neighborhood(g, 2), Error);
}

TEST(MultisetIncludes, Examples) {
  const NeighborhoodEntry ax{0, 0}, by{1, 1};
  const LabeledNeighborhood two_by = {by, by};
  const LabeledNeighborhood big = {ax, by, by};
  const LabeledNeighborhood one_by = {by};
  EXPECT_TRUE(multiset_includes(two_by, big));
  EXPECT_FALSE(multiset_includes(two_by, one_by));
  EXPECT_TRUE(multiset_includes({}, one_by));
  EXPECT_TRUE(multiset_includes({}, {}));
  EXPECT_FALSE(multiset_includes(one_by, {}));
}

TEST(NeighborhoodTable, SmallPairDistinctCounts) {
  SmallPair f;
  const NeighborhoodIndex idx = build_index(f.q, f.g);
  EXPECT_EQ(idx.data.dln.size(), 3u);
  EXPECT_EQ(idx.data.position[0], idx.data.position[1]);
  EXPECT_EQ(idx.data.position[2], idx.data.position[4]);
  EXPECT_NE(idx.data.position[3], idx.data.position[0]);
  EXPECT_NE(idx.data.position[3], idx.data.position[2]);
  EXPECT_EQ(idx.query.dln.size(), 2u);
  EXPECT_EQ(idx.query.position[1], idx.query.position[2]);
  EXPECT_TRUE(idx.test().admits(0, 0));
}

TEST(NeighborhoodTable, SelfIndexIsReflexive) {
  SmallPair f;
  const NeighborhoodIndex idx = build_index(f.g, f.g);
  for (VertexId v = 0; v < f.g.num_vertices(); ++v) EXPECT_TRUE(idx.test().admits(v, v));
}

TEST(NeighborhoodProperties, CachedMatrixMatchesDirectTest) {
  Rng rng(303);
  InclusionMemo memo;
  for (int i = 0; i < 300; ++i) {
    const LabeledGraph q = testing::random_connected_graph(rng, {1, 12, 3, 2, 30});
    const LabeledGraph g = testing::random_connected_graph(rng, {1, 12, 3, 2, 30});
    const NeighborhoodIndex idx = build_index(q, g);
    for (std::size_t k = 0; k < idx.data.dln.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) EXPECT_NE(idx.data.dln[j], idx.data.dln[k]);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(idx.data.of(v), compute_neighborhood(g, v));
    const InclusionTest lazy(idx.query, idx.data, memo);
    for (VertexId u = 0; u < q.num_vertices(); ++u) {
      const auto nu = compute_neighborhood(q, u);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto nv = compute_neighborhood(g, v);
        const bool direct = multiset_includes(nu, nv);
        EXPECT_EQ(idx.test().admits(u, v), direct);
        EXPECT_EQ(lazy.admits(u, v), direct);
        if (direct) EXPECT_LE(nu.size(), nv.size());
      }
    }
  }
}

TEST(NeighborhoodProperties, NoOracleWitnessIsPruned) {
  Rng rng(404);
  for (int i = 0; i < 400; ++i) {
    const auto p = testing::random_pair(rng);
    for (const Mapping& m : oracle::enumerate(p.q, p.g)) {
      for (VertexId u = 0; u < p.q.num_vertices(); ++u) {
        EXPECT_TRUE(multiset_includes(compute_neighborhood(p.q, u), compute_neighborhood(p.g, *m.image(u))));
      }
    }
  }
}

TEST(InclusionMemo, GenerationsIsolateRuns) {
  InclusionMemo memo;
  memo.reset(4);
  memo.put(2, true);
  EXPECT_EQ(memo.get(2), 2);
  EXPECT_EQ(memo.get(1), 0);
  memo.reset(4);
  EXPECT_EQ(memo.get(2), 0);
  memo.put(2, false);
  EXPECT_EQ(memo.get(2), 1);
}

}  // namespace
}  // namespace fastsi
