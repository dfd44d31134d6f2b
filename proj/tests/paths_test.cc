#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fastsi/fast_p.h"
#include "fastsi/oracle.h"
#include "fastsi/paths.h"
#include "support.h"

namespace fastsi {
namespace {

using testing::SmallPair;

std::set<std::pair<VertexId, VertexId>> edges_of(const SimplePath& p) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    out.insert(std::minmax(p.vertices[i], p.vertices[i + 1]));
  }
  return out;
}

void expect_disjoint_cover(const LabeledGraph& q, const PathCover& c) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const CanonicalPath& p : c.paths) {
    EXPECT_GE(p.size(), 1u);
    EXPECT_LE(p.size(), static_cast<std::size_t>(c.max_length));
    for (const auto& e : edges_of(p.path)) {
      EXPECT_TRUE(q.has_edge(e.first, e.second));
      EXPECT_TRUE(seen.insert(e).second) << "edge used twice";
    }
  }
  EXPECT_EQ(seen.size(), q.num_edges());
}

LabeledGraph unlabeled_copy(const LabeledGraph& g) {
  std::vector<EdgeSpec> edges(g.edges().begin(), g.edges().end());
  for (EdgeSpec& e : edges) e.label = kDefaultEdgeLabel;
  return build_graph(std::vector<Label>(g.num_vertices(), 0), edges);
}

TEST(EnumeratePaths, SmallPairHas21PathsUpToLength2) {
  SmallPair f;
  const auto paths = enumerate_paths(f.g, 2);
  EXPECT_EQ(paths.size(), 21u);
  std::size_t ones = 0;
  for (const auto& p : paths) ones += p.size() == 1;
  EXPECT_EQ(ones, 7u);
}

TEST(EnumeratePaths, SmallCases) {
  Alphabet a;
  const LabeledGraph edge = testing::make_graph(a, "A B", {{0, 1, "X"}});
  const auto one = enumerate_paths(edge, 2);
  ASSERT_EQ(one.size(), 1u);
  const PathCode axb = {*a.vertex.find("A"), *a.edge.find("X"), *a.vertex.find("B")};
  EXPECT_EQ(one[0].code, axb);

  testing::SmallPair f;
  EXPECT_EQ(enumerate_paths(f.q, 1).size(), 3u);
}

TEST(EnumeratePaths, LengthGuards) {
  SmallPair f;
  EXPECT_THROW(enumerate_paths(f.g, 5), Error);
  EXPECT_THROW(enumerate_paths(f.g, 0), Error);
  EXPECT_NO_THROW(enumerate_paths(f.g, 5, 5));
}

TEST(EnumeratePaths, SortedByCodeAndCanonical) {
  SmallPair f;
  const auto paths = enumerate_paths(f.g, 3);
  for (std::size_t i = 1; i < paths.size(); ++i) EXPECT_LE(paths[i - 1].code, paths[i].code);
  for (const auto& p : paths) {
    EXPECT_EQ(p.code, path_code(f.g, {p.path.vertices.data(), p.path.vertices.size()}));
    EXPECT_EQ(p.code, canonical_code(p.path, f.g));
    EXPECT_EQ(p.code.size(), 2 * p.size() + 1);
    EXPECT_EQ(p.is_iso, classify_iso(p.path, f.g));
  }
}

TEST(ClassifyIso, SmallPairExamples) {
  SmallPair f;
  EXPECT_TRUE(classify_iso(SimplePath{{2, 3, 4}}, f.g));
  EXPECT_FALSE(classify_iso(SimplePath{{1, 0, 3}}, f.g));
  // Any single edge between equal vertex labels.
  EXPECT_TRUE(classify_iso(SimplePath{{0, 1}}, f.g));
  EXPECT_TRUE(classify_iso(SimplePath{{2, 3}}, f.g));
}

TEST(CanonicalCode, SmallPairExamples) {
  SmallPair f;
  const PathCode axayb = {f.v("A"), f.e("X"), f.v("A"), f.e("Y"), f.v("B")};
  EXPECT_EQ(canonical_code(SimplePath{{1, 0, 3}}, f.g), axayb);
  EXPECT_EQ(canonical_code(SimplePath{{3, 0, 1}}, f.g), axayb);

  const CanonicalPath c = make_canonical(SimplePath{{3, 0, 1}}, f.g);
  EXPECT_EQ(c.orientation, Orientation::kReversed);
  EXPECT_EQ(c.path, (SimplePath{{1, 0, 3}}));
  EXPECT_FALSE(c.is_iso);

  const CanonicalPath iso = make_canonical(SimplePath{{4, 3, 2}}, f.g);
  EXPECT_TRUE(iso.is_iso);
  EXPECT_EQ(iso.path, (SimplePath{{2, 3, 4}}));

  Alphabet a;
  const LabeledGraph g = testing::make_graph(a, "A B", {{0, 1, "X"}});
  const PathCode axb = {*a.vertex.find("A"), *a.edge.find("X"), *a.vertex.find("B")};
  EXPECT_EQ(canonical_code(SimplePath{{1, 0}}, g), axb);
}

TEST(Cover, ExampleQueryNeedsFourPaths) {
  Alphabet a;
  const LabeledGraph q = testing::cover_example_query(a);
  const PathCover c = cover(q, enumerate_paths(q, 2), 2);
  EXPECT_EQ(c.paths.size(), 4u);
  expect_disjoint_cover(q, c);
}

TEST(Cover, CompleteGraphK7) {
  const LabeledGraph k7 = testing::complete_graph(7);
  const PathCover two = cover(k7, enumerate_paths(k7, 2), 2);
  EXPECT_EQ(two.paths.size(), 11u);
  expect_disjoint_cover(k7, two);
  EXPECT_EQ(cover(k7, enumerate_paths(k7, 1), 1).paths.size(), 21u);
}

TEST(Cover, SingleEdge) {
  const LabeledGraph e = testing::path_graph(2);
  for (int m = 1; m <= 4; ++m) {
    const PathCover c = build_ordered_cover(e, m);
    ASSERT_EQ(c.paths.size(), 1u);
    EXPECT_EQ(c.paths[0].size(), 1u);
  }
}

TEST(Cover, VertexFrequencies) {
  Alphabet a;
  const LabeledGraph q = testing::cover_example_query(a);
  const PathCover c = build_ordered_cover(q, 2);
  std::vector<std::uint32_t> freq(q.num_vertices(), 0);
  for (const auto& p : c.paths) {
    for (VertexId v : p.path.vertices) ++freq[v];
  }
  EXPECT_EQ(c.vertex_freq, freq);
}

TEST(OrderCover, StarPutsHubFirst) {
  const LabeledGraph star = testing::star_graph(4);
  const PathCover c = build_ordered_cover(star, 2);
  ASSERT_EQ(c.paths.size(), 2u);
  const auto& first = c.paths[0].path.vertices;
  EXPECT_NE(std::find(first.begin(), first.end(), 0u), first.end());
}

TEST(OrderCover, ChainSharesOneVertex) {
  const LabeledGraph chain = testing::path_graph(5);
  const PathCover c = build_ordered_cover(chain, 2);
  ASSERT_EQ(c.paths.size(), 2u);
  std::set<VertexId> a(c.paths[0].path.vertices.begin(), c.paths[0].path.vertices.end());
  std::size_t shared = 0;
  for (VertexId v : c.paths[1].path.vertices) shared += a.count(v);
  EXPECT_EQ(shared, 1u);
}

TEST(OrderCover, SinglePathUnchanged) {
  const LabeledGraph chain = testing::path_graph(3);
  const PathCover c = cover(chain, enumerate_paths(chain, 2), 2);
  ASSERT_EQ(c.paths.size(), 1u);
  const PathCover o = order_cover(chain, c);
  ASSERT_EQ(o.paths.size(), 1u);
  EXPECT_EQ(o.paths[0].path, c.paths[0].path);
}

TEST(ResidualGraph, ConnectivityExamples) {
  const LabeledGraph k3 = testing::complete_graph(3);
  ResidualGraph triangle(k3);
  EXPECT_TRUE(triangle.connected_after_removal(SimplePath{{0, 1}}));

  const LabeledGraph p3 = testing::path_graph(3);
  ResidualGraph chain(p3);
  EXPECT_TRUE(chain.connected_after_removal(SimplePath{{0, 1}}));
  EXPECT_TRUE(chain.connected_after_removal(SimplePath{{0, 1, 2}}));
  EXPECT_EQ(chain.num_edges(), 2u);

  const LabeledGraph bridged = build_graph(
      std::vector<Label>(6, 0), std::vector<EdgeSpec>{{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {2, 3, 0}, {3, 4, 0},
                                                      {4, 5, 0}, {3, 5, 0}});
  ResidualGraph r(bridged);
  EXPECT_FALSE(r.connected_after_removal(SimplePath{{2, 3}}));
  EXPECT_TRUE(r.contains(SimplePath{{2, 3}}));
  r.remove(SimplePath{{0, 1, 2}});
  EXPECT_FALSE(r.contains(SimplePath{{0, 1}}));
  EXPECT_EQ(r.num_edges(), 5u);
  EXPECT_TRUE(r.connected_after_removal(SimplePath{{0, 2, 3}}));
}

TEST(MaxLengthRules, Examples) {
  testing::SmallPair f;
  EXPECT_TRUE(edge_ratio_rule(f.q, 2));
  EXPECT_EQ(choose_max_length(f.q).max_length, 2);
  EXPECT_TRUE(choose_max_length(f.q).rule_satisfied);

  const LabeledGraph k7 = testing::complete_graph(7);
  EXPECT_DOUBLE_EQ(query_density(k7), 1.0);
  const MaxLengthChoice k7_choice = choose_max_length(k7);
  EXPECT_EQ(k7_choice.max_length, 4);
  EXPECT_TRUE(k7_choice.rule_satisfied);
  EXPECT_FALSE(choose_max_length(k7, 2).rule_satisfied);
  EXPECT_EQ(choose_max_length(k7, 2).max_length, 2);
  EXPECT_FALSE(choose_max_length(k7, std::nullopt, 3).rule_satisfied);

  const LabeledGraph edge = testing::path_graph(2);
  EXPECT_EQ(choose_max_length(edge).max_length, 2);
  EXPECT_TRUE(edge_ratio_rule(edge, 1));
}

TEST(PathProperties, CoverOfRandomQueries) {
  Rng rng(505);
  int checked = 0;
  while (checked < 600) {
    const LabeledGraph q = testing::random_connected_graph(rng, {2, 12, 3, 2, 20});
    if (q.num_edges() > 20) continue;
    ++checked;
    for (int m = 1; m <= 3; ++m) {
      const auto paths = enumerate_paths(q, m);
      const PathCover c = cover(q, paths, m);
      expect_disjoint_cover(q, c);
      if (m == 1) EXPECT_EQ(c.paths.size(), q.num_edges());
      if (m == 2) EXPECT_EQ(c.paths.size(), q.num_edges() / 2 + q.num_edges() % 2);

      const PathCover o = order_cover(q, c);
      auto key = [](const PathCover& x) {
        std::multiset<std::pair<PathCode, std::vector<VertexId>>> s;
        for (const auto& p : x.paths) s.insert({p.code, {p.path.vertices.begin(), p.path.vertices.end()}});
        return s;
      };
      EXPECT_EQ(key(o), key(c));
      EXPECT_EQ(o.vertex_freq, c.vertex_freq);

      // Greedy order: each step maximizes overlap with the placed vertices.
      std::set<VertexId> placed;
      for (std::size_t i = 0; i < o.paths.size(); ++i) {
        auto score = [&](const CanonicalPath& p) {
          std::size_t s = 0;
          for (VertexId v : p.path.vertices) s += i == 0 ? o.vertex_freq[v] : placed.count(v);
          return s;
        };
        for (std::size_t j = i + 1; j < o.paths.size(); ++j) EXPECT_GE(score(o.paths[i]), score(o.paths[j]));
        placed.insert(o.paths[i].path.vertices.begin(), o.paths[i].path.vertices.end());
      }
    }
    for (const auto& p : enumerate_paths(q, 3)) {
      EXPECT_EQ(canonical_code(p.path, q), canonical_code(p.path.reversed(), q));
    }
  }
}

TEST(PathProperties, DensityRuleFormula) {
  Rng rng(606);
  for (int i = 0; i < 300; ++i) {
    const LabeledGraph q = testing::random_connected_graph(rng, {1, 10, 2, 1, 40});
    const double n = static_cast<double>(q.num_vertices());
    const double e = static_cast<double>(q.num_edges());
    const double d = n < 2 ? 0.0 : 2 * e / (n * (n - 1));
    EXPECT_DOUBLE_EQ(query_density(q), d);
    for (int m = 1; m <= 4; ++m) {
      if (n >= 2) EXPECT_EQ(density_rule(q, m), d < 2.0 * m / (n - 1));
      EXPECT_EQ(edge_ratio_rule(q, m), e / n < m);
    }
  }
}

TEST(PathProperties, EnumerationMatchesOracleEmbeddings) {
  Rng rng(707);
  for (int i = 0; i < 150; ++i) {
    const LabeledGraph g = testing::random_connected_graph(rng, {2, 9, 2, 2, 30});
    const LabeledGraph bare = unlabeled_copy(g);
    const auto paths = enumerate_paths(g, 3);
    for (std::size_t k = 1; k <= 3 && k < g.num_vertices(); ++k) {
      const auto directed = oracle::enumerate(testing::path_graph(k + 1), bare).size();
      const auto undirected = std::count_if(paths.begin(), paths.end(), [&](const auto& p) { return p.size() == k; });
      EXPECT_EQ(directed, 2 * static_cast<std::size_t>(undirected));
    }
  }
}

TEST(PathProperties, IsoPathEmbeddingsComeInPairs) {
  Rng rng(808);
  for (int i = 0; i < 150; ++i) {
    const LabeledGraph g = testing::random_connected_graph(rng, {2, 8, 2, 2, 30});
    const auto paths = enumerate_paths(g, 3);
    std::map<PathCode, std::size_t> per_code;
    for (const auto& p : paths) ++per_code[p.code];
    for (const auto& p : paths) {
      std::vector<Label> labels;
      std::vector<EdgeSpec> edges;
      for (std::size_t j = 0; j < p.path.vertices.size(); ++j) {
        labels.push_back(g.label(p.path.vertices[j]));
        if (j > 0) {
          const Label l = *g.edge_label(p.path.vertices[j - 1], p.path.vertices[j]);
          edges.push_back({static_cast<VertexId>(j - 1), static_cast<VertexId>(j), l});
        }
      }
      const LabeledGraph query = build_graph(labels, edges);
      const auto all = oracle::enumerate(query, g);
      const auto distinct = oracle::dedupe_redundant(all, query, g);
      EXPECT_EQ(all.size(), (p.is_iso ? 2 : 1) * distinct.size());
      EXPECT_EQ(distinct.size(), per_code[p.code]);
    }
  }
}

TEST(PathTable, LookupFindsEveryPath) {
  Rng rng(909);
  for (int i = 0; i < 100; ++i) {
    const LabeledGraph g = testing::random_connected_graph(rng, {2, 12, 3, 2, 30});
    const PathTable table(g, 2);
    EXPECT_EQ(table.max_length(), 2);
    for (std::size_t id = 0; id < table.paths().size(); ++id) {
      const auto range = table.lookup(table.paths()[id].code);
      ASSERT_LE(range.first_id, id);
      ASSERT_LT(id, range.first_id + range.paths.size());
      for (const auto& p : range.paths) EXPECT_EQ(p.code, table.paths()[id].code);
    }
    EXPECT_TRUE(table.lookup(PathCode{99, 99, 99}).paths.empty());
  }
}

}  // namespace
}  // namespace fastsi
