#include <gtest/gtest.h>

#include <sstream>

#include "fastsi/dataset.h"
#include "fastsi/fast_on.h"
#include "fastsi/generator.h"

namespace fastsi {
namespace {

std::string text_of(const GraphDataset& ds) {
  std::ostringstream out;
  write_dataset(ds, out);
  return out.str();
}

ErrorCode error_of(const GeneratorParams& p) {
  try {
    generate_dataset(p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "generated without error";
  return ErrorCode::kIoError;
}

TEST(Generator, DenseCorpusStatistics) {
  const GraphDataset ds = generate_dataset({100, 30, 0.5, 50, 1});
  ASSERT_EQ(ds.size(), 100u);
  EXPECT_NEAR(ds.average_edges(), 30.0, 2.0);
  for (const LabeledGraph& g : ds.graphs) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_GE(g.num_edges(), 24u);
    EXPECT_LE(g.num_edges(), 36u);
    EXPECT_LE(g.num_edges(), g.num_vertices() * (g.num_vertices() - 1) / 2);
  }
  EXPECT_LE(ds.alphabet.vertex.size(), 50u);
}

TEST(Generator, FullDensityGivesTriangles) {
  const GraphDataset ds = generate_dataset({20, 3, 1.0, 2, 9});
  for (const LabeledGraph& g : ds.graphs) {
    EXPECT_EQ(g.num_vertices(), 3u);
    EXPECT_EQ(g.num_edges(), 3u);
  }
}

TEST(Generator, InfeasibleParameters) {
  EXPECT_EQ(error_of({10, 1, 1.0, 2, 1}), ErrorCode::kInfeasibleParameters);
  EXPECT_EQ(error_of({10, 30, 0.0, 2, 1}), ErrorCode::kInfeasibleParameters);
  EXPECT_EQ(error_of({10, 30, 1.5, 2, 1}), ErrorCode::kInfeasibleParameters);
  EXPECT_EQ(error_of({10, 30, 0.5, 0, 1}), ErrorCode::kInfeasibleParameters);
}

TEST(Generator, VertexCountFromDensity) {
  EXPECT_EQ(vertices_for(3, 1.0), 3u);
  EXPECT_EQ(vertices_for(30, 0.5), 11u);
  EXPECT_EQ(vertices_for(21, 1.0), 7u);
  for (std::size_t e = 1; e <= 60; ++e) {
    for (double d : {0.05, 0.1, 0.3, 0.5, 1.0}) {
      const std::size_t n = vertices_for(e, d);
      EXPECT_GE(n, 3u);
      EXPECT_GE(n * (n - 1) / 2, e);
    }
  }
}

TEST(Generator, SameSeedSameBytes) {
  const GeneratorParams p{200, 20, 0.2, 8, 42};
  EXPECT_EQ(text_of(generate_dataset(p)), text_of(generate_dataset(p)));
  GeneratorParams other = p;
  other.seed = 43;
  EXPECT_NE(text_of(generate_dataset(p)), text_of(generate_dataset(other)));
}

TEST(Generator, DatasetNames) {
  const GeneratorParams p = parse_dataset_name("Syn10K.E30.D5.L50");
  EXPECT_EQ(p.count, 10000u);
  EXPECT_EQ(p.avg_edges, 30u);
  EXPECT_DOUBLE_EQ(p.density, 0.5);
  EXPECT_EQ(p.labels, 50u);
  EXPECT_EQ(dataset_name(p), "Syn10K.E30.D5.L50");
  EXPECT_EQ(parse_dataset_name("Syn2M.E10.D1.L5").count, 2000000u);
  EXPECT_DOUBLE_EQ(parse_dataset_name("Syn100.E10.D05.L5").density, 0.05);
  EXPECT_DOUBLE_EQ(parse_dataset_name("Syn100.E10.D10.L5").density, 1.0);
  for (const char* name : {"Syn100.E10.D05.L5", "Syn1K.E27.D1.L10", "Syn1K.E3.D10.L2"}) {
    EXPECT_EQ(dataset_name(parse_dataset_name(name)), name);
  }
  EXPECT_THROW(parse_dataset_name("Syn10K.E30.L50"), Error);
  EXPECT_THROW(parse_dataset_name("Foo10K.E30.D5.L50"), Error);
  EXPECT_THROW(parse_dataset_name("Syn10K.E30.D0.L50"), Error);
}

TEST(ExtractQueries, SizesConnectivityAndSources) {
  const GraphDataset ds = generate_dataset({100, 20, 0.2, 6, 5});
  for (std::size_t size : {4u, 8u, 12u}) {
    const QuerySet qs = extract_queries(ds, size, 40, size);
    ASSERT_EQ(qs.queries.size(), 40u);
    EXPECT_EQ(qs.name, "Q" + std::to_string(size));
    EXPECT_EQ(qs.nominal_size, size);
    EXPECT_TRUE(qs.queries.alphabet == ds.alphabet);
    for (std::size_t i = 0; i < qs.queries.size(); ++i) {
      const LabeledGraph& q = qs.queries.graphs[i];
      EXPECT_EQ(q.num_edges(), size);
      EXPECT_TRUE(q.is_connected());
      EXPECT_TRUE(fast_on_match(q, ds.graphs[qs.sources[i]]).found);
    }
  }
}

TEST(ExtractQueries, DeterministicAndGuarded) {
  const GraphDataset ds = generate_dataset({30, 10, 0.3, 4, 8});
  EXPECT_EQ(text_of(extract_queries(ds, 6, 10, 3).queries), text_of(extract_queries(ds, 6, 10, 3).queries));
  try {
    extract_queries(ds, 100, 1, 1);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleQuerySize);
  }
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(7);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.below(5);
    ASSERT_LT(x, 5u);
    ++seen[x];
  }
  for (int c : seen) EXPECT_GT(c, 120);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.between(3, 4);
    EXPECT_TRUE(x == 3 || x == 4);
  }
}

}  // namespace
}  // namespace fastsi
