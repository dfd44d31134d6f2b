#ifndef FASTSI_TESTS_SUPPORT_H_
#define FASTSI_TESTS_SUPPORT_H_

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fastsi/generator.h"
#include "fastsi/graph.h"

namespace fastsi::testing {

struct EdgeText {
  VertexId u;
  VertexId v;
  std::string label;
};

// Builds a graph from space-separated vertex label names, interning into `a`.
inline LabeledGraph make_graph(Alphabet& a, const std::string& vertex_labels, const std::vector<EdgeText>& edges,
                               Connectivity connectivity = Connectivity::kRequire) {
  std::vector<Label> labels;
  std::istringstream in(vertex_labels);
  for (std::string name; in >> name;) labels.push_back(a.vertex.intern(name));
  std::vector<EdgeSpec> specs;
  for (const EdgeText& e : edges) specs.push_back({e.u, e.v, a.edge.intern(e.label)});
  return build_graph(std::move(labels), specs, connectivity);
}

// Triangle query and a five-vertex data graph holding four witnesses.
struct SmallPair {
  Alphabet alphabet;
  LabeledGraph q;
  LabeledGraph g;

  SmallPair() {
    g = make_graph(alphabet, "A A B B B",
                   {{0, 1, "X"}, {0, 2, "Y"}, {0, 3, "Y"}, {1, 3, "Y"}, {1, 4, "Y"}, {2, 3, "Z"}, {3, 4, "Z"}});
    q = make_graph(alphabet, "A B B", {{0, 1, "Y"}, {0, 2, "Y"}, {1, 2, "Z"}});
  }

  Label v(const char* name) const { return *alphabet.vertex.find(name); }
  Label e(const char* name) const { return *alphabet.edge.find(name); }
};

// Two isomorphic 4-cycles A-B-C-B with exactly two bijections between them.
struct IsomorphicCycles {
  Alphabet alphabet;
  LabeledGraph g1;
  LabeledGraph g2;

  IsomorphicCycles() {
    g1 = make_graph(alphabet, "A B C B", {{0, 1, "X"}, {1, 2, "Y"}, {2, 3, "Y"}, {3, 0, "X"}});
    g2 = make_graph(alphabet, "B A B C", {{1, 0, "X"}, {0, 3, "Y"}, {3, 2, "Y"}, {2, 1, "X"}});
  }
};

// Query of the cover example: 5 vertices, 7 edges, unlabeled.
inline LabeledGraph cover_example_query(Alphabet& a) {
  return make_graph(a, "A A A A A",
                    {{2, 0, ""}, {0, 1, ""}, {0, 3, ""}, {3, 1, ""}, {4, 1, ""}, {1, 2, ""}, {3, 4, ""}});
}

inline LabeledGraph complete_graph(std::size_t n, Label vertex_label = 0, Label edge_label = kDefaultEdgeLabel) {
  std::vector<EdgeSpec> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, edge_label});
  }
  return build_graph(std::vector<Label>(n, vertex_label), edges);
}

inline LabeledGraph path_graph(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, kDefaultEdgeLabel});
  return build_graph(std::vector<Label>(n, 0), edges);
}

inline LabeledGraph star_graph(std::size_t leaves) {
  std::vector<EdgeSpec> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v, kDefaultEdgeLabel});
  return build_graph(std::vector<Label>(leaves + 1, 0), edges);
}

struct RandomShape {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 9;
  std::size_t vertex_labels = 4;
  std::size_t edge_labels = 3;
  // Chance, in percent, that each non-tree vertex pair becomes an edge.
  unsigned extra_edge_percent = 25;
};

// Random connected graph: random recursive tree plus independent extra edges.
inline LabeledGraph random_connected_graph(Rng& rng, const RandomShape& s) {
  const std::size_t n = rng.between(s.min_vertices, s.max_vertices);
  std::vector<Label> labels(n);
  for (Label& l : labels) l = static_cast<Label>(rng.below(s.vertex_labels));
  std::set<std::pair<VertexId, VertexId>> present;
  std::vector<EdgeSpec> edges;
  auto add = [&](VertexId a, VertexId b) {
    if (present.insert({std::min(a, b), std::max(a, b)}).second) {
      edges.push_back({a, b, static_cast<Label>(rng.below(s.edge_labels))});
    }
  };
  for (VertexId v = 1; v < n; ++v) add(static_cast<VertexId>(rng.below(v)), v);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!present.count({u, v}) && rng.below(100) < s.extra_edge_percent) add(u, v);
    }
  }
  return build_graph(std::move(labels), edges);
}

// Random connected subgraph of g on at most `max_vertices` vertices, with
// vertices renumbered in random order. Not necessarily induced.
inline LabeledGraph random_subgraph(Rng& rng, const LabeledGraph& g, std::size_t max_vertices) {
  const std::size_t target = std::min<std::size_t>(rng.between(1, max_vertices), g.num_vertices());
  std::vector<VertexId> chosen{static_cast<VertexId>(rng.below(g.num_vertices()))};
  std::vector<std::uint8_t> in(g.num_vertices(), 0);
  in[chosen[0]] = 1;
  std::vector<EdgeSpec> tree;
  while (chosen.size() < target) {
    std::vector<std::pair<VertexId, const Neighbor*>> frontier;
    for (VertexId u : chosen) {
      for (const Neighbor& nb : g.neighbors(u)) {
        if (!in[nb.vertex]) frontier.push_back({u, &nb});
      }
    }
    if (frontier.empty()) break;
    const auto [u, nb] = frontier[rng.below(frontier.size())];
    in[nb->vertex] = 1;
    chosen.push_back(nb->vertex);
    tree.push_back({u, nb->vertex, nb->edge_label});
  }
  std::vector<VertexId> rename(g.num_vertices(), kNoVertex);
  std::vector<VertexId> ids(chosen.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
  rng.shuffle(ids);
  for (std::size_t i = 0; i < chosen.size(); ++i) rename[chosen[i]] = ids[i];

  std::vector<Label> labels(chosen.size());
  for (VertexId v : chosen) labels[rename[v]] = g.label(v);
  std::vector<EdgeSpec> edges;
  for (const EdgeSpec& e : tree) edges.push_back({rename[e.u], rename[e.v], e.label});
  for (const EdgeSpec& e : g.edges()) {
    if (!in[e.u] || !in[e.v]) continue;
    const bool is_tree = std::any_of(tree.begin(), tree.end(), [&](const EdgeSpec& t) {
      return (t.u == e.u && t.v == e.v) || (t.u == e.v && t.v == e.u);
    });
    if (!is_tree && rng.below(2)) edges.push_back({rename[e.u], rename[e.v], e.label});
  }
  return build_graph(std::move(labels), edges);
}

// A (q, G) pair of the shape used for engine cross-checks: about half of the
// queries are carved out of G, the rest are independent.
struct RandomPair {
  LabeledGraph q;
  LabeledGraph g;
};

inline RandomPair random_pair(Rng& rng, std::size_t max_query_vertices = 6, std::size_t max_data_vertices = 9,
                              std::size_t vertex_labels = 4, std::size_t edge_labels = 3) {
  RandomShape data{3, max_data_vertices, vertex_labels, edge_labels, 30};
  RandomPair p;
  p.g = random_connected_graph(rng, data);
  if (rng.below(2)) {
    p.q = random_subgraph(rng, p.g, max_query_vertices);
  } else {
    RandomShape query{1, max_query_vertices, vertex_labels, edge_labels, 20};
    p.q = random_connected_graph(rng, query);
  }
  return p;
}

}  // namespace fastsi::testing

#endif  // FASTSI_TESTS_SUPPORT_H_
