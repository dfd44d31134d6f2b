#include "fastsi/neighborhood.h"

#include <algorithm>
#include <unordered_map>

namespace fastsi {

namespace {

struct NeighborhoodHash {
  std::size_t operator()(const LabeledNeighborhood& n) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ n.size();
    for (const auto& [vl, el] : n) {
      h ^= (std::uint64_t{vl} << 32) | el;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

LabeledNeighborhood compute_neighborhood(const LabeledGraph& g, VertexId u) {
  if (u >= g.num_vertices()) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(u) + " out of range");
  }
  LabeledNeighborhood out;
  out.reserve(g.degree(u));
  // Adjacency is already ordered by (vertex label, edge label).
  for (const Neighbor& nb : g.neighbors(u)) out.emplace_back(nb.vertex_label, nb.edge_label);
  return out;
}

bool multiset_includes(std::span<const NeighborhoodEntry> a, std::span<const NeighborhoodEntry> b) {
  if (a.size() > b.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i, ++j) {
    while (j < b.size() && b[j] < a[i]) ++j;
    if (j == b.size() || b[j] != a[i]) return false;
    // not enough entries left in b
    if (a.size() - i > b.size() - j) return false;
  }
  return true;
}

DistinctNeighborhoodTable build_neighborhood_table(const LabeledGraph& g) {
  DistinctNeighborhoodTable table;
  table.position.resize(g.num_vertices());
  std::unordered_map<LabeledNeighborhood, std::uint32_t, NeighborhoodHash> seen;
  seen.reserve(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    LabeledNeighborhood nl = compute_neighborhood(g, v);
    auto [it, inserted] = seen.try_emplace(std::move(nl), static_cast<std::uint32_t>(table.dln.size()));
    if (inserted) table.dln.push_back(it->first);
    table.position[v] = it->second;
  }
  return table;
}

InclusionMatrix InclusionMatrix::build(const DistinctNeighborhoodTable& query,
                                       const DistinctNeighborhoodTable& data) {
  InclusionMatrix m(query.dln.size(), data.dln.size());
  for (std::size_t i = 0; i < query.dln.size(); ++i) {
    for (std::size_t j = 0; j < data.dln.size(); ++j) {
      if (multiset_includes(query.dln[i], data.dln[j])) m.set(i, j);
    }
  }
  return m;
}

NeighborhoodIndex build_index(const LabeledGraph& q, const LabeledGraph& g) {
  NeighborhoodIndex index;
  index.query = build_neighborhood_table(q);
  index.data = build_neighborhood_table(g);
  index.inclusion = InclusionMatrix::build(index.query, index.data);
  return index;
}

}  // namespace fastsi
