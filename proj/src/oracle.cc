#include "fastsi/oracle.h"

#include <algorithm>
#include <set>

namespace fastsi::oracle {

namespace {

// Edge label by linear scan over the edge list.
std::optional<Label> scan_edge(const LabeledGraph& g, VertexId a, VertexId b) {
  for (const EdgeSpec& e : g.edges()) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.label;
  }
  return std::nullopt;
}

void assign(const LabeledGraph& q, const LabeledGraph& g, std::size_t u, std::vector<VertexId>& images,
            std::vector<bool>& used, std::vector<Mapping>& out) {
  if (u == q.num_vertices()) {
    if (is_witness(q, g, images)) out.push_back(Mapping::from_images(images, g.num_vertices()));
    return;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (used[v] || q.label(static_cast<VertexId>(u)) != g.label(v)) continue;
    used[v] = true;
    images[u] = v;
    assign(q, g, u + 1, images, used, out);
    images[u] = kNoVertex;
    used[v] = false;
  }
}

}  // namespace

bool is_witness(const LabeledGraph& q, const LabeledGraph& g, const std::vector<VertexId>& images) {
  if (images.size() != q.num_vertices()) return false;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a] >= g.num_vertices()) return false;
    if (q.label(static_cast<VertexId>(a)) != g.label(images[a])) return false;
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (images[a] == images[b]) return false;
    }
  }
  for (const EdgeSpec& e : q.edges()) {
    const auto label = scan_edge(g, images[e.u], images[e.v]);
    if (!label || *label != e.label) return false;
  }
  return true;
}

std::vector<Mapping> enumerate(const LabeledGraph& q, const LabeledGraph& g) {
  if (q.num_vertices() > kMaxQueryVertices || g.num_vertices() > kMaxDataVertices) {
    throw Error(ErrorCode::kTooLargeForOracle, "oracle limited to |V_q| <= 8 and |V_G| <= 12");
  }
  std::vector<Mapping> out;
  std::vector<VertexId> images(q.num_vertices(), kNoVertex);
  std::vector<bool> used(g.num_vertices(), false);
  assign(q, g, 0, images, used, out);
  return out;
}

std::vector<Mapping> dedupe_redundant(const std::vector<Mapping>& witnesses, const LabeledGraph& q,
                                      const LabeledGraph& /*g*/) {
  std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
  std::vector<Mapping> out;
  for (const Mapping& m : witnesses) {
    std::vector<std::pair<VertexId, VertexId>> key;
    const auto& images = m.images();
    if (q.num_edges() == 0) {
      for (VertexId v : images) key.emplace_back(v, v);
    } else {
      for (const EdgeSpec& e : q.edges()) key.emplace_back(std::minmax(images[e.u], images[e.v]));
    }
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(m);
  }
  return out;
}

}  // namespace fastsi::oracle
