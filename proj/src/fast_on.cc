#include "fastsi/fast_on.h"

#include <algorithm>

namespace fastsi {

PreparedGraph prepare_graph(const LabeledGraph& g, int path_max_length, int cap) {
  PreparedGraph out;
  out.graph = &g;
  out.neighborhoods = build_neighborhood_table(g);
  if (path_max_length > 0) out.paths.emplace(g, path_max_length, cap);
  out.by_label.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.by_label[v] = v;
  std::stable_sort(out.by_label.begin(), out.by_label.end(),
                   [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  return out;
}

std::span<const VertexId> PreparedGraph::with_label(Label l) const {
  const auto lo = std::partition_point(by_label.begin(), by_label.end(),
                                       [&](VertexId v) { return graph->label(v) < l; });
  const auto hi = std::partition_point(lo, by_label.end(), [&](VertexId v) { return graph->label(v) == l; });
  return {lo, hi};
}

std::vector<VertexId> order_vertices(const LabeledGraph& q) {
  const std::size_t n = q.num_vertices();
  std::vector<VertexId> order;
  if (n == 0) return order;
  order.reserve(n);

  VertexId first = 0;
  for (VertexId u = 1; u < n; ++u) {
    if (q.degree(u) > q.degree(first)) first = u;
  }
  std::vector<bool> placed(n, false);
  // links[u]: number of edges from u into the placed prefix
  std::vector<std::size_t> links(n, 0);
  auto place = [&](VertexId u) {
    placed[u] = true;
    order.push_back(u);
    for (const Neighbor& nb : q.neighbors(u)) ++links[nb.vertex];
  };
  place(first);

  while (order.size() < n) {
    VertexId best = kNoVertex;
    for (VertexId u = 0; u < n; ++u) {
      if (placed[u]) continue;
      if (best == kNoVertex || links[u] > links[best]) best = u;
    }
    place(best);
  }
  return order;
}

namespace {

bool fill_fast_on_candidates(const LabeledGraph& q, const PreparedGraph& g, std::span<const VertexId> order,
                             const InclusionTest& inclusion, VertexCandidates& cand, bool stop_on_empty) {
  cand.resize(q.num_vertices());
  bool all = true;
  for (VertexId u : order) {
    auto& c = cand[u];
    c.clear();
    for (VertexId v : g.with_label(q.label(u))) {
      if (inclusion.admits(u, v)) c.push_back(v);
    }
    if (c.empty()) {
      all = false;
      if (stop_on_empty) return false;
    }
  }
  return all;
}

}  // namespace

VertexCandidates fast_on_candidates(const LabeledGraph& q, const PreparedGraph& g, const InclusionTest& inclusion) {
  VertexCandidates cand;
  std::vector<VertexId> all(q.num_vertices());
  for (VertexId u = 0; u < q.num_vertices(); ++u) all[u] = u;
  fill_fast_on_candidates(q, g, all, inclusion, cand, false);
  return cand;
}

FastOnQuery FastOnQuery::prepare(const LabeledGraph& q) {
  FastOnQuery out;
  out.graph = &q;
  out.order = order_vertices(q);
  out.neighborhoods = build_neighborhood_table(q);
  return out;
}

FastOnMatcher::FastOnMatcher(const FastOnQuery& q) : q_(&q), search_(*q.graph, q.order) {}

MatchOutcome FastOnMatcher::match(const PreparedGraph& g, const SearchOptions& options) {
  const InclusionTest inclusion(q_->neighborhoods, g.neighborhoods, memo_);
  if (!fill_fast_on_candidates(*q_->graph, g, q_->order, inclusion, candidates_, true)) {
    return detail::rejected(q_->order, candidates_, options);
  }
  return search_.run(*g.graph, candidates_, options);
}

MatchOutcome fast_on_match(const LabeledGraph& q, const LabeledGraph& g, const SearchOptions& options) {
  return fast_on_match(FastOnQuery::prepare(q), prepare_graph(g), options);
}

MatchOutcome fast_on_match(const FastOnQuery& q, const PreparedGraph& g, const SearchOptions& options) {
  return FastOnMatcher(q).match(g, options);
}

}  // namespace fastsi
