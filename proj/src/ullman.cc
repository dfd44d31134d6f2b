#include "fastsi/ullman.h"

#include <algorithm>

namespace fastsi {

std::optional<MatchMode> parse_match_mode(std::string_view text) {
  if (text == "boolean") return MatchMode::kBoolean;
  if (text == "witness") return MatchMode::kWitness;
  if (text == "count-all") return MatchMode::kCountAll;
  return std::nullopt;
}

std::string_view to_string(MatchMode mode) {
  switch (mode) {
    case MatchMode::kBoolean: return "boolean";
    case MatchMode::kWitness: return "witness";
    case MatchMode::kCountAll: return "count-all";
  }
  return "boolean";
}

std::optional<Engine> parse_engine(std::string_view text) {
  if (text == "ullman") return Engine::kUllman;
  if (text == "fast-on") return Engine::kFastOn;
  if (text == "fast-p") return Engine::kFastP;
  return std::nullopt;
}

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::kUllman: return "ullman";
    case Engine::kFastOn: return "fast-on";
    case Engine::kFastP: return "fast-p";
  }
  return "ullman";
}

namespace {

// Fills Cand(u) for the vertices of `order` in turn. With `stop_on_empty`,
// returns false at the first empty set and leaves later sets stale.
bool fill_ullman_candidates(const LabeledGraph& q, const LabeledGraph& g, std::span<const VertexId> order,
                            VertexCandidates& cand, bool stop_on_empty) {
  cand.resize(q.num_vertices());
  bool all = true;
  for (VertexId u : order) {
    auto& c = cand[u];
    c.clear();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (q.label(u) == g.label(v) && q.degree(u) <= g.degree(v)) c.push_back(v);
    }
    if (c.empty()) {
      all = false;
      if (stop_on_empty) return false;
    }
  }
  return all;
}

std::vector<VertexId> identity_order(const LabeledGraph& q) {
  std::vector<VertexId> order(q.num_vertices());
  for (VertexId u = 0; u < q.num_vertices(); ++u) order[u] = u;
  return order;
}

}  // namespace

VertexCandidates ullman_candidates(const LabeledGraph& q, const LabeledGraph& g) {
  VertexCandidates cand;
  const auto order = identity_order(q);
  fill_ullman_candidates(q, g, order, cand, false);
  return cand;
}

namespace detail {

VertexSearch::VertexSearch(const LabeledGraph& q, std::vector<VertexId> order) : q_(&q), order_(std::move(order)) {
  std::vector<std::size_t> rank(q.num_vertices());
  for (std::size_t i = 0; i < order_.size(); ++i) rank[order_[i]] = i;
  back_edges_.resize(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (const Neighbor& nb : q.neighbors(order_[i])) {
      if (rank[nb.vertex] < i) back_edges_[i].push_back({nb.vertex, nb.edge_label});
    }
  }
}

MatchOutcome VertexSearch::run(const LabeledGraph& g, const VertexCandidates& candidates,
                               const SearchOptions& options) {
  MatchOutcome out;
  if (options.trace_order) out.stats.order = order_;
  for (const auto& c : candidates) out.stats.candidates += c.size();
  g_ = &g;
  candidates_ = &candidates;
  options_ = &options;
  out_ = &out;
  image_.assign(q_->num_vertices(), kNoVertex);
  if (q_->num_vertices() == 0) {
    record();
  } else if (std::none_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); })) {
    used_.assign(g.num_vertices(), 0);
    guard_.emplace(options.deadline);
    search(0);
  }
  if (options.mode == MatchMode::kBoolean) out.witness.reset();
  out_ = nullptr;
  return out;
}

// Returns true when the search should stop.
bool VertexSearch::search(std::size_t i) {
  ++out_->stats.recursive_calls;
  if (guard_->expired()) {
    out_->timed_out = true;
    return true;
  }
  const VertexId u = order_[i];
  for (VertexId v : (*candidates_)[u]) {
    if (used_[v]) continue;
    if (!matchable(i, v)) {
      ++out_->stats.failed_checks;
      continue;
    }
    image_[u] = v;
    used_[v] = 1;
    const bool stop = i + 1 < order_.size() ? search(i + 1) : record();
    used_[v] = 0;
    image_[u] = kNoVertex;
    if (stop) return true;
  }
  return false;
}

bool VertexSearch::matchable(std::size_t i, VertexId v) const {
  for (const auto& [w, label] : back_edges_[i]) {
    const auto l = g_->edge_label(v, image_[w]);
    if (!l || *l != label) return false;
  }
  return true;
}

bool VertexSearch::record() {
  MatchOutcome& out = *out_;
  out.found = true;
  ++out.witness_count;
  switch (options_->mode) {
    case MatchMode::kBoolean:
      return true;
    case MatchMode::kWitness:
      out.witness = Mapping::from_images(image_, g_->num_vertices());
      return true;
    case MatchMode::kCountAll: {
      Mapping m = Mapping::from_images(image_, g_->num_vertices());
      if (!out.witness) out.witness = m;
      if (options_->collect_witnesses) out.witnesses.push_back(std::move(m));
      return false;
    }
  }
  return true;
}

MatchOutcome rejected(const std::vector<VertexId>& order, const VertexCandidates& candidates,
                      const SearchOptions& options) {
  MatchOutcome out;
  if (options.trace_order) out.stats.order = order;
  for (VertexId u : order) {
    out.stats.candidates += candidates[u].size();
    if (candidates[u].empty()) break;
  }
  return out;
}

MatchOutcome vertex_search(const LabeledGraph& q, const LabeledGraph& g, const std::vector<VertexId>& order,
                           const VertexCandidates& candidates, const SearchOptions& options) {
  return VertexSearch(q, order).run(g, candidates, options);
}

}  // namespace detail

UllmanMatcher::UllmanMatcher(const LabeledGraph& q) : q_(&q), search_(q, identity_order(q)) {}

MatchOutcome UllmanMatcher::match(const LabeledGraph& g, const SearchOptions& options) {
  if (!fill_ullman_candidates(*q_, g, search_.order(), candidates_, true)) {
    return detail::rejected(search_.order(), candidates_, options);
  }
  return search_.run(g, candidates_, options);
}

MatchOutcome ullman_match(const LabeledGraph& q, const LabeledGraph& g, const SearchOptions& options) {
  return UllmanMatcher(q).match(g, options);
}

}  // namespace fastsi
