#include "fastsi/fast_p.h"

#include <algorithm>
#include <cassert>

namespace fastsi {

namespace {

// Fills the candidate sets in cover order. With `stop_on_empty`, returns false
// at the first empty set and leaves later sets stale.
bool fill_path_candidates(const PathCover& cover, std::span<const std::size_t> hashes, const PathTable& data_paths,
                          const InclusionTest& inclusion, PathCandidates& out, bool stop_on_empty) {
  out.resize(cover.paths.size());
  bool all = true;
  for (std::size_t i = 0; i < cover.paths.size(); ++i) {
    const CanonicalPath& qp = cover.paths[i];
    const auto& us = qp.path.vertices;
    const std::size_t k = us.size();
    PathCandidateSet& set = out[i];
    set.stride = k;
    set.vertices.clear();
    set.path_ids.clear();

    const auto range = data_paths.lookup(qp.code, hashes[i]);
    for (std::size_t r = 0; r < range.paths.size(); ++r) {
      const auto& vs = range.paths[r].path.vertices;
      const auto id = static_cast<std::uint32_t>(range.first_id + r);
      bool forward = true;
      for (std::size_t j = 0; j < k && forward; ++j) forward = inclusion.admits(us[j], vs[j]);
      if (forward) {
        set.vertices.insert(set.vertices.end(), vs.begin(), vs.end());
        set.path_ids.push_back(id);
      }
      // A non-iso path has only one label-consistent alignment.
      if (!qp.is_iso) continue;
      bool backward = true;
      for (std::size_t j = 0; j < k && backward; ++j) backward = inclusion.admits(us[j], vs[k - 1 - j]);
      if (backward) {
        set.vertices.insert(set.vertices.end(), vs.rbegin(), vs.rend());
        set.path_ids.push_back(id);
      }
    }
    if (set.size() == 0) {
      all = false;
      if (stop_on_empty) return false;
    }
  }
  return all;
}

std::vector<std::size_t> hash_codes(const PathCover& cover) {
  std::vector<std::size_t> out;
  for (const CanonicalPath& p : cover.paths) out.push_back(PathCodeHash{}(p.code));
  return out;
}

}  // namespace

PathCandidates fast_p_candidates(const PathCover& cover, const PathTable& data_paths, const InclusionTest& inclusion) {
  PathCandidates out;
  fill_path_candidates(cover, hash_codes(cover), data_paths, inclusion, out, false);
  return out;
}

MaxLengthChoice choose_max_length(const LabeledGraph& q, std::optional<int> requested, int cap) {
  if (requested) return {*requested, edge_ratio_rule(q, *requested)};
  for (int m = kDefaultMaxLength; m <= cap; ++m) {
    if (edge_ratio_rule(q, m)) return {m, true};
  }
  return {cap, false};
}

FastPQuery FastPQuery::prepare(const LabeledGraph& q, int max_length, int cap) {
  FastPQuery out;
  out.graph = &q;
  out.max_length = max_length;
  out.cover = build_ordered_cover(q, max_length, cap);
  out.code_hashes = hash_codes(out.cover);
  out.neighborhoods = build_neighborhood_table(q);
  return out;
}

bool StitchState::is_clear() const {
  auto zero = [](std::uint32_t c) { return c == 0; };
  auto none = [](VertexId v) { return v == kNoVertex; };
  return std::all_of(query_count.begin(), query_count.end(), zero) &&
         std::all_of(data_count.begin(), data_count.end(), zero) &&
         std::all_of(image.begin(), image.end(), none) && std::all_of(inverse.begin(), inverse.end(), none) &&
         std::all_of(assignment.begin(), assignment.end(), [](std::uint32_t a) { return a == kUnassigned; }) &&
         std::none_of(path_matched.begin(), path_matched.end(), [](bool b) { return b; });
}

FastPSearch::FastPSearch(const FastPQuery& q) : query_(&q) {
  const std::size_t n = q.graph->num_vertices();
  state_.query_count.assign(n, 0);
  state_.image.assign(n, kNoVertex);
  state_.assignment.assign(q.cover.paths.size(), StitchState::kUnassigned);
}

MatchOutcome FastPSearch::run(const PreparedGraph& g, const SearchOptions& options) {
  if (!g.paths || g.paths->max_length() != query_->max_length) {
    throw Error(ErrorCode::kConfigError, "data graph not prepared with a path table for maxL " +
                                             std::to_string(query_->max_length));
  }
  const LabeledGraph& qg = *query_->graph;
  const LabeledGraph& dg = *g.graph;
  MatchOutcome out;
  data_ = &g;
  options_ = &options;
  out_ = &out;
  if (state_.data_count.size() < dg.num_vertices()) {
    state_.data_count.resize(dg.num_vertices(), 0);
    state_.inverse.resize(dg.num_vertices(), kNoVertex);
  }
  if (state_.path_matched.size() < g.paths->paths().size()) state_.path_matched.resize(g.paths->paths().size());

  if (options.trace_order) {
    std::vector<bool> seen(qg.num_vertices(), false);
    for (const CanonicalPath& p : query_->cover.paths) {
      for (VertexId u : p.path.vertices) {
        if (!seen[u]) {
          seen[u] = true;
          out.stats.order.push_back(u);
        }
      }
    }
  }

  const InclusionTest inclusion(query_->neighborhoods, g.neighborhoods, memo_);
  const bool all = fill_path_candidates(query_->cover, query_->code_hashes, *g.paths, inclusion, candidates_, true);
  for (const auto& set : candidates_) {
    out.stats.candidates += set.size();
    if (set.size() == 0) break;
  }

  if (query_->cover.paths.empty()) {
    // No edges: a connected query has at most one vertex.
    if (qg.num_vertices() == 0) {
      record();
    } else {
      for (VertexId v : g.with_label(qg.label(0))) {
        state_.image[0] = v;
        state_.inverse[v] = 0;
        const bool stop = record();
        state_.image[0] = kNoVertex;
        state_.inverse[v] = kNoVertex;
        if (stop) break;
      }
    }
  } else if (all) {
    guard_.emplace(options.deadline);
    search(0);
  }
  if (options.mode == MatchMode::kBoolean) out.witness.reset();
  out_ = nullptr;
  return out;
}

bool FastPSearch::matchable(std::size_t i, std::span<const VertexId> target) const {
  const auto& us = query_->cover.paths[i].path.vertices;
  for (std::size_t j = 0; j < us.size(); ++j) {
    const VertexId u = us[j];
    const VertexId v = target[j];
    if (state_.image[u] != kNoVertex) {
      if (state_.image[u] != v) return false;
    } else if (state_.inverse[v] != kNoVertex) {
      // v already bound to another query vertex.
      return false;
    }
  }
  return true;
}

void FastPSearch::bind(std::size_t i, std::size_t k) {
  const auto& us = query_->cover.paths[i].path.vertices;
  const auto target = candidates_[i].at(k);
  for (std::size_t j = 0; j < us.size(); ++j) {
    const VertexId u = us[j];
    const VertexId v = target[j];
    ++state_.query_count[u];
    ++state_.data_count[v];
    state_.image[u] = v;
    state_.inverse[v] = u;
  }
  state_.assignment[i] = static_cast<std::uint32_t>(k);
  state_.path_matched[candidates_[i].path_ids[k]] = true;
}

void FastPSearch::unbind(std::size_t i, std::size_t k) {
  const auto& us = query_->cover.paths[i].path.vertices;
  const auto target = candidates_[i].at(k);
  for (std::size_t j = 0; j < us.size(); ++j) {
    const VertexId u = us[j];
    const VertexId v = target[j];
    // Images stay bound while another assigned path still uses the vertex.
    if (--state_.query_count[u] == 0) state_.image[u] = kNoVertex;
    if (--state_.data_count[v] == 0) state_.inverse[v] = kNoVertex;
  }
  state_.assignment[i] = StitchState::kUnassigned;
  state_.path_matched[candidates_[i].path_ids[k]] = false;
}

bool FastPSearch::search(std::size_t i) {
  ++out_->stats.recursive_calls;
  if (guard_->expired()) {
    out_->timed_out = true;
    return true;
  }
  const PathCandidateSet& set = candidates_[i];
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (state_.path_matched[set.path_ids[k]]) continue;
    if (!matchable(i, set.at(k))) {
      ++out_->stats.failed_checks;
      continue;
    }
    bind(i, k);
    const bool stop = i + 1 < candidates_.size() ? search(i + 1) : record();
    unbind(i, k);
    if (stop) return true;
  }
  return false;
}

bool FastPSearch::record() {
  MatchOutcome& out = *out_;
  out.found = true;
  ++out.witness_count;
  if (options_->mode == MatchMode::kBoolean) return true;
  Mapping m = Mapping::from_images(state_.image, data_->graph->num_vertices());
  assert(verify_mapping(*query_->graph, *data_->graph, m));
  if (options_->mode == MatchMode::kWitness) {
    out.witness = std::move(m);
    return true;
  }
  if (!out.witness) out.witness = m;
  if (options_->collect_witnesses) out.witnesses.push_back(std::move(m));
  return false;
}

MatchOutcome fast_p_match(const LabeledGraph& q, const LabeledGraph& g, int max_length,
                          const SearchOptions& options) {
  const FastPQuery query = FastPQuery::prepare(q, max_length);
  const PreparedGraph data = prepare_graph(g, max_length);
  return fast_p_match(query, data, options);
}

MatchOutcome fast_p_match(const FastPQuery& q, const PreparedGraph& g, const SearchOptions& options) {
  return FastPSearch(q).run(g, options);
}

}  // namespace fastsi
