#include "fastsi/paths.h"

#include <algorithm>

namespace fastsi {

std::size_t PathCodeHash::operator()(const PathCode& code) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ code.size();
  for (Label l : code) {
    h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

PathCode path_code(const LabeledGraph& g, std::span<const VertexId> vertices) {
  PathCode code;
  if (vertices.empty()) return code;
  code.reserve(2 * vertices.size() - 1);
  code.push_back(g.label(vertices[0]));
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    code.push_back(g.edge_label(vertices[i - 1], vertices[i]).value_or(kNoLabel));
    code.push_back(g.label(vertices[i]));
  }
  return code;
}

bool classify_iso(const SimplePath& p, const LabeledGraph& g) {
  const PathCode code = path_code(g, {p.vertices.data(), p.vertices.size()});
  return std::equal(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(code.size() / 2), code.rbegin());
}

PathCode canonical_code(const SimplePath& p, const LabeledGraph& g) {
  PathCode forward = path_code(g, {p.vertices.data(), p.vertices.size()});
  PathCode backward(forward.rbegin(), forward.rend());
  return std::min(forward, backward);
}

CanonicalPath make_canonical(SimplePath p, const LabeledGraph& g) {
  CanonicalPath out;
  out.code = path_code(g, {p.vertices.data(), p.vertices.size()});
  // Compare the code with its reversal at the first asymmetric position.
  const auto& c = out.code;
  const std::size_t n = c.size();
  std::size_t i = 0;
  while (i < n / 2 && c[i] == c[n - 1 - i]) ++i;
  out.is_iso = i == n / 2;
  const bool reverse = out.is_iso ? p.vertices.size() > 1 && p.vertices.back() < p.vertices.front()
                                  : c[n - 1 - i] < c[i];
  if (reverse) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(out.code.begin(), out.code.end());
    out.orientation = Orientation::kReversed;
  }
  out.path = std::move(p);
  return out;
}

namespace {

void extend_paths(const LabeledGraph& g, int max_length, std::vector<VertexId>& stack, std::vector<bool>& on_path,
                  std::vector<CanonicalPath>& out) {
  const VertexId tail = stack.back();
  for (const Neighbor& nb : g.neighbors(tail)) {
    if (on_path[nb.vertex]) continue;
    stack.push_back(nb.vertex);
    // Each undirected path is reached from both ends; keep one.
    if (stack.front() < stack.back()) out.push_back(make_canonical(SimplePath{{stack.begin(), stack.end()}}, g));
    if (static_cast<int>(stack.size()) - 1 < max_length) {
      on_path[nb.vertex] = true;
      extend_paths(g, max_length, stack, on_path, out);
      on_path[nb.vertex] = false;
    }
    stack.pop_back();
  }
}

bool code_then_vertices(const CanonicalPath& a, const CanonicalPath& b) {
  if (a.code != b.code) return a.code < b.code;
  return a.path.vertices < b.path.vertices;
}

}  // namespace

std::vector<CanonicalPath> enumerate_paths(const LabeledGraph& g, int max_length, int cap) {
  if (max_length < 1) throw Error(ErrorCode::kConfigError, "maxL must be at least 1");
  if (max_length > cap) {
    throw Error(ErrorCode::kMaxLTooLarge,
                "maxL " + std::to_string(max_length) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<CanonicalPath> out;
  std::vector<VertexId> stack;
  std::vector<bool> on_path(g.num_vertices(), false);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    stack.assign(1, v);
    on_path[v] = true;
    extend_paths(g, max_length, stack, on_path, out);
    on_path[v] = false;
  }
  std::sort(out.begin(), out.end(), code_then_vertices);
  return out;
}

ResidualGraph::ResidualGraph(const LabeledGraph& g)
    : graph_(&g), alive_(g.num_edges(), 1), remaining_(g.num_edges()) {
  const std::size_t n = g.num_vertices();
  offsets_.assign(n + 1, 0);
  live_degree_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    offsets_[v + 1] = offsets_[v] + g.degree(v);
    live_degree_[v] = static_cast<std::uint32_t>(g.degree(v));
    if (g.degree(v) > 0) ++active_;
  }
  incident_.resize(offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t k = offsets_[v];
    for (const Neighbor& nb : g.neighbors(v)) incident_[k++] = {nb.vertex, edge_id(v, nb.vertex)};
  }
}

std::uint32_t ResidualGraph::edge_id(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  const auto edges = graph_->edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v},
                             [](const EdgeSpec& e, const std::pair<VertexId, VertexId>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it == edges.end() || it->u != u || it->v != v) return kNoEdge;
  return static_cast<std::uint32_t>(it - edges.begin());
}

std::vector<std::uint32_t> ResidualGraph::edge_ids(const SimplePath& p) const {
  std::vector<std::uint32_t> ids;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) ids.push_back(edge_id(p.vertices[i - 1], p.vertices[i]));
  return ids;
}

bool ResidualGraph::contains(std::span<const std::uint32_t> ids) const {
  return std::all_of(ids.begin(), ids.end(), [&](std::uint32_t id) { return id != kNoEdge && alive_[id]; });
}

bool ResidualGraph::connected_after_removal(std::span<const std::uint32_t> ids) const {
  const auto edges = graph_->edges();
  std::size_t left = remaining_;
  std::size_t active = active_;
  cleared_.clear();
  for (std::uint32_t id : ids) {
    if (id == kNoEdge || !alive_[id]) continue;
    alive_[id] = 0;
    --left;
    cleared_.push_back(id);
    if (--live_degree_[edges[id].u] == 0) --active;
    if (--live_degree_[edges[id].v] == 0) --active;
  }
  bool connected = true;
  if (left > 0) {
    VertexId start = kNoVertex;
    for (std::uint32_t id : cleared_) {
      if (live_degree_[edges[id].u] > 0) start = edges[id].u;
      if (live_degree_[edges[id].v] > 0) start = edges[id].v;
    }
    for (VertexId v = 0; start == kNoVertex; ++v) {
      if (live_degree_[v] > 0) start = v;
    }
    seen_.assign(graph_->num_vertices(), 0);
    stack_.assign(1, start);
    seen_[start] = 1;
    std::size_t reached = 1;
    while (!stack_.empty() && reached < active) {
      const VertexId v = stack_.back();
      stack_.pop_back();
      for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
        const auto [w, id] = incident_[k];
        if (alive_[id] && !seen_[w]) {
          seen_[w] = 1;
          ++reached;
          stack_.push_back(w);
        }
      }
    }
    connected = reached == active;
  }
  for (std::uint32_t id : cleared_) {
    alive_[id] = 1;
    ++live_degree_[edges[id].u];
    ++live_degree_[edges[id].v];
  }
  return connected;
}

void ResidualGraph::remove(std::span<const std::uint32_t> ids) {
  const auto edges = graph_->edges();
  for (std::uint32_t id : ids) {
    if (id != kNoEdge && alive_[id]) {
      alive_[id] = 0;
      --remaining_;
      if (--live_degree_[edges[id].u] == 0) --active_;
      if (--live_degree_[edges[id].v] == 0) --active_;
    }
  }
}

namespace {

std::vector<std::uint32_t> vertex_frequencies(const LabeledGraph& q, std::span<const CanonicalPath> paths) {
  std::vector<std::uint32_t> freq(q.num_vertices(), 0);
  for (const CanonicalPath& p : paths) {
    for (VertexId u : p.path.vertices) ++freq[u];
  }
  return freq;
}

}  // namespace

PathCover cover(const LabeledGraph& q, std::span<const CanonicalPath> paths, int max_length) {
  std::vector<const CanonicalPath*> sorted;
  sorted.reserve(paths.size());
  for (const CanonicalPath& p : paths) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CanonicalPath* a, const CanonicalPath* b) { return a->size() > b->size(); });

  PathCover out;
  out.max_length = max_length;
  ResidualGraph residual(q);
  // Edge ids of sorted[i] at ids[offset[i], offset[i + 1]).
  std::vector<std::uint32_t> ids;
  std::vector<std::size_t> offset{0};
  for (const CanonicalPath* p : sorted) {
    const auto& vs = p->path.vertices;
    for (std::size_t j = 1; j < vs.size(); ++j) ids.push_back(residual.edge_id(vs[j - 1], vs[j]));
    offset.push_back(ids.size());
  }
  auto edges_of = [&](std::size_t i) {
    return std::span<const std::uint32_t>(ids.data() + offset[i], offset[i + 1] - offset[i]);
  };

  // One tier per path size. A tier is rescanned until it stops yielding, since
  // an earlier removal can make a previously rejected path acceptable.
  std::size_t tier_begin = 0;
  while (tier_begin < sorted.size() && !residual.empty()) {
    const std::size_t size = sorted[tier_begin]->size();
    std::size_t tier_end = tier_begin;
    while (tier_end < sorted.size() && sorted[tier_end]->size() == size) ++tier_end;
    bool progress = true;
    while (progress && !residual.empty()) {
      progress = false;
      for (std::size_t i = tier_begin; i < tier_end && !residual.empty(); ++i) {
        if (residual.contains(edges_of(i)) && residual.connected_after_removal(edges_of(i))) {
          residual.remove(edges_of(i));
          out.paths.push_back(*sorted[i]);
          progress = true;
        }
      }
    }
    tier_begin = tier_end;
  }
  if (!residual.empty()) {
    throw Error(ErrorCode::kCoverIncomplete,
                std::to_string(residual.num_edges()) + " query edges left uncovered");
  }
  out.vertex_freq = vertex_frequencies(q, out.paths);
  return out;
}

PathCover order_cover(const LabeledGraph& q, const PathCover& c) {
  PathCover out;
  out.max_length = c.max_length;
  out.vertex_freq = c.vertex_freq.empty() ? vertex_frequencies(q, c.paths) : c.vertex_freq;
  const std::size_t n = c.paths.size();
  if (n == 0) return out;

  std::vector<bool> placed(n, false);
  std::vector<bool> covered(q.num_vertices(), false);
  auto place = [&](std::size_t k) {
    placed[k] = true;
    out.paths.push_back(c.paths[k]);
    for (VertexId u : c.paths[k].path.vertices) covered[u] = true;
  };

  std::size_t first = 0;
  std::uint64_t best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t weight = 0;
    for (VertexId u : c.paths[k].path.vertices) weight += out.vertex_freq[u];
    if (k == 0 || weight > best) {
      best = weight;
      first = k;
    }
  }
  place(first);

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    std::size_t best_overlap = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (placed[k]) continue;
      std::size_t overlap = 0;
      for (VertexId u : c.paths[k].path.vertices) overlap += covered[u] ? 1 : 0;
      if (pick == n || overlap > best_overlap) {
        pick = k;
        best_overlap = overlap;
      }
    }
    place(pick);
  }
  return out;
}

PathCover build_ordered_cover(const LabeledGraph& q, int max_length, int cap) {
  const auto paths = enumerate_paths(q, max_length, cap);
  return order_cover(q, cover(q, paths, max_length));
}

double query_density(const LabeledGraph& q) {
  const double n = static_cast<double>(q.num_vertices());
  if (n < 2) return 0.0;
  return 2.0 * static_cast<double>(q.num_edges()) / (n * (n - 1));
}

bool edge_ratio_rule(const LabeledGraph& q, int max_length) {
  if (q.num_vertices() == 0) return true;
  return static_cast<double>(q.num_edges()) / static_cast<double>(q.num_vertices()) < max_length;
}

bool density_rule(const LabeledGraph& q, int max_length) {
  if (q.num_vertices() < 2) return true;
  return query_density(q) < 2.0 * max_length / (static_cast<double>(q.num_vertices()) - 1.0);
}

PathTable::PathTable(const LabeledGraph& g, int max_length, int cap)
    : max_length_(max_length), paths_(enumerate_paths(g, max_length, cap)) {
  std::uint32_t begin = 0;
  for (std::uint32_t i = 1; i <= paths_.size(); ++i) {
    if (i == paths_.size() || paths_[i].code != paths_[begin].code) {
      by_code_.push_back({PathCodeHash{}(paths_[begin].code), begin, i});
      begin = i;
    }
  }
  std::sort(by_code_.begin(), by_code_.end(), [](const CodeRange& a, const CodeRange& b) { return a.hash < b.hash; });
}

PathTable::Range PathTable::lookup(const PathCode& code, std::size_t hash) const {
  auto it = std::lower_bound(by_code_.begin(), by_code_.end(), hash,
                             [](const CodeRange& r, std::size_t h) { return r.hash < h; });
  for (; it != by_code_.end() && it->hash == hash; ++it) {
    if (paths_[it->begin].code == code) {
      return {std::span<const CanonicalPath>(paths_).subspan(it->begin, it->end - it->begin), it->begin};
    }
  }
  return {};
}

}  // namespace fastsi
