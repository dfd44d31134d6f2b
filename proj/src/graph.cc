#include "fastsi/graph.h"

#include <algorithm>
#include <tuple>

namespace fastsi {

namespace {

constexpr std::size_t kDenseLimit = 256;

std::string vertex_error(const char* what, VertexId u, VertexId v) {
  return std::string(what) + " (" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kIncompleteMapping: return "IncompleteMapping";
    case ErrorCode::kMaxLTooLarge: return "MaxLTooLarge";
    case ErrorCode::kCoverIncomplete: return "CoverIncomplete";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::kInfeasibleQuerySize: return "InfeasibleQuerySize";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Label LabelTable::intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<Label>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<Label> LabelTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Alphabet::Alphabet() { edge.intern(""); }

std::optional<Label> LabeledGraph::edge_label(VertexId u, VertexId v) const {
  const std::size_t n = labels_.size();
  if (u >= n || v >= n) return std::nullopt;
  if (!dense_.empty()) {
    const Label l = dense_[u * n + v];
    if (l == kNoLabel) return std::nullopt;
    return l;
  }
  auto first = by_index_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  auto last = by_index_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  auto it = std::lower_bound(first, last, v, [](const auto& e, VertexId x) { return e.first < x; });
  if (it == last || it->first != v) return std::nullopt;
  return it->second;
}

bool LabeledGraph::is_connected() const {
  const std::size_t n = labels_.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : neighbors(v)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n;
}

LabeledGraph build_graph(std::vector<Label> vertex_labels, std::span<const EdgeSpec> edges,
                         Connectivity connectivity) {
  const std::size_t n = vertex_labels.size();
  LabeledGraph g;
  g.labels_ = std::move(vertex_labels);

  g.edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange, vertex_error("edge endpoint out of range", e.u, e.v));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, vertex_error("self-loop", e.u, e.v));
    g.edges_.push_back(e.u < e.v ? e : EdgeSpec{e.v, e.u, e.label});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw Error(ErrorCode::kDuplicateEdge, vertex_error("duplicate edge", g.edges_[i].u, g.edges_[i].v));
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const EdgeSpec& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

  g.adjacency_.resize(g.offsets_[n]);
  g.by_index_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const EdgeSpec& e : g.edges_) {
    g.adjacency_[fill[e.u]] = {e.v, g.labels_[e.v], e.label};
    g.by_index_[fill[e.u]++] = {e.v, e.label};
    g.adjacency_[fill[e.v]] = {e.u, g.labels_[e.u], e.label};
    g.by_index_[fill[e.v]++] = {e.u, e.label};
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(g.adjacency_.begin() + first, g.adjacency_.begin() + last,
              [](const Neighbor& a, const Neighbor& b) {
                return std::tie(a.vertex_label, a.edge_label, a.vertex) <
                       std::tie(b.vertex_label, b.edge_label, b.vertex);
              });
    std::sort(g.by_index_.begin() + first, g.by_index_.begin() + last);
  }

  if (n <= kDenseLimit) {
    g.dense_.assign(n * n, kNoLabel);
    for (const EdgeSpec& e : g.edges_) {
      g.dense_[e.u * n + e.v] = e.label;
      g.dense_[e.v * n + e.u] = e.label;
    }
  }

  if (connectivity == Connectivity::kRequire && !g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return g;
}

Mapping Mapping::from_images(std::vector<VertexId> images, std::size_t data_vertices) {
  Mapping m(images.size(), data_vertices);
  for (std::size_t u = 0; u < images.size(); ++u) {
    if (images[u] == kNoVertex) continue;
    if (images[u] >= data_vertices) {
      throw Error(ErrorCode::kIndexOutOfRange, "image " + std::to_string(images[u]) + " out of range");
    }
    m.image_[u] = images[u];
    m.used_[images[u]] = true;
  }
  return m;
}

bool Mapping::complete() const {
  return std::none_of(image_.begin(), image_.end(), [](VertexId v) { return v == kNoVertex; });
}

bool Mapping::injective() const {
  std::vector<bool> seen(used_.size(), false);
  for (VertexId v : image_) {
    if (v == kNoVertex) continue;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool verify_mapping(const LabeledGraph& q, const LabeledGraph& g, const Mapping& m) {
  if (m.query_size() != q.num_vertices() || !m.complete()) {
    throw Error(ErrorCode::kIncompleteMapping, "mapping does not cover every query vertex");
  }
  const auto& images = m.images();
  for (VertexId v : images) {
    if (v >= g.num_vertices()) return false;
  }
  if (!m.injective()) return false;
  for (VertexId u = 0; u < q.num_vertices(); ++u) {
    if (q.label(u) != g.label(images[u])) return false;
  }
  for (const EdgeSpec& e : q.edges()) {
    const auto label = g.edge_label(images[e.u], images[e.v]);
    if (!label || *label != e.label) return false;
  }
  return true;
}

}  // namespace fastsi
