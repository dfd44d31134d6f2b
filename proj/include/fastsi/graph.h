#ifndef FASTSI_GRAPH_H_
#define FASTSI_GRAPH_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fastsi {

using VertexId = std::uint32_t;
using Label = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr Label kNoLabel = std::numeric_limits<Label>::max();

// Edge label id used when the input carries no edge label.
inline constexpr Label kDefaultEdgeLabel = 0;

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kDisconnected,
  kIndexOutOfRange,
  kIncompleteMapping,
  kMaxLTooLarge,
  kCoverIncomplete,
  kTooLargeForOracle,
  kParseError,
  kValidationError,
  kInfeasibleParameters,
  kInfeasibleQuerySize,
  kConfigError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// String-to-id interning for one label alphabet. Ids are dense and assigned
/// in first-seen order.
class LabelTable {
 public:
  Label intern(std::string_view name);
  std::optional<Label> find(std::string_view name) const;
  const std::string& name(Label id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

  bool operator==(const LabelTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Label> ids_;
};

/// Vertex and edge label tables shared by every graph of a dataset. The edge
/// table always holds the empty string at kDefaultEdgeLabel.
struct Alphabet {
  Alphabet();

  LabelTable vertex;
  LabelTable edge;

  bool operator==(const Alphabet&) const = default;
};

struct Neighbor {
  VertexId vertex;
  Label vertex_label;
  Label edge_label;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Label label;

  bool operator==(const EdgeSpec&) const = default;
};

enum class Connectivity { kRequire, kAllowDisconnected };

/// Undirected simple graph with one label per vertex and per edge. Immutable
/// once built; see build_graph().
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  // |G| is the edge count.
  std::size_t size() const noexcept { return edges_.size(); }

  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label>& vertex_labels() const noexcept { return labels_; }

  // Sorted by (neighbor label, edge label, neighbor index).
  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<Label> edge_label(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return edge_label(u, v).has_value(); }

  // Each undirected edge once, with u < v, sorted by (u, v).
  std::span<const EdgeSpec> edges() const noexcept { return edges_; }

  bool is_connected() const;

  // Structural identity: same labels, same edges. Adjacency order follows.
  bool operator==(const LabeledGraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  friend LabeledGraph build_graph(std::vector<Label>, std::span<const EdgeSpec>, Connectivity);

  std::vector<Label> labels_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  // Per-vertex (neighbor, edge label) sorted by neighbor for edge lookup.
  std::vector<std::pair<VertexId, Label>> by_index_;
  // Dense edge-label matrix, only kept for small graphs.
  std::vector<Label> dense_;
};

/// Validates and builds a graph. Throws Error with kIndexOutOfRange,
/// kSelfLoop, kDuplicateEdge or kDisconnected.
LabeledGraph build_graph(std::vector<Label> vertex_labels, std::span<const EdgeSpec> edges,
                         Connectivity connectivity = Connectivity::kRequire);

/// Partial or complete injective assignment of query vertices to data vertices.
class Mapping {
 public:
  Mapping() = default;
  Mapping(std::size_t query_vertices, std::size_t data_vertices)
      : image_(query_vertices, kNoVertex), used_(data_vertices, false) {}

  static Mapping from_images(std::vector<VertexId> images, std::size_t data_vertices);

  std::size_t query_size() const noexcept { return image_.size(); }
  std::size_t data_size() const noexcept { return used_.size(); }

  std::optional<VertexId> image(VertexId u) const {
    if (image_[u] == kNoVertex) return std::nullopt;
    return image_[u];
  }
  bool is_mapped(VertexId u) const { return image_[u] != kNoVertex; }
  bool is_used(VertexId v) const { return used_[v]; }

  void assign(VertexId u, VertexId v) {
    image_[u] = v;
    used_[v] = true;
  }
  void unassign(VertexId u) {
    used_[image_[u]] = false;
    image_[u] = kNoVertex;
  }

  bool complete() const;
  bool injective() const;

  const std::vector<VertexId>& images() const noexcept { return image_; }

  bool operator==(const Mapping& other) const { return image_ == other.image_; }
  bool operator<(const Mapping& other) const { return image_ < other.image_; }

 private:
  std::vector<VertexId> image_;
  std::vector<bool> used_;
};

/// True iff `m` is a subgraph-isomorphism witness from q into g: injective,
/// vertex labels preserved, every query edge present in g with the same label.
/// Throws kIncompleteMapping when some query vertex is unmapped.
bool verify_mapping(const LabeledGraph& q, const LabeledGraph& g, const Mapping& m);

}  // namespace fastsi

#endif  // FASTSI_GRAPH_H_
