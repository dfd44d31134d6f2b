#ifndef FASTSI_PATHS_H_
#define FASTSI_PATHS_H_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fastsi/graph.h"

namespace fastsi {

inline constexpr int kDefaultMaxLength = 2;
inline constexpr int kDefaultMaxLengthCap = 4;

// Inline capacity covers paths up to the default maxL cap.
using PathVertices = boost::container::small_vector<VertexId, kDefaultMaxLengthCap + 1>;

struct SimplePath {
  PathVertices vertices;

  // Number of edges.
  std::size_t size() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  SimplePath reversed() const { return {{vertices.rbegin(), vertices.rend()}}; }

  bool operator==(const SimplePath& o) const { return vertices == o.vertices; }
  bool operator<(const SimplePath& o) const { return vertices < o.vertices; }
};

// Alternating vertex and edge labels: l(v0) l(v0,v1) l(v1) ... l(vk).
using PathCode = boost::container::small_vector<Label, 2 * kDefaultMaxLengthCap + 1>;

struct PathCodeHash {
  std::size_t operator()(const PathCode& code) const noexcept;
};

/// code(p) in the direction the vertices are listed.
PathCode path_code(const LabeledGraph& g, std::span<const VertexId> vertices);

/// True iff the label sequence of p reads the same in both directions.
bool classify_iso(const SimplePath& p, const LabeledGraph& g);

/// Lexicographic minimum of code(p) and code(p reversed).
PathCode canonical_code(const SimplePath& p, const LabeledGraph& g);

enum class Orientation : std::uint8_t { kForward, kReversed };

/// A path stored in canonical orientation. `orientation` records whether the
/// input direction had to be reversed. Iso paths keep the direction whose
/// vertex sequence is smaller.
struct CanonicalPath {
  SimplePath path;
  PathCode code;
  bool is_iso = false;
  Orientation orientation = Orientation::kForward;

  std::size_t size() const noexcept { return path.size(); }
};

CanonicalPath make_canonical(SimplePath p, const LabeledGraph& g);

/// Every undirected simple path of 1..max_length edges, once, in canonical
/// orientation, sorted by (code, vertices). Throws kMaxLTooLarge above `cap`
/// and kConfigError below 1.
std::vector<CanonicalPath> enumerate_paths(const LabeledGraph& g, int max_length,
                                           int cap = kDefaultMaxLengthCap);

/// Edge-disjoint paths covering a query, with per-vertex occurrence counts.
struct PathCover {
  std::vector<CanonicalPath> paths;
  int max_length = 0;
  std::vector<std::uint32_t> vertex_freq;
};

/// Mutable edge subset of a graph, used while carving out a cover.
class ResidualGraph {
 public:
  static constexpr std::uint32_t kNoEdge = 0xffffffffu;

  explicit ResidualGraph(const LabeledGraph& g);

  std::size_t num_edges() const noexcept { return remaining_; }
  bool empty() const noexcept { return remaining_ == 0; }

  /// Id (position in g.edges()) of edge {u, v}, or kNoEdge.
  std::uint32_t edge_id(VertexId u, VertexId v) const;
  /// Ids of p's edges.
  std::vector<std::uint32_t> edge_ids(const SimplePath& p) const;

  bool contains(const SimplePath& p) const { return contains(edge_ids(p)); }
  bool contains(std::span<const std::uint32_t> ids) const;
  /// Whether the residual minus p's edges is connected over the vertices that
  /// still have an incident edge. An edgeless residual counts as connected.
  bool connected_after_removal(const SimplePath& p) const { return connected_after_removal(edge_ids(p)); }
  bool connected_after_removal(std::span<const std::uint32_t> ids) const;
  void remove(const SimplePath& p) { remove(edge_ids(p)); }
  void remove(std::span<const std::uint32_t> ids);

 private:
  const LabeledGraph* graph_;
  // Mutable: connected_after_removal() clears a path's edges and restores them.
  mutable std::vector<std::uint8_t> alive_;
  std::size_t remaining_;
  // Per vertex: (neighbor, edge id) in the order of graph_->neighbors().
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<VertexId, std::uint32_t>> incident_;
  // Live incident edges per vertex, and the number of vertices with any.
  mutable std::vector<std::uint32_t> live_degree_;
  std::size_t active_ = 0;
  // Scratch for connected_after_removal().
  mutable std::vector<std::uint8_t> seen_;
  mutable std::vector<VertexId> stack_;
  mutable std::vector<std::uint32_t> cleared_;
};

/// Greedy disjoint-path cover: longest paths first, a path is taken when all
/// of its edges are still present and removing it keeps the residual connected.
/// Throws kCoverIncomplete if edges remain uncovered.
PathCover cover(const LabeledGraph& q, std::span<const CanonicalPath> paths, int max_length);

/// Reorders a cover so the first path has maximal summed vertex frequency and
/// each following path shares the most vertices with those already placed.
PathCover order_cover(const LabeledGraph& q, const PathCover& c);

/// cover() followed by order_cover() over enumerate_paths(q, max_length).
PathCover build_ordered_cover(const LabeledGraph& q, int max_length, int cap = kDefaultMaxLengthCap);

/// d_q = 2|E| / (|V|(|V|-1)); zero for graphs with fewer than two vertices.
double query_density(const LabeledGraph& q);

/// |E_q| / |V_q| < maxL
bool edge_ratio_rule(const LabeledGraph& q, int max_length);

/// d_q < 2 maxL / (|V_q| - 1)
bool density_rule(const LabeledGraph& q, int max_length);

/// Data-side path table: every path of one data graph, looked up by code.
class PathTable {
 public:
  PathTable() = default;
  PathTable(const LabeledGraph& g, int max_length, int cap = kDefaultMaxLengthCap);

  int max_length() const noexcept { return max_length_; }
  std::span<const CanonicalPath> paths() const noexcept { return paths_; }

  /// Paths whose canonical code equals `code`; index i in the returned span
  /// corresponds to path id `first_id + i`.
  struct Range {
    std::span<const CanonicalPath> paths;
    std::uint32_t first_id = 0;
  };
  Range lookup(const PathCode& code) const { return lookup(code, PathCodeHash{}(code)); }
  // `hash` must be PathCodeHash{}(code); lets callers hash a query code once.
  Range lookup(const PathCode& code, std::size_t hash) const;

 private:
  struct CodeRange {
    std::size_t hash;
    std::uint32_t begin;
    std::uint32_t end;
  };

  int max_length_ = 0;
  std::vector<CanonicalPath> paths_;
  // One entry per distinct code, sorted by hash.
  std::vector<CodeRange> by_code_;
};

}  // namespace fastsi

#endif  // FASTSI_PATHS_H_
