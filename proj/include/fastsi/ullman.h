#ifndef FASTSI_ULLMAN_H_
#define FASTSI_ULLMAN_H_

#include <span>
#include <vector>

#include "fastsi/graph.h"
#include "fastsi/match.h"

namespace fastsi {

// Cand(u) per query vertex, data vertices in increasing index order.
using VertexCandidates = std::vector<std::vector<VertexId>>;

/// Label and degree condition: l(u) = l(v) and deg(u) <= deg(v).
VertexCandidates ullman_candidates(const LabeledGraph& q, const LabeledGraph& g);

namespace detail {

/// Depth-first vertex-at-a-time search for one query and a fixed vertex
/// order, enforcing one-to-one mapping and the neighbor condition (edges and
/// edge labels towards already mapped vertices). Buffers are reused across
/// data graphs.
class VertexSearch {
 public:
  VertexSearch(const LabeledGraph& q, std::vector<VertexId> order);

  const std::vector<VertexId>& order() const noexcept { return order_; }

  /// `candidates` is indexed by query vertex.
  MatchOutcome run(const LabeledGraph& g, const VertexCandidates& candidates, const SearchOptions& options);

 private:
  bool search(std::size_t i);
  bool matchable(std::size_t i, VertexId v) const;
  bool record();

  const LabeledGraph* q_;
  std::vector<VertexId> order_;
  // For position i: the earlier-placed neighbors of order[i] and edge labels.
  std::vector<std::vector<std::pair<VertexId, Label>>> back_edges_;

  // Per run.
  const LabeledGraph* g_ = nullptr;
  const VertexCandidates* candidates_ = nullptr;
  const SearchOptions* options_ = nullptr;
  MatchOutcome* out_ = nullptr;
  std::vector<VertexId> image_;
  std::vector<std::uint8_t> used_;
  std::optional<DeadlineGuard> guard_;
};

/// Outcome for a pair rejected while building candidate sets in `order`;
/// counts the candidates of the sets built up to the first empty one.
MatchOutcome rejected(const std::vector<VertexId>& order, const VertexCandidates& candidates,
                      const SearchOptions& options);

/// One-shot form of VertexSearch.
MatchOutcome vertex_search(const LabeledGraph& q, const LabeledGraph& g, const std::vector<VertexId>& order,
                           const VertexCandidates& candidates, const SearchOptions& options);

}  // namespace detail

/// Ullman's search over query vertices in input order. Reusable across data
/// graphs for one query.
class UllmanMatcher {
 public:
  explicit UllmanMatcher(const LabeledGraph& q);

  MatchOutcome match(const LabeledGraph& g, const SearchOptions& options = {});

 private:
  const LabeledGraph* q_;
  detail::VertexSearch search_;
  VertexCandidates candidates_;
};

MatchOutcome ullman_match(const LabeledGraph& q, const LabeledGraph& g, const SearchOptions& options = {});

}  // namespace fastsi

#endif  // FASTSI_ULLMAN_H_
