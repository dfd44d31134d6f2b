#ifndef FASTSI_FAST_ON_H_
#define FASTSI_FAST_ON_H_

#include <vector>

#include "fastsi/graph.h"
#include "fastsi/match.h"
#include "fastsi/neighborhood.h"
#include "fastsi/prepared.h"
#include "fastsi/ullman.h"

namespace fastsi {

/// Connectivity-first query order: the highest-degree vertex, then repeatedly
/// the vertex with the most edges into the placed prefix. Ties go to the
/// smallest index.
std::vector<VertexId> order_vertices(const LabeledGraph& q);

/// Label and neighborhood-inclusion condition: l(u) = l(v) and NL(u) ⊆ NL(v).
VertexCandidates fast_on_candidates(const LabeledGraph& q, const PreparedGraph& g, const InclusionTest& inclusion);

/// Query-side state reusable across data graphs.
struct FastOnQuery {
  const LabeledGraph* graph = nullptr;
  std::vector<VertexId> order;
  DistinctNeighborhoodTable neighborhoods;

  static FastOnQuery prepare(const LabeledGraph& q);
};

/// Connectivity-ordered search with neighborhood-filtered candidates.
/// Reusable across data graphs for one query.
class FastOnMatcher {
 public:
  explicit FastOnMatcher(const FastOnQuery& q);

  MatchOutcome match(const PreparedGraph& g, const SearchOptions& options = {});

 private:
  const FastOnQuery* q_;
  detail::VertexSearch search_;
  VertexCandidates candidates_;
  InclusionMemo memo_;
};

MatchOutcome fast_on_match(const LabeledGraph& q, const LabeledGraph& g, const SearchOptions& options = {});

/// Same search with cached query and data-graph structures; only inclusion
/// entries and candidate sets are computed per call.
MatchOutcome fast_on_match(const FastOnQuery& q, const PreparedGraph& g, const SearchOptions& options = {});

}  // namespace fastsi

#endif  // FASTSI_FAST_ON_H_
