#ifndef FASTSI_FAST_P_H_
#define FASTSI_FAST_P_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fastsi/graph.h"
#include "fastsi/match.h"
#include "fastsi/neighborhood.h"
#include "fastsi/paths.h"
#include "fastsi/prepared.h"

namespace fastsi {

/// Candidate data paths for one cover path. Candidate i occupies
/// vertices[i * stride, (i + 1) * stride) and is aligned position by position
/// with the cover path's canonical vertex sequence.
struct PathCandidateSet {
  std::size_t stride = 0;
  std::vector<VertexId> vertices;
  // Undirected data path id (index into the data PathTable).
  std::vector<std::uint32_t> path_ids;

  std::size_t size() const noexcept { return path_ids.size(); }
  std::span<const VertexId> at(std::size_t i) const { return {vertices.data() + i * stride, stride}; }
};

using PathCandidates = std::vector<PathCandidateSet>;

/// For each cover path, the data paths with the same canonical code whose
/// vertices pass the positional neighborhood-inclusion test. Iso query paths
/// also try the reversed alignment and keep each passing orientation as a
/// separate candidate.
PathCandidates fast_p_candidates(const PathCover& cover, const PathTable& data_paths, const InclusionTest& inclusion);

struct MaxLengthChoice {
  int max_length = kDefaultMaxLength;
  // Whether |E_q| / |V_q| < maxL holds for the returned value.
  bool rule_satisfied = true;
};

/// Returns `requested` unchanged when given (flagging a failed rule), or else
/// the smallest maxL in [2, cap] satisfying |E_q| / |V_q| < maxL. When none
/// does, returns `cap` with rule_satisfied = false.
MaxLengthChoice choose_max_length(const LabeledGraph& q, std::optional<int> requested = std::nullopt,
                                  int cap = kDefaultMaxLengthCap);

/// Query-side state reusable across data graphs.
struct FastPQuery {
  const LabeledGraph* graph = nullptr;
  int max_length = kDefaultMaxLength;
  PathCover cover;  // ordered
  // PathCodeHash of each cover path's code.
  std::vector<std::size_t> code_hashes;
  DistinctNeighborhoodTable neighborhoods;

  static FastPQuery prepare(const LabeledGraph& q, int max_length, int cap = kDefaultMaxLengthCap);
};

/// Per-search bookkeeping for stitching path matches together. Data-side
/// arrays only grow, since every run leaves them cleared.
struct StitchState {
  // Number of assigned cover paths containing each query / data vertex.
  std::vector<std::uint32_t> query_count;
  std::vector<std::uint32_t> data_count;
  // h: query vertex -> data vertex, and its inverse.
  std::vector<VertexId> image;
  std::vector<VertexId> inverse;
  // Per cover path, the assigned candidate index (or kUnassigned).
  std::vector<std::uint32_t> assignment;
  // Per undirected data path: currently matched.
  std::vector<bool> path_matched;

  static constexpr std::uint32_t kUnassigned = 0xffffffffu;

  /// True when no path is assigned and every counter and image is reset.
  bool is_clear() const;
};

/// One path-at-a-time search for one query, reusable across data graphs.
/// Kept as an object so callers (tests) can inspect the stitch state and
/// candidates after a run.
class FastPSearch {
 public:
  explicit FastPSearch(const FastPQuery& q);

  /// `g` must have been prepared with a PathTable of the query's max_length;
  /// throws kConfigError otherwise.
  MatchOutcome run(const PreparedGraph& g, const SearchOptions& options = {});

  const StitchState& state() const noexcept { return state_; }
  /// Candidate sets of the last run. After a run rejected at an empty set,
  /// sets after that one are stale.
  const PathCandidates& candidates() const noexcept { return candidates_; }

 private:
  bool search(std::size_t i);
  bool matchable(std::size_t i, std::span<const VertexId> target) const;
  void bind(std::size_t i, std::size_t k);
  void unbind(std::size_t i, std::size_t k);
  bool record();

  const FastPQuery* query_;
  PathCandidates candidates_;
  StitchState state_;
  InclusionMemo memo_;

  // Per run.
  const PreparedGraph* data_ = nullptr;
  const SearchOptions* options_ = nullptr;
  MatchOutcome* out_ = nullptr;
  std::optional<detail::DeadlineGuard> guard_;
};

MatchOutcome fast_p_match(const LabeledGraph& q, const LabeledGraph& g, int max_length = kDefaultMaxLength,
                          const SearchOptions& options = {});

/// `g` must have been prepared with a PathTable of the query's max_length.
MatchOutcome fast_p_match(const FastPQuery& q, const PreparedGraph& g, const SearchOptions& options = {});

}  // namespace fastsi

#endif  // FASTSI_FAST_P_H_
