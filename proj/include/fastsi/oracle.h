#ifndef FASTSI_ORACLE_H_
#define FASTSI_ORACLE_H_

#include <vector>

#include "fastsi/graph.h"

namespace fastsi::oracle {

inline constexpr std::size_t kMaxQueryVertices = 8;
inline constexpr std::size_t kMaxDataVertices = 12;

/// Every injective, label- and edge-preserving mapping from q into g, found by
/// plain enumeration of injective label-compatible assignments. Shares no
/// pruning with the engines. Throws kTooLargeForOracle beyond the size guard.
std::vector<Mapping> enumerate(const LabeledGraph& q, const LabeledGraph& g);

/// The oracle's own witness check (independent of verify_mapping).
bool is_witness(const LabeledGraph& q, const LabeledGraph& g, const std::vector<VertexId>& images);

/// One representative per distinct image subgraph (image edge set, or image
/// vertex set for edgeless queries). Keeps the first witness of each group.
std::vector<Mapping> dedupe_redundant(const std::vector<Mapping>& witnesses, const LabeledGraph& q,
                                      const LabeledGraph& g);

}  // namespace fastsi::oracle

#endif  // FASTSI_ORACLE_H_
