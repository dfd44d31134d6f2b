#ifndef FASTSI_PREPARED_H_
#define FASTSI_PREPARED_H_

#include <optional>
#include <span>
#include <vector>

#include "fastsi/graph.h"
#include "fastsi/neighborhood.h"
#include "fastsi/paths.h"

namespace fastsi {

/// Data-graph side structures that only depend on the data graph, built once
/// and reused across queries. Holds a non-owning pointer to the graph.
struct PreparedGraph {
  const LabeledGraph* graph = nullptr;
  DistinctNeighborhoodTable neighborhoods;
  // Present when prepared for the path engine.
  std::optional<PathTable> paths;
  // Vertices grouped by label, increasing index within a group.
  std::vector<VertexId> by_label;

  std::span<const VertexId> with_label(Label l) const;
};

/// `path_max_length` = 0 skips path enumeration.
PreparedGraph prepare_graph(const LabeledGraph& g, int path_max_length = 0,
                            int cap = kDefaultMaxLengthCap);

}  // namespace fastsi

#endif  // FASTSI_PREPARED_H_
