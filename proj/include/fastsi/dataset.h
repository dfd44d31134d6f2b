#ifndef FASTSI_DATASET_H_
#define FASTSI_DATASET_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fastsi/graph.h"

namespace fastsi {

/// A transaction-style collection of graphs sharing one label alphabet.
struct GraphDataset {
  std::string source;
  Alphabet alphabet;
  std::vector<LabeledGraph> graphs;
  // Original graph ids from the `t # <id>` lines, parallel to `graphs`.
  std::vector<std::string> ids;
  // Non-fatal validation notes, e.g. accepted disconnected graphs.
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return graphs.size(); }
  double average_vertices() const;
  double average_edges() const;

  void add(LabeledGraph g, std::string id) {
    graphs.push_back(std::move(g));
    ids.push_back(std::move(id));
  }
};

/// A dataset of connected queries that all have `nominal_size` edges.
struct QuerySet {
  std::string name;
  std::size_t nominal_size = 0;
  GraphDataset queries;
  // For extracted queries: index of the data graph each query came from.
  std::vector<std::size_t> sources;
};

enum class DisconnectedPolicy { kReject, kWarn };

struct ReadOptions {
  bool strip_edge_labels = false;
  DisconnectedPolicy disconnected = DisconnectedPolicy::kReject;
};

/// Parses the text format:
///   # comment
///   t # <graph-id>
///   v <index> <label>
///   e <u> <v> [<label>]
/// Vertex indices are 0-based and contiguous per graph. `t # -1` ends input.
/// Labels are interned on top of `base`, so a query file can be read against
/// a data file's alphabet. Throws kParseError (with line number) or
/// kValidationError (with graph id).
GraphDataset parse_dataset(std::istream& in, const ReadOptions& options = {}, const Alphabet& base = {},
                           std::string source = "<stream>");

GraphDataset read_dataset(const std::filesystem::path& path, const ReadOptions& options = {},
                          const Alphabet& base = {});

void write_dataset(const GraphDataset& ds, std::ostream& out);
void write_dataset(const GraphDataset& ds, const std::filesystem::path& path);

/// Every edge label replaced by the default (absent) label.
GraphDataset strip_edge_labels(const GraphDataset& ds);

/// Same graph ids, and graphs equal when labels are compared by name.
bool structurally_equal(const GraphDataset& a, const GraphDataset& b);

/// Wraps a dataset as a query set, checking connectivity and edge counts.
/// Throws kValidationError.
QuerySet make_query_set(std::string name, std::size_t nominal_size, GraphDataset queries);

}  // namespace fastsi

#endif  // FASTSI_DATASET_H_
