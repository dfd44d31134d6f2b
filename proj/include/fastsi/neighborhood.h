#ifndef FASTSI_NEIGHBORHOOD_H_
#define FASTSI_NEIGHBORHOOD_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fastsi/graph.h"

namespace fastsi {

// (neighbor vertex label, incident edge label)
using NeighborhoodEntry = std::pair<Label, Label>;

// Sorted multiset of entries; duplicates are significant.
using LabeledNeighborhood = std::vector<NeighborhoodEntry>;

/// NL(u): one entry per incident edge, sorted. Throws kIndexOutOfRange.
LabeledNeighborhood compute_neighborhood(const LabeledGraph& g, VertexId u);

/// Multiset inclusion a ⊆ b over sorted entry lists, by linear merge.
bool multiset_includes(std::span<const NeighborhoodEntry> a, std::span<const NeighborhoodEntry> b);

/// Distinct labeled neighborhoods of one graph and, per vertex, the index of
/// its neighborhood in `dln` (the position array).
struct DistinctNeighborhoodTable {
  std::vector<LabeledNeighborhood> dln;
  std::vector<std::uint32_t> position;

  const LabeledNeighborhood& of(VertexId v) const { return dln[position[v]]; }
};

DistinctNeighborhoodTable build_neighborhood_table(const LabeledGraph& g);

/// Row-major bit matrix; bit (i, j) set iff query dln[i] ⊆ data dln[j].
class InclusionMatrix {
 public:
  InclusionMatrix() = default;
  InclusionMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

  static InclusionMatrix build(const DistinctNeighborhoodTable& query, const DistinctNeighborhoodTable& data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_per_row_ + (j >> 6)] |= std::uint64_t{1} << (j & 63); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Cache of inclusion results for one (query, data graph) pair at a time.
/// Entries are stamped with a generation so that moving to the next data
/// graph does not need to clear the buffer.
class InclusionMemo {
 public:
  void reset(std::size_t cells) {
    if (cells > cells_.size()) cells_.resize(cells, 0);
    if (++generation_ >= kMaxGeneration) {
      std::fill(cells_.begin(), cells_.end(), 0);
      generation_ = 1;
    }
  }

  // 0 unknown, 1 excluded, 2 included.
  int get(std::size_t k) const { return (cells_[k] >> 1) == generation_ ? 1 + (cells_[k] & 1) : 0; }
  void put(std::size_t k, bool included) { cells_[k] = (generation_ << 1) | (included ? 1u : 0u); }

 private:
  static constexpr std::uint32_t kMaxGeneration = 0x7fffffffu;

  std::vector<std::uint32_t> cells_;
  std::uint32_t generation_ = 0;
};

/// Neighborhood inclusion test between a query and a data graph through the
/// position arrays: admits(u, v) iff NL_q(u) ⊆ NL_G(v). Non-owning. Backed
/// either by a prebuilt matrix or by a memo that fills entries on first use.
class InclusionTest {
 public:
  InclusionTest(const DistinctNeighborhoodTable& query, const DistinctNeighborhoodTable& data,
                const InclusionMatrix& matrix)
      : query_(&query), data_(&data), matrix_(&matrix) {}

  // Resets `memo`, which must outlive the test.
  InclusionTest(const DistinctNeighborhoodTable& query, const DistinctNeighborhoodTable& data, InclusionMemo& memo)
      : query_(&query), data_(&data), memo_(&memo) {
    memo.reset(query.dln.size() * data.dln.size());
  }

  bool admits(VertexId u, VertexId v) const {
    const std::uint32_t i = query_->position[u];
    const std::uint32_t j = data_->position[v];
    if (matrix_) return matrix_->test(i, j);
    const std::size_t k = i * data_->dln.size() + j;
    const int cached = memo_->get(k);
    if (cached) return cached == 2;
    const bool included = multiset_includes(query_->dln[i], data_->dln[j]);
    memo_->put(k, included);
    return included;
  }

 private:
  const DistinctNeighborhoodTable* query_;
  const DistinctNeighborhoodTable* data_;
  const InclusionMatrix* matrix_ = nullptr;
  InclusionMemo* memo_ = nullptr;
};

/// Everything needed for O(1) inclusion tests on one (q, G) pair.
struct NeighborhoodIndex {
  DistinctNeighborhoodTable query;
  DistinctNeighborhoodTable data;
  InclusionMatrix inclusion;

  InclusionTest test() const { return InclusionTest(query, data, inclusion); }
};

NeighborhoodIndex build_index(const LabeledGraph& q, const LabeledGraph& g);

}  // namespace fastsi

#endif  // FASTSI_NEIGHBORHOOD_H_
