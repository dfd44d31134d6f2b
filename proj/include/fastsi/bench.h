#ifndef FASTSI_BENCH_H_
#define FASTSI_BENCH_H_

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fastsi/dataset.h"
#include "fastsi/match.h"

namespace fastsi {

struct BenchDataset {
  std::string name;
  GraphDataset data;
  // Query sets read against data.alphabet.
  std::vector<QuerySet> query_sets;
};

struct BenchConfig {
  std::vector<Engine> engines{Engine::kUllman, Engine::kFastOn, Engine::kFastP};
  // Unset: each query picks its own maxL with choose_max_length().
  std::optional<int> max_length = 2;
  int repetitions = 1;
  bool warmup = true;
  std::chrono::milliseconds timeout{10000};
  unsigned threads = 1;
  // Empty: the whole dataset. Otherwise one run per prefix of the first K graphs.
  std::vector<std::size_t> prefixes;
};

struct QueryResult {
  double time_ms = 0.0;
  // Data graphs containing the query (a lower bound when timed out).
  std::size_t answers = 0;
  bool timed_out = false;
  std::uint64_t recursive_calls = 0;
  std::uint64_t candidates = 0;
};

struct BenchRow {
  std::string engine;
  std::string dataset;
  std::string queryset;
  std::size_t queries = 0;
  std::size_t graphs = 0;
  std::string max_length;  // a number, "auto", or "-" for vertex engines
  double total_time_ms = 0.0;
  double mean_query_ms = 0.0;
  double median_query_ms = 0.0;
  double index_build_ms = 0.0;
  std::uint64_t recursive_calls = 0;
  std::uint64_t candidates = 0;
  std::uint64_t answers = 0;
  std::uint64_t timeouts = 0;
  // Per-query entries of the reported repetition; not part of the CSV.
  std::vector<QueryResult> per_query;

  // Columns that do not depend on timing.
  bool same_counts(const BenchRow& other) const;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Queries whose answer counts differ between engines (timeouts excluded).
  std::vector<std::string> disagreements;
};

/// Runs every engine over every (dataset prefix, query set) pair. Time per
/// query covers query-side preparation plus one containment check per data
/// graph; data-side index construction is timed separately.
BenchReport run_benchmark(const std::vector<BenchDataset>& inputs, const BenchConfig& config);

enum class ReportFormat { kCsv, kTsv, kMarkdown };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Column order: engine,dataset,queryset,queries,graphs,max_length,
/// total_time_ms,mean_query_ms,median_query_ms,index_build_ms,
/// recursive_calls,candidates,answers,timeouts. Times carry 3 decimals.
void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out);

/// Rows from a CSV written by emit_report (or hand-made with the same
/// header, e.g. timings of an external matcher). Throws kParseError.
std::vector<BenchRow> parse_report_csv(std::istream& in);

/// One whitespace-separated "x y" file per engine, named <engine>.dat, with
/// y = total_time_ms. x is the dataset size when `by_graphs`, otherwise the
/// query set's nominal size. Returns the written paths.
std::vector<std::filesystem::path> emit_plotdata(const std::vector<BenchRow>& rows, bool by_graphs,
                                                 const std::filesystem::path& dir);

}  // namespace fastsi

#endif  // FASTSI_BENCH_H_
