#include "fastsi/bench.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "fastsi/fast_on.h"
#include "fastsi/fast_p.h"
#include "fastsi/prepared.h"
#include "fastsi/ullman.h"

namespace fastsi {

bool BenchRow::same_counts(const BenchRow& o) const {
  return engine == o.engine && dataset == o.dataset && queryset == o.queryset && queries == o.queries &&
         graphs == o.graphs && max_length == o.max_length && recursive_calls == o.recursive_calls &&
         candidates == o.candidates && answers == o.answers && timeouts == o.timeouts;
}

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Data-side structures for one engine and maxL, with per-graph build times so
// that any prefix can be charged its own share.
struct DataIndex {
  std::vector<PreparedGraph> graphs;
  std::vector<double> build_ms;

  double prefix_ms(std::size_t k) const { return std::accumulate(build_ms.begin(), build_ms.begin() + k, 0.0); }
};

DataIndex build_index(const GraphDataset& ds, int path_max_length) {
  DataIndex out;
  out.graphs.reserve(ds.graphs.size());
  for (const LabeledGraph& g : ds.graphs) {
    const auto start = Clock::now();
    out.graphs.push_back(prepare_graph(g, path_max_length));
    out.build_ms.push_back(ms_since(start));
  }
  return out;
}

class Runner {
 public:
  Runner(const BenchDataset& input, const BenchConfig& config) : input_(input), config_(config) {}

  // Answers one query over the first `k` data graphs.
  QueryResult run_query(Engine engine, const LabeledGraph& q, std::size_t k) {
    QueryResult r;
    const auto start = Clock::now();
    SearchOptions options;
    options.mode = MatchMode::kBoolean;
    options.deadline = start + config_.timeout;
    options.trace_order = false;
    auto account = [&](const MatchOutcome& m) {
      r.recursive_calls += m.stats.recursive_calls;
      r.candidates += m.stats.candidates;
      if (m.timed_out) r.timed_out = true;
      if (m.found) ++r.answers;
    };
    const auto& graphs = input_.data.graphs;
    switch (engine) {
      case Engine::kUllman: {
        UllmanMatcher matcher(q);
        for (std::size_t i = 0; i < k && !r.timed_out; ++i) account(matcher.match(graphs[i], options));
        break;
      }
      case Engine::kFastOn: {
        const FastOnQuery fq = FastOnQuery::prepare(q);
        FastOnMatcher matcher(fq);
        const DataIndex& idx = indexes_.at(0);
        for (std::size_t i = 0; i < k && !r.timed_out; ++i) account(matcher.match(idx.graphs[i], options));
        break;
      }
      case Engine::kFastP: {
        const int maxL = choose_max_length(q, config_.max_length).max_length;
        const FastPQuery pq = FastPQuery::prepare(q, maxL);
        FastPSearch search(pq);
        const DataIndex& idx = indexes_.at(maxL);
        for (std::size_t i = 0; i < k && !r.timed_out; ++i) account(search.run(idx.graphs[i], options));
        break;
      }
    }
    r.time_ms = ms_since(start);
    return r;
  }

  // Built before timing starts; lookups afterwards are read-only.
  const DataIndex& index(int path_max_length) {
    auto it = indexes_.find(path_max_length);
    if (it == indexes_.end()) it = indexes_.emplace(path_max_length, build_index(input_.data, path_max_length)).first;
    return it->second;
  }

  std::set<int> needed_path_lengths(const QuerySet& qs) const {
    std::set<int> out;
    for (const LabeledGraph& q : qs.queries.graphs) out.insert(choose_max_length(q, config_.max_length).max_length);
    return out;
  }

  std::vector<QueryResult> run_set(Engine engine, const QuerySet& qs, std::size_t k) {
    const auto& queries = qs.queries.graphs;
    std::vector<QueryResult> results(queries.size());
    const unsigned threads = std::max(1u, config_.threads);
    if (threads == 1) {
      for (std::size_t i = 0; i < queries.size(); ++i) results[i] = run_query(engine, queries[i], k);
      return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < queries.size();) results[i] = run_query(engine, queries[i], k);
      });
    }
    for (auto& th : pool) th.join();
    return results;
  }

  double build_ms(Engine engine, const QuerySet& qs, std::size_t k) {
    switch (engine) {
      case Engine::kUllman:
        return 0.0;
      case Engine::kFastOn:
        return index(0).prefix_ms(k);
      case Engine::kFastP: {
        double total = 0.0;
        for (int m : needed_path_lengths(qs)) total += index(m).prefix_ms(k);
        return total;
      }
    }
    return 0.0;
  }

 private:
  const BenchDataset& input_;
  const BenchConfig& config_;
  std::map<int, DataIndex> indexes_;
};

BenchRow summarize(Engine engine, const BenchDataset& input, const QuerySet& qs, std::size_t k,
                   const BenchConfig& config, std::vector<QueryResult> results) {
  BenchRow row;
  row.engine = std::string(to_string(engine));
  row.dataset = input.name;
  row.queryset = qs.name;
  row.queries = results.size();
  row.graphs = k;
  if (engine == Engine::kFastP) {
    row.max_length = config.max_length ? std::to_string(*config.max_length) : "auto";
  } else {
    row.max_length = "-";
  }
  std::vector<double> times;
  for (const QueryResult& r : results) {
    row.total_time_ms += r.time_ms;
    row.recursive_calls += r.recursive_calls;
    row.candidates += r.candidates;
    row.answers += r.answers;
    row.timeouts += r.timed_out ? 1 : 0;
    times.push_back(r.time_ms);
  }
  if (!times.empty()) {
    row.mean_query_ms = row.total_time_ms / static_cast<double>(times.size());
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size() / 2;
    row.median_query_ms = times.size() % 2 ? times[m] : (times[m - 1] + times[m]) / 2.0;
  }
  row.per_query = std::move(results);
  return row;
}

void check_agreement(const std::vector<const BenchRow*>& rows, BenchReport& report) {
  if (rows.size() < 2) return;
  const BenchRow& ref = *rows.front();
  for (std::size_t i = 0; i < ref.per_query.size(); ++i) {
    std::optional<std::size_t> answer;
    bool differ = false;
    for (const BenchRow* row : rows) {
      const QueryResult& r = row->per_query[i];
      if (r.timed_out) continue;
      if (answer && *answer != r.answers) differ = true;
      answer = r.answers;
    }
    if (differ) {
      std::string msg = ref.dataset + "/" + std::to_string(ref.graphs) + "/" + ref.queryset + " query " +
                        std::to_string(i) + ":";
      for (const BenchRow* row : rows) {
        msg += " " + row->engine + "=" + std::to_string(row->per_query[i].answers);
      }
      report.disagreements.push_back(std::move(msg));
    }
  }
}

}  // namespace

BenchReport run_benchmark(const std::vector<BenchDataset>& inputs, const BenchConfig& config) {
  if (config.engines.empty()) throw Error(ErrorCode::kConfigError, "no engines selected");
  if (config.repetitions < 1) throw Error(ErrorCode::kConfigError, "repetitions must be at least 1");
  if (config.max_length && (*config.max_length < 1 || *config.max_length > kDefaultMaxLengthCap)) {
    throw Error(ErrorCode::kConfigError, "maxL must lie in [1, " + std::to_string(kDefaultMaxLengthCap) + "]");
  }
  BenchReport report;
  for (const BenchDataset& input : inputs) {
    Runner runner(input, config);
    std::vector<std::size_t> sizes = config.prefixes;
    if (sizes.empty()) sizes.push_back(input.data.size());
    for (std::size_t k : sizes) {
      if (k > input.data.size()) {
        throw Error(ErrorCode::kConfigError, "prefix " + std::to_string(k) + " exceeds dataset " + input.name +
                                                 " of " + std::to_string(input.data.size()) + " graphs");
      }
    }
    for (const QuerySet& qs : input.query_sets) {
      for (Engine e : config.engines) {
        if (e == Engine::kFastOn) runner.index(0);
        if (e == Engine::kFastP) {
          for (int m : runner.needed_path_lengths(qs)) runner.index(m);
        }
      }
    }

    for (std::size_t k : sizes) {
      for (const QuerySet& qs : input.query_sets) {
        const std::size_t first = report.rows.size();
        for (Engine engine : config.engines) {
          if (config.warmup) {
            const std::size_t n = std::min<std::size_t>(qs.queries.size(), 8);
            for (std::size_t i = 0; i < n; ++i) runner.run_query(engine, qs.queries.graphs[i], k);
          }
          std::optional<BenchRow> best;
          for (int rep = 0; rep < config.repetitions; ++rep) {
            BenchRow row = summarize(engine, input, qs, k, config, runner.run_set(engine, qs, k));
            if (!best || row.total_time_ms < best->total_time_ms) best = std::move(row);
          }
          best->index_build_ms = runner.build_ms(engine, qs, k);
          report.rows.push_back(std::move(*best));
        }
        std::vector<const BenchRow*> group;
        for (std::size_t i = first; i < report.rows.size(); ++i) group.push_back(&report.rows[i]);
        check_agreement(group, report);
      }
    }
  }
  return report;
}

}  // namespace fastsi
