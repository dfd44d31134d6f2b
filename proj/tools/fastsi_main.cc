// fastsi: subgraph matching, benchmarking and dataset tools.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fastsi/bench.h"
#include "fastsi/dataset.h"
#include "fastsi/fast_on.h"
#include "fastsi/fast_p.h"
#include "fastsi/generator.h"
#include "fastsi/prepared.h"
#include "fastsi/ullman.h"

namespace {

using namespace fastsi;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

std::optional<int> parse_max_length(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kConfigError, "bad --maxL '" + text + "'");
  }
}

Engine engine_or_throw(const std::string& text) {
  auto e = parse_engine(text);
  if (!e) throw Error(ErrorCode::kConfigError, "unknown engine '" + text + "' (ullman, fast-on, fast-p)");
  return *e;
}

std::string format_code(const PathCode& code, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ' ';
    if (i % 2 == 0) {
      out += a.vertex.name(code[i]);
    } else {
      const std::string& name = a.edge.name(code[i]);
      out += name.empty() ? "-" : name;
    }
  }
  return out;
}

std::string format_mapping(const Mapping& m) {
  std::string out;
  for (std::size_t u = 0; u < m.images().size(); ++u) {
    if (u) out += ' ';
    out += std::to_string(u) + "->" + std::to_string(m.images()[u]);
  }
  return out;
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonFlags {
  bool strip = false;
  ReadOptions read() const {
    ReadOptions o;
    o.strip_edge_labels = strip;
    return o;
  }
};

// ---- match ----

struct MatchArgs {
  std::string query_file;
  std::string data_file;
  std::string engine = "fast-on";
  std::string max_length = "auto";
  std::string mode = "witness";
  std::size_t query_index = 0;
  long long timeout_ms = 10000;
  CommonFlags common;
};

int run_match(const MatchArgs& args) {
  const Engine engine = engine_or_throw(args.engine);
  const auto mode = parse_match_mode(args.mode);
  if (!mode) throw Error(ErrorCode::kConfigError, "unknown mode '" + args.mode + "'");
  const GraphDataset data = read_dataset(args.data_file, args.common.read());
  const GraphDataset queries = read_dataset(args.query_file, args.common.read(), data.alphabet);
  if (args.query_index >= queries.size()) {
    throw Error(ErrorCode::kConfigError, "query index " + std::to_string(args.query_index) + " out of range");
  }
  const LabeledGraph& q = queries.graphs[args.query_index];

  SearchOptions options;
  options.mode = *mode;
  options.deadline = Clock::now() + std::chrono::milliseconds(args.timeout_ms);

  std::optional<FastOnQuery> on;
  std::optional<FastPQuery> fp;
  int maxL = 0;
  if (engine == Engine::kFastOn) on = FastOnQuery::prepare(q);
  if (engine == Engine::kFastP) {
    const auto choice = choose_max_length(q, parse_max_length(args.max_length));
    maxL = choice.max_length;
    if (!choice.rule_satisfied) std::cerr << "note: |E|/|V| < maxL does not hold for maxL=" << maxL << '\n';
    fp = FastPQuery::prepare(q, maxL);
  }

  bool any = false;
  bool timed_out = false;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const LabeledGraph& g = data.graphs[i];
    MatchOutcome m;
    switch (engine) {
      case Engine::kUllman:
        m = ullman_match(q, g, options);
        break;
      case Engine::kFastOn:
        m = fast_on_match(*on, prepare_graph(g), options);
        break;
      case Engine::kFastP:
        m = fast_p_match(*fp, prepare_graph(g, maxL), options);
        break;
    }
    any = any || m.found;
    timed_out = timed_out || m.timed_out;
    std::cout << "graph " << data.ids[i] << ": " << (m.timed_out ? "timeout" : m.found ? "found" : "not found");
    if (*mode == MatchMode::kCountAll) std::cout << " witnesses=" << m.witness_count;
    std::cout << " recursive_calls=" << m.stats.recursive_calls << " candidates=" << m.stats.candidates << '\n';
    if (m.witness && *mode != MatchMode::kBoolean) std::cout << "  witness " << format_mapping(*m.witness) << '\n';
  }
  if (timed_out && !any) return kExitError;
  return any ? kExitFound : kExitNotFound;
}

// ---- bench ----

struct BenchArgs {
  std::vector<std::string> data_files;
  std::vector<std::string> query_files;
  std::vector<std::string> engines{"ullman", "fast-on", "fast-p"};
  std::string max_length = "2";
  std::string mode = "boolean";
  long long timeout_ms = 10000;
  int repetitions = 1;
  unsigned threads = 1;
  std::vector<std::size_t> prefixes;
  bool no_warmup = false;
  std::string output;
  std::string format = "csv";
  std::string plotdata;
  std::vector<std::string> merge;
  CommonFlags common;
};

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int run_bench(const BenchArgs& args) {
  if (args.mode != "boolean") throw Error(ErrorCode::kConfigError, "bench runs in boolean mode only");
  const auto format = parse_report_format(args.format);
  if (!format) throw Error(ErrorCode::kConfigError, "unknown format '" + args.format + "'");

  BenchConfig config;
  config.engines.clear();
  for (const auto& e : args.engines) config.engines.push_back(engine_or_throw(e));
  config.max_length = parse_max_length(args.max_length);
  config.timeout = std::chrono::milliseconds(args.timeout_ms);
  config.repetitions = args.repetitions;
  config.threads = args.threads;
  config.prefixes = args.prefixes;
  config.warmup = !args.no_warmup;

  std::vector<BenchDataset> inputs;
  for (const auto& path : args.data_files) {
    BenchDataset in;
    in.name = stem(path);
    in.data = read_dataset(path, args.common.read());
    for (const auto& qpath : args.query_files) {
      GraphDataset qs = read_dataset(qpath, args.common.read(), in.data.alphabet);
      const std::size_t size = qs.graphs.empty() ? 0 : qs.graphs.front().num_edges();
      in.query_sets.push_back(make_query_set(stem(qpath), size, std::move(qs)));
    }
    inputs.push_back(std::move(in));
  }

  BenchReport report = run_benchmark(inputs, config);
  std::vector<BenchRow> rows = report.rows;
  for (const auto& path : args.merge) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
    auto extra = parse_report_csv(in);
    rows.insert(rows.end(), extra.begin(), extra.end());
  }

  Sink sink(args.output);
  emit_report(rows, *format, sink.out());
  if (!args.plotdata.empty()) emit_plotdata(rows, !args.prefixes.empty(), args.plotdata);
  for (const auto& d : report.disagreements) std::cerr << "disagreement: " << d << '\n';
  return report.disagreements.empty() ? 0 : 1;
}

// ---- gen ----

struct GenArgs {
  std::string name;
  std::size_t count = 0;
  std::size_t edges = 0;
  double density = 0.0;
  std::size_t labels = 0;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen(const GenArgs& args) {
  GeneratorParams p;
  if (!args.name.empty()) p = parse_dataset_name(args.name);
  if (args.count) p.count = args.count;
  if (args.edges) p.avg_edges = args.edges;
  if (args.density > 0) p.density = args.density;
  if (args.labels) p.labels = args.labels;
  p.seed = args.seed;
  const GraphDataset ds = generate_dataset(p);
  Sink sink(args.output);
  write_dataset(ds, sink.out());
  std::cerr << dataset_name(p) << ": " << ds.size() << " graphs, avg |V| " << ds.average_vertices() << ", avg |E| "
            << ds.average_edges() << '\n';
  return 0;
}

// ---- extract-queries ----

struct ExtractArgs {
  std::string data_file;
  std::size_t size = 0;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::string output;
  CommonFlags common;
};

int run_extract(const ExtractArgs& args) {
  const GraphDataset ds = read_dataset(args.data_file, args.common.read());
  const QuerySet qs = extract_queries(ds, args.size, args.count, args.seed);
  Sink sink(args.output);
  write_dataset(qs.queries, sink.out());
  return 0;
}

// ---- paths ----

struct PathsArgs {
  std::string query_file;
  std::string data_file;
  std::string max_length = "auto";
  std::size_t query_index = 0;
  CommonFlags common;
};

int run_paths(const PathsArgs& args) {
  std::optional<GraphDataset> data;
  if (!args.data_file.empty()) data = read_dataset(args.data_file, args.common.read());
  const GraphDataset queries =
      read_dataset(args.query_file, args.common.read(), data ? data->alphabet : Alphabet{});
  if (args.query_index >= queries.size()) {
    throw Error(ErrorCode::kConfigError, "query index " + std::to_string(args.query_index) + " out of range");
  }
  const LabeledGraph& q = queries.graphs[args.query_index];
  const auto choice = choose_max_length(q, parse_max_length(args.max_length));
  const FastPQuery fp = FastPQuery::prepare(q, choice.max_length);

  std::cout << "query " << queries.ids[args.query_index] << ": |V|=" << q.num_vertices() << " |E|=" << q.num_edges()
            << " density=" << query_density(q) << " maxL=" << choice.max_length
            << (choice.rule_satisfied ? "" : " (rule not satisfied)") << '\n';
  std::cout << "cover: " << fp.cover.paths.size() << " paths\n";
  for (std::size_t i = 0; i < fp.cover.paths.size(); ++i) {
    const CanonicalPath& p = fp.cover.paths[i];
    std::cout << "  p" << i << ":";
    for (VertexId v : p.path.vertices) std::cout << ' ' << v;
    std::cout << "  code [" << format_code(p.code, queries.alphabet) << "]" << (p.is_iso ? " iso" : "") << '\n';
  }
  if (!data) return 0;

  for (std::size_t gi = 0; gi < data->size(); ++gi) {
    const PreparedGraph pg = prepare_graph(data->graphs[gi], choice.max_length);
    const InclusionMatrix matrix = InclusionMatrix::build(fp.neighborhoods, pg.neighborhoods);
    const auto cand = fast_p_candidates(fp.cover, *pg.paths, InclusionTest(fp.neighborhoods, pg.neighborhoods, matrix));
    std::cout << "graph " << data->ids[gi] << ": candidates";
    for (const auto& set : cand) std::cout << ' ' << set.size();
    std::cout << '\n';
  }
  return 0;
}

// ---- validate ----

struct ValidateArgs {
  std::vector<std::string> files;
  bool allow_disconnected = false;
  CommonFlags common;
};

int run_validate(const ValidateArgs& args) {
  int status = 0;
  for (const auto& path : args.files) {
    ReadOptions o = args.common.read();
    if (args.allow_disconnected) o.disconnected = DisconnectedPolicy::kWarn;
    try {
      const GraphDataset ds = read_dataset(path, o);
      std::cout << path << ": ok, " << ds.size() << " graphs, avg |V| " << ds.average_vertices() << ", avg |E| "
                << ds.average_edges() << ", " << ds.alphabet.vertex.size() << " vertex labels, "
                << ds.alphabet.edge.size() - 1 << " edge labels\n";
      for (const auto& w : ds.warnings) std::cout << "  warning: " << w << '\n';
    } catch (const Error& e) {
      std::cout << path << ": " << to_string(e.code()) << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled subgraph isomorphism: Ullman, Fast-ON and Fast-P engines"};
  app.require_subcommand(1);

  MatchArgs match;
  auto* m = app.add_subcommand("match", "Match one query against every graph of a data file");
  m->add_option("query", match.query_file, "Query file")->required();
  m->add_option("data", match.data_file, "Data file")->required();
  m->add_option("--engine", match.engine, "ullman | fast-on | fast-p")->capture_default_str();
  m->add_option("--maxL", match.max_length, "Path length for fast-p, or auto")->capture_default_str();
  m->add_option("--mode", match.mode, "boolean | witness | count-all")->capture_default_str();
  m->add_option("--query-index", match.query_index, "Which graph of the query file")->capture_default_str();
  m->add_option("--timeout-ms", match.timeout_ms, "Time limit for the whole run")->capture_default_str();
  m->add_flag("--strip-edge-labels", match.common.strip, "Ignore edge labels");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run engines over data and query sets, print a timing table");
  b->add_option("--data", bench.data_files, "Data file (repeatable)")->required();
  b->add_option("--queries", bench.query_files, "Query set file (repeatable)")->required();
  b->add_option("--engine", bench.engines, "Engines to run (repeatable)")->delimiter(',')->capture_default_str();
  b->add_option("--maxL", bench.max_length, "Path length for fast-p, or auto")->capture_default_str();
  b->add_option("--mode", bench.mode, "Only boolean is supported")->capture_default_str();
  b->add_option("--timeout-ms", bench.timeout_ms, "Per-query time limit")->capture_default_str();
  b->add_option("--repetitions", bench.repetitions, "Timed repetitions; the fastest is kept")->capture_default_str();
  b->add_option("--threads", bench.threads, "Worker threads over queries")->capture_default_str();
  b->add_option("--prefix", bench.prefixes, "Dataset prefix sizes for a scalability sweep")->delimiter(',');
  b->add_flag("--no-warmup", bench.no_warmup, "Skip the untimed warm-up");
  b->add_option("--output", bench.output, "Report file (default stdout)");
  b->add_option("--format", bench.format, "csv | tsv | markdown")->capture_default_str();
  b->add_option("--plotdata", bench.plotdata, "Directory for per-engine series files");
  b->add_option("--merge-csv", bench.merge, "Extra rows from a CSV report (repeatable)");
  b->add_flag("--strip-edge-labels", bench.common.strip, "Ignore edge labels");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic dataset");
  g->add_option("--name", gen.name, "Syn<N>.E<E>.D<D>.L<L>, e.g. Syn1K.E30.D5.L50");
  g->add_option("--count", gen.count, "Number of graphs");
  g->add_option("--edges", gen.edges, "Average edge count");
  g->add_option("--density", gen.density, "Density in (0, 1]");
  g->add_option("--labels", gen.labels, "Label alphabet size");
  g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  g->add_option("--output", gen.output, "Output file (default stdout)");

  ExtractArgs extract;
  auto* x = app.add_subcommand("extract-queries", "Sample connected queries from a dataset");
  x->add_option("data", extract.data_file, "Data file")->required();
  x->add_option("--size", extract.size, "Edges per query")->required();
  x->add_option("--count", extract.count, "Number of queries")->capture_default_str();
  x->add_option("--seed", extract.seed, "Random seed")->capture_default_str();
  x->add_option("--output", extract.output, "Output file (default stdout)");
  x->add_flag("--strip-edge-labels", extract.common.strip, "Ignore edge labels");

  PathsArgs paths;
  auto* p = app.add_subcommand("paths", "Show a query's path cover and, with --data, its path candidates");
  p->add_option("query", paths.query_file, "Query file")->required();
  p->add_option("--data", paths.data_file, "Data file");
  p->add_option("--maxL", paths.max_length, "Path length, or auto")->capture_default_str();
  p->add_option("--query-index", paths.query_index, "Which graph of the query file")->capture_default_str();
  p->add_flag("--strip-edge-labels", paths.common.strip, "Ignore edge labels");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check dataset files");
  v->add_option("files", validate.files, "Dataset files")->required();
  v->add_flag("--allow-disconnected", validate.allow_disconnected, "Accept disconnected graphs with a warning");
  v->add_flag("--strip-edge-labels", validate.common.strip, "Ignore edge labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*m) return run_match(match);
    if (*b) return run_bench(bench);
    if (*g) return run_gen(gen);
    if (*x) return run_extract(extract);
    if (*p) return run_paths(paths);
    if (*v) return run_validate(validate);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
