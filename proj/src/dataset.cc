#include "fastsi/dataset.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace fastsi {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<VertexId> parse_index(std::string_view text) {
  VertexId value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) + ": " + what);
}

struct PendingGraph {
  std::string id;
  std::size_t line = 0;
  std::vector<std::optional<Label>> labels;
  std::vector<EdgeSpec> edges;
};

class Parser {
 public:
  Parser(const ReadOptions& options, const Alphabet& base, std::string source) : options_(options) {
    ds_.source = std::move(source);
    ds_.alphabet = base;
  }

  void line(std::string_view text, std::size_t number) {
    const auto fields = split_fields(text);
    if (fields.empty() || fields[0].front() == '#') return;
    const std::string_view kind = fields[0];
    if (kind == "t") {
      if (fields.size() < 3 || fields[1] != "#") parse_error(ds_.source, number, "expected 't # <graph-id>'");
      finish();
      if (fields[2] == "-1") {
        done_ = true;
        return;
      }
      pending_ = PendingGraph{std::string(fields[2]), number, {}, {}};
    } else if (kind == "v") {
      if (!pending_) parse_error(ds_.source, number, "vertex before any 't' line");
      if (fields.size() != 3) parse_error(ds_.source, number, "expected 'v <index> <label>'");
      const auto index = parse_index(fields[1]);
      if (!index) parse_error(ds_.source, number, "bad vertex index '" + std::string(fields[1]) + "'");
      auto& labels = pending_->labels;
      if (*index >= labels.size()) labels.resize(*index + 1);
      if (labels[*index]) parse_error(ds_.source, number, "vertex " + std::to_string(*index) + " declared twice");
      labels[*index] = ds_.alphabet.vertex.intern(fields[2]);
    } else if (kind == "e") {
      if (!pending_) parse_error(ds_.source, number, "edge before any 't' line");
      if (fields.size() != 3 && fields.size() != 4) parse_error(ds_.source, number, "expected 'e <u> <v> [<label>]'");
      const auto u = parse_index(fields[1]);
      const auto v = parse_index(fields[2]);
      if (!u || !v) parse_error(ds_.source, number, "bad edge endpoint");
      Label label = kDefaultEdgeLabel;
      if (fields.size() == 4 && !options_.strip_edge_labels) label = ds_.alphabet.edge.intern(fields[3]);
      pending_->edges.push_back({*u, *v, label});
    } else {
      parse_error(ds_.source, number, "unknown record '" + std::string(kind) + "'");
    }
  }

  bool done() const { return done_; }

  GraphDataset take() {
    finish();
    return std::move(ds_);
  }

 private:
  void finish() {
    if (!pending_) return;
    PendingGraph p = std::move(*pending_);
    pending_.reset();
    std::vector<Label> labels;
    labels.reserve(p.labels.size());
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
      if (!p.labels[i]) parse_error(ds_.source, p.line, "graph " + p.id + ": vertex " + std::to_string(i) + " missing");
      labels.push_back(*p.labels[i]);
    }
    const Connectivity connectivity = options_.disconnected == DisconnectedPolicy::kReject
                                          ? Connectivity::kRequire
                                          : Connectivity::kAllowDisconnected;
    try {
      LabeledGraph g = build_graph(std::move(labels), p.edges, connectivity);
      if (connectivity == Connectivity::kAllowDisconnected && !g.is_connected()) {
        ds_.warnings.push_back("graph " + p.id + " is disconnected");
      }
      ds_.add(std::move(g), std::move(p.id));
    } catch (const Error& e) {
      throw Error(ErrorCode::kValidationError,
                  ds_.source + ": graph " + p.id + ": " + std::string(to_string(e.code())) + ": " + e.what());
    }
  }

  const ReadOptions& options_;
  GraphDataset ds_;
  std::optional<PendingGraph> pending_;
  bool done_ = false;
};

}  // namespace

double GraphDataset::average_vertices() const {
  if (graphs.empty()) return 0.0;
  double total = 0;
  for (const auto& g : graphs) total += static_cast<double>(g.num_vertices());
  return total / static_cast<double>(graphs.size());
}

double GraphDataset::average_edges() const {
  if (graphs.empty()) return 0.0;
  double total = 0;
  for (const auto& g : graphs) total += static_cast<double>(g.num_edges());
  return total / static_cast<double>(graphs.size());
}

GraphDataset parse_dataset(std::istream& in, const ReadOptions& options, const Alphabet& base, std::string source) {
  Parser parser(options, base, std::move(source));
  std::string text;
  std::size_t number = 0;
  while (!parser.done() && std::getline(in, text)) parser.line(text, ++number);
  return parser.take();
}

GraphDataset read_dataset(const std::filesystem::path& path, const ReadOptions& options, const Alphabet& base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return parse_dataset(in, options, base, path.string());
}

void write_dataset(const GraphDataset& ds, std::ostream& out) {
  out << "# " << ds.graphs.size() << " graphs\n";
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    const LabeledGraph& g = ds.graphs[i];
    out << "t # " << (i < ds.ids.size() ? ds.ids[i] : std::to_string(i)) << '\n';
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      out << "v " << v << ' ' << ds.alphabet.vertex.name(g.label(v)) << '\n';
    }
    for (const EdgeSpec& e : g.edges()) {
      out << "e " << e.u << ' ' << e.v;
      if (e.label != kDefaultEdgeLabel) out << ' ' << ds.alphabet.edge.name(e.label);
      out << '\n';
    }
  }
}

void write_dataset(const GraphDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  write_dataset(ds, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

GraphDataset strip_edge_labels(const GraphDataset& ds) {
  GraphDataset out;
  out.source = ds.source;
  out.alphabet.vertex = ds.alphabet.vertex;
  out.ids = ds.ids;
  out.warnings = ds.warnings;
  out.graphs.reserve(ds.graphs.size());
  for (const LabeledGraph& g : ds.graphs) {
    std::vector<EdgeSpec> edges(g.edges().begin(), g.edges().end());
    for (EdgeSpec& e : edges) e.label = kDefaultEdgeLabel;
    out.graphs.push_back(build_graph(g.vertex_labels(), edges,
                                     g.is_connected() ? Connectivity::kRequire : Connectivity::kAllowDisconnected));
  }
  return out;
}

bool structurally_equal(const GraphDataset& a, const GraphDataset& b) {
  if (a.graphs.size() != b.graphs.size() || a.ids != b.ids) return false;
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    const LabeledGraph& x = a.graphs[i];
    const LabeledGraph& y = b.graphs[i];
    if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges()) return false;
    for (VertexId v = 0; v < x.num_vertices(); ++v) {
      if (a.alphabet.vertex.name(x.label(v)) != b.alphabet.vertex.name(y.label(v))) return false;
    }
    for (std::size_t k = 0; k < x.num_edges(); ++k) {
      const EdgeSpec& e = x.edges()[k];
      const EdgeSpec& f = y.edges()[k];
      if (e.u != f.u || e.v != f.v) return false;
      if (a.alphabet.edge.name(e.label) != b.alphabet.edge.name(f.label)) return false;
    }
  }
  return true;
}

QuerySet make_query_set(std::string name, std::size_t nominal_size, GraphDataset queries) {
  for (std::size_t i = 0; i < queries.graphs.size(); ++i) {
    const LabeledGraph& q = queries.graphs[i];
    if (!q.is_connected()) {
      throw Error(ErrorCode::kValidationError, "query " + queries.ids[i] + " is not connected");
    }
    if (q.num_edges() != nominal_size) {
      throw Error(ErrorCode::kValidationError, "query " + queries.ids[i] + " has " + std::to_string(q.num_edges()) +
                                                   " edges, expected " + std::to_string(nominal_size));
    }
  }
  QuerySet out;
  out.name = std::move(name);
  out.nominal_size = nominal_size;
  out.queries = std::move(queries);
  return out;
}

}  // namespace fastsi
