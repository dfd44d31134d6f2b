#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fastsi/bench.h"

namespace fastsi {

namespace {

constexpr const char* kColumns[] = {
    "engine",          "dataset",       "queryset",   "queries",          "graphs",
    "max_length",      "total_time_ms", "mean_query_ms", "median_query_ms", "index_build_ms",
    "recursive_calls", "candidates",    "answers",    "timeouts",
};
constexpr std::size_t kNumColumns = std::size(kColumns);

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::vector<std::string> cells(const BenchRow& r) {
  return {r.engine,
          r.dataset,
          r.queryset,
          std::to_string(r.queries),
          std::to_string(r.graphs),
          r.max_length,
          fixed3(r.total_time_ms),
          fixed3(r.mean_query_ms),
          fixed3(r.median_query_ms),
          fixed3(r.index_build_ms),
          std::to_string(r.recursive_calls),
          std::to_string(r.candidates),
          std::to_string(r.answers),
          std::to_string(r.timeouts)};
}

template <typename T>
T parse_number(const std::string& text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "report line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::size_t query_size(const std::string& name) {
  const auto pos = name.find_first_of("0123456789");
  if (pos == std::string::npos) return 0;
  std::size_t value = 0;
  std::from_chars(name.data() + pos, name.data() + name.size(), value);
  return value;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "tsv") return ReportFormat::kTsv;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kMarkdown) {
    out << '|';
    for (const char* c : kColumns) out << ' ' << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < kNumColumns; ++i) out << (i < 6 ? " --- |" : " ---: |");
    out << '\n';
    for (const BenchRow& r : rows) {
      out << '|';
      for (const auto& c : cells(r)) out << ' ' << c << " |";
      out << '\n';
    }
    return;
  }
  const char sep = format == ReportFormat::kCsv ? ',' : '\t';
  for (std::size_t i = 0; i < kNumColumns; ++i) out << (i ? std::string(1, sep) : "") << kColumns[i];
  out << '\n';
  for (const BenchRow& r : rows) {
    const auto cs = cells(r);
    for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? std::string(1, sep) : "") << cs[i];
    out << '\n';
  }
}

std::vector<BenchRow> parse_report_csv(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParseError, "report: missing header");
  ++number;
  const auto header = split(line, ',');
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* c : kColumns) {
    if (!col.count(c)) throw Error(ErrorCode::kParseError, std::string("report: missing column ") + c);
  }

  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    const auto f = split(line, ',');
    if (f.size() != header.size()) {
      throw Error(ErrorCode::kParseError, "report line " + std::to_string(number) + ": expected " +
                                              std::to_string(header.size()) + " fields");
    }
    auto get = [&](const char* name) -> const std::string& { return f[col.at(name)]; };
    BenchRow r;
    r.engine = get("engine");
    r.dataset = get("dataset");
    r.queryset = get("queryset");
    r.queries = parse_number<std::size_t>(get("queries"), number);
    r.graphs = parse_number<std::size_t>(get("graphs"), number);
    r.max_length = get("max_length");
    r.total_time_ms = parse_number<double>(get("total_time_ms"), number);
    r.mean_query_ms = parse_number<double>(get("mean_query_ms"), number);
    r.median_query_ms = parse_number<double>(get("median_query_ms"), number);
    r.index_build_ms = parse_number<double>(get("index_build_ms"), number);
    r.recursive_calls = parse_number<std::uint64_t>(get("recursive_calls"), number);
    r.candidates = parse_number<std::uint64_t>(get("candidates"), number);
    r.answers = parse_number<std::uint64_t>(get("answers"), number);
    r.timeouts = parse_number<std::uint64_t>(get("timeouts"), number);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::filesystem::path> emit_plotdata(const std::vector<BenchRow>& rows, bool by_graphs,
                                                 const std::filesystem::path& dir) {
  std::map<std::string, std::vector<std::pair<std::size_t, double>>> series;
  std::vector<std::string> order;
  for (const BenchRow& r : rows) {
    if (!series.count(r.engine)) order.push_back(r.engine);
    series[r.engine].emplace_back(by_graphs ? r.graphs : query_size(r.queryset), r.total_time_ms);
  }
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const std::string& engine : order) {
    auto points = series[engine];
    std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto path = dir / (engine + ".dat");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
    out << "# " << (by_graphs ? "graphs" : "query_size") << " total_time_ms\n";
    for (const auto& [x, y] : points) out << x << ' ' << fixed3(y) << '\n';
    if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace fastsi
