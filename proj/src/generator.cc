#include "fastsi/generator.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

namespace fastsi {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling over the top of the 64-bit range.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

namespace {

std::size_t max_edges(std::size_t v) { return v * (v - 1) / 2; }

void check_params(const GeneratorParams& p) {
  if (p.count == 0 || p.avg_edges == 0 || p.labels == 0) {
    throw Error(ErrorCode::kInfeasibleParameters, "count, edges and labels must be positive");
  }
  if (!(p.density > 0.0 && p.density <= 1.0)) {
    throw Error(ErrorCode::kInfeasibleParameters, "density must lie in (0, 1]");
  }
}

LabeledGraph random_graph(Rng& rng, std::size_t edges, double density, std::size_t labels, Alphabet& alphabet) {
  const std::size_t n = vertices_for(edges, density);
  if (edges + 1 < n) {
    throw Error(ErrorCode::kInfeasibleParameters,
                std::to_string(edges) + " edges cannot connect " + std::to_string(n) + " vertices");
  }
  std::vector<Label> vlabels(n);
  for (auto& l : vlabels) l = alphabet.vertex.intern(std::to_string(rng.below(labels)));

  std::set<std::pair<VertexId, VertexId>> present;
  std::vector<EdgeSpec> list;
  auto add = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    if (!present.insert({a, b}).second) return false;
    list.push_back({a, b, alphabet.edge.intern(std::to_string(rng.below(labels)))});
    return true;
  };

  // Random recursive tree over a shuffled vertex order.
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  rng.shuffle(perm);
  for (std::size_t i = 1; i < n; ++i) add(perm[i], perm[rng.below(i)]);

  if (edges - list.size() > max_edges(n) / 2) {
    // Dense: pick from the explicit complement.
    std::vector<std::pair<VertexId, VertexId>> missing;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!present.count({a, b})) missing.emplace_back(a, b);
      }
    }
    rng.shuffle(missing);
    for (std::size_t i = 0; list.size() < edges; ++i) add(missing[i].first, missing[i].second);
  } else {
    while (list.size() < edges) {
      const auto a = static_cast<VertexId>(rng.below(n));
      const auto b = static_cast<VertexId>(rng.below(n));
      if (a != b) add(a, b);
    }
  }
  return build_graph(std::move(vlabels), list);
}

std::size_t parse_count(std::string_view text, std::string_view name) {
  std::size_t mult = 1;
  if (!text.empty() && (text.back() == 'K' || text.back() == 'k')) {
    mult = 1000;
    text.remove_suffix(1);
  } else if (!text.empty() && (text.back() == 'M' || text.back() == 'm')) {
    mult = 1000000;
    text.remove_suffix(1);
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kConfigError, "bad dataset name '" + std::string(name) + "'");
  }
  return value * mult;
}

}  // namespace

std::size_t vertices_for(std::size_t edges, double density) {
  const double e = static_cast<double>(edges);
  auto n = static_cast<std::size_t>(std::llround((1.0 + std::sqrt(1.0 + 8.0 * e / density)) / 2.0));
  n = std::max<std::size_t>(n, 3);
  while (max_edges(n) < edges) ++n;
  return n;
}

GraphDataset generate_dataset(const GeneratorParams& params) {
  check_params(params);
  Rng rng(params.seed);
  const double e = static_cast<double>(params.avg_edges);
  const auto lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(e * (1.0 - kEdgeJitter) - 1e-9)));
  const auto hi = std::max(lo, static_cast<std::size_t>(std::floor(e * (1.0 + kEdgeJitter) + 1e-9)));

  GraphDataset ds;
  ds.source = dataset_name(params);
  for (std::size_t i = 0; i < params.count; ++i) {
    const std::size_t edges = rng.between(lo, hi);
    ds.add(random_graph(rng, edges, params.density, params.labels, ds.alphabet), std::to_string(i));
  }
  return ds;
}

GeneratorParams parse_dataset_name(std::string_view name) {
  GeneratorParams p;
  if (name.substr(0, 3) != "Syn") throw Error(ErrorCode::kConfigError, "bad dataset name '" + std::string(name) + "'");
  std::string_view rest = name.substr(3);
  std::vector<std::string_view> parts;
  while (true) {
    const auto dot = rest.find('.');
    parts.push_back(rest.substr(0, dot));
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  if (parts.size() != 4 || parts[1].empty() || parts[2].empty() || parts[3].empty() || parts[1][0] != 'E' ||
      parts[2][0] != 'D' || parts[3][0] != 'L') {
    throw Error(ErrorCode::kConfigError, "bad dataset name '" + std::string(name) + "'");
  }
  p.count = parse_count(parts[0], name);
  p.avg_edges = parse_count(parts[1].substr(1), name);
  p.labels = parse_count(parts[3].substr(1), name);
  // D is density times ten; fractional tenths are written with a leading 0 ("D05" = 0.05).
  const std::string_view d = parts[2].substr(1);
  const double digits = static_cast<double>(parse_count(d, name));
  p.density = d.size() > 1 && d[0] == '0' ? digits / std::pow(10.0, static_cast<double>(d.size()))
                                          : digits / 10.0;
  if (!(p.density > 0.0 && p.density <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "density out of range in '" + std::string(name) + "'");
  }
  return p;
}

std::string dataset_name(const GeneratorParams& p) {
  auto count = [](std::size_t n) {
    if (n >= 1000000 && n % 1000000 == 0) return std::to_string(n / 1000000) + "M";
    if (n >= 1000 && n % 1000 == 0) return std::to_string(n / 1000) + "K";
    return std::to_string(n);
  };
  std::string d;
  const double tenths = p.density * 10.0;
  if (std::abs(tenths - std::round(tenths)) < 1e-9) {
    d = std::to_string(static_cast<long long>(std::llround(tenths)));
  } else {
    // Smallest number of digits k with density * 10^k integral.
    int k = 2;
    while (k < 9 && std::abs(p.density * std::pow(10.0, k) - std::round(p.density * std::pow(10.0, k))) > 1e-9) ++k;
    d = std::to_string(static_cast<long long>(std::llround(p.density * std::pow(10.0, k))));
    d.insert(0, static_cast<std::size_t>(k) - d.size(), '0');
  }
  return "Syn" + count(p.count) + ".E" + std::to_string(p.avg_edges) + ".D" + d + ".L" + std::to_string(p.labels);
}

QuerySet extract_queries(const GraphDataset& ds, std::size_t size, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    if (ds.graphs[i].num_edges() >= size) eligible.push_back(i);
  }
  if (size == 0 || eligible.empty()) {
    throw Error(ErrorCode::kInfeasibleQuerySize, "no data graph has " + std::to_string(size) + " edges");
  }
  Rng rng(seed);
  GraphDataset queries;
  queries.alphabet = ds.alphabet;
  queries.source = ds.source;
  std::vector<std::size_t> sources;

  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t src = eligible[rng.below(eligible.size())];
    const LabeledGraph& g = ds.graphs[src];
    const auto all = g.edges();

    std::vector<bool> taken(all.size(), false);
    std::vector<bool> inside(g.num_vertices(), false);
    std::vector<std::size_t> picked;
    auto take = [&](std::size_t k) {
      taken[k] = true;
      inside[all[k].u] = inside[all[k].v] = true;
      picked.push_back(k);
    };
    take(rng.below(all.size()));
    while (picked.size() < size) {
      std::vector<std::size_t> frontier;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (!taken[k] && (inside[all[k].u] || inside[all[k].v])) frontier.push_back(k);
      }
      take(frontier[rng.below(frontier.size())]);
    }

    std::vector<VertexId> members;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (inside[v]) members.push_back(v);
    }
    rng.shuffle(members);
    std::unordered_map<VertexId, VertexId> local;
    std::vector<Label> labels(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<VertexId>(i);
      labels[i] = g.label(members[i]);
    }
    std::vector<EdgeSpec> edges;
    for (std::size_t k : picked) edges.push_back({local[all[k].u], local[all[k].v], all[k].label});
    queries.add(build_graph(std::move(labels), edges), std::to_string(n));
    sources.push_back(src);
  }

  QuerySet out = make_query_set("Q" + std::to_string(size), size, std::move(queries));
  out.sources = std::move(sources);
  return out;
}

}  // namespace fastsi
