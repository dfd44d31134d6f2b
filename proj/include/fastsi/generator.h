#ifndef FASTSI_GENERATOR_H_
#define FASTSI_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "fastsi/dataset.h"

namespace fastsi {

struct GeneratorParams {
  std::size_t count = 0;    // N
  std::size_t avg_edges = 0;  // E
  double density = 0.0;     // D in (0, 1]
  std::size_t labels = 0;   // L, shared by vertex and edge alphabets
  std::uint64_t seed = 1;
};

// Per-graph edge counts are drawn uniformly from [ceil(0.8 E), floor(1.2 E)].
inline constexpr double kEdgeJitter = 0.2;

/// Vertex count for `edges` edges at density `density`:
/// round((1 + sqrt(1 + 8E/D)) / 2), at least 3, grown until the edges fit.
std::size_t vertices_for(std::size_t edges, double density);

/// N connected simple graphs: a random recursive spanning tree plus random
/// extra edges, labels uniform over "0".."L-1". Deterministic per seed.
/// Throws kInfeasibleParameters.
GraphDataset generate_dataset(const GeneratorParams& params);

/// "Syn<N>.E<E>.D<D>.L<L>", where N may carry a K/M suffix and D is density
/// times ten ("D5" = 0.5). Throws kConfigError. Seed is left at its default.
GeneratorParams parse_dataset_name(std::string_view name);
std::string dataset_name(const GeneratorParams& params);

/// `count` connected queries of exactly `size` edges, each grown from a random
/// edge of a random data graph with at least `size` edges by adding random
/// frontier edges. Query vertices are renumbered in random order.
/// Throws kInfeasibleQuerySize.
QuerySet extract_queries(const GraphDataset& ds, std::size_t size, std::size_t count, std::uint64_t seed);

/// Small RNG helpers with results fixed across standard libraries (the
/// std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(T& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fastsi

#endif  // FASTSI_GENERATOR_H_
