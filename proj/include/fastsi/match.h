#ifndef FASTSI_MATCH_H_
#define FASTSI_MATCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fastsi/graph.h"

namespace fastsi {

enum class MatchMode {
  kBoolean,   // stop at the first witness
  kWitness,   // stop at the first witness and return it
  kCountAll,  // enumerate every witness
};

std::optional<MatchMode> parse_match_mode(std::string_view text);
std::string_view to_string(MatchMode mode);

using Clock = std::chrono::steady_clock;

struct SearchOptions {
  MatchMode mode = MatchMode::kBoolean;
  std::optional<Clock::time_point> deadline;
  // In kCountAll, keep every witness (otherwise only count them).
  bool collect_witnesses = true;
  // Fill SearchStats::order.
  bool trace_order = true;
};

struct SearchStats {
  std::uint64_t recursive_calls = 0;
  std::uint64_t failed_checks = 0;
  // Sum of candidate-set sizes (vertices or paths) after filtering.
  std::uint64_t candidates = 0;
  // Query vertices in the order the engine explores them; for path engines
  // the order in which vertices are first bound.
  std::vector<VertexId> order;
};

struct MatchOutcome {
  bool found = false;
  bool timed_out = false;
  std::optional<Mapping> witness;
  std::vector<Mapping> witnesses;
  std::uint64_t witness_count = 0;
  SearchStats stats;
};

enum class Engine { kUllman, kFastOn, kFastP };

std::optional<Engine> parse_engine(std::string_view text);
std::string_view to_string(Engine engine);

namespace detail {

// Amortized deadline polling for the recursive searches.
class DeadlineGuard {
 public:
  explicit DeadlineGuard(const std::optional<Clock::time_point>& deadline) : deadline_(deadline) {}

  bool expired() {
    if (expired_) return true;
    if (!deadline_ || (++ticks_ & 0x3ff) != 0) return false;
    expired_ = Clock::now() >= *deadline_;
    return expired_;
  }

 private:
  std::optional<Clock::time_point> deadline_;
  std::uint32_t ticks_ = 0;
  bool expired_ = false;
};

}  // namespace detail

}  // namespace fastsi

#endif  // FASTSI_MATCH_H_
