#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncs/compressor.hpp"
#include "ncs/digest.hpp"
#include "ncs/hash_adapter.hpp"

namespace ncs {

enum class Strategy { TruncPlain, Trunc2e1, TruncOpt, TruncFixed, Code };
enum class Engine { Floyd, Brent, Nivasch };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);
const char* engine_name(Engine e);
std::optional<Engine> engine_from_name(const std::string& name);

struct SearchConfig {
  int n = 0;
  int eps = 0;
  Strategy strategy = Strategy::TruncOpt;
  int mu = -1;      // TruncFixed only
  int radius = -1;  // Code only; defaults to ceil(eps / 2)
  Engine engine = Engine::Brent;
  std::uint64_t seed = 0;
  int max_runs = 0;  // 0: 64x the expected number of runs
};

// Resolves the strategy into a concrete compressor. Throws
// std::invalid_argument when the derived state width falls outside [8, 64].
CompressorSpec make_compressor(const SearchConfig& config);

// Probability that one cycle-finding run yields an eps-near pair.
double run_success_probability(const SearchConfig& config);

// Model value for the total number of hash queries of one search:
// sqrt(pi/2 * 2^k) distinct queries per run times the expected repetitions.
double expected_queries(const SearchConfig& config);

struct SearchReport {
  std::string strategy;
  int n = 0;
  int eps = 0;
  std::array<std::uint8_t, 16> m{};
  std::array<std::uint8_t, 16> m_star{};
  Digest digest;
  Digest digest_star;
  int distance = 0;
  int runs_used = 0;
  int retries = 0;  // runs that found no pair (start already on the cycle)
  std::uint64_t queries_total = 0;
  std::vector<std::uint64_t> queries_per_run;
  std::vector<std::uint32_t> flavors;
  std::uint64_t seed = 0;

  std::string to_json() const;
};

struct MaxRunsExceeded : std::runtime_error {
  MaxRunsExceeded(int runs_tried, double expected_runs);
  int runs_tried;
  double expected_runs;
};

struct RunResult {
  bool pair_found = false;  // false: start was on the cycle, retry
  bool success = false;     // distance <= eps
  std::array<std::uint8_t, 16> m{};
  std::array<std::uint8_t, 16> m_star{};
  Digest digest;
  Digest digest_star;
  int distance = 0;
  std::uint64_t queries = 0;  // distinct messages hashed
};

// One flavored cycle-finding run, colliding states lifted to messages.
RunResult run_once(const SearchConfig& config, std::uint32_t flavor);

// Repeats run_once with flavors seed, seed+1, ... until success.
// Throws MaxRunsExceeded after the run budget is exhausted.
SearchReport find_near_collision(const SearchConfig& config);

// Table-based baseline: hash counter messages, check each digest against
// the whole eps-ball of stored digests. Desk scale, n <= 40.
SearchReport birthday_search(int n, int eps, std::uint64_t seed);

struct VerifyResult {
  bool valid = false;
  int distance = 0;
};

// Recomputes both digests. Throws std::invalid_argument when m == m_star.
VerifyResult verify_pair(std::span<const std::uint8_t> m,
                         std::span<const std::uint8_t> m_star, int n, int eps);

struct BenchStats {
  int trials = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  double success_rate = 0.0;  // searches finishing within the run budget
  double expected = 0.0;
  double ratio = 0.0;  // mean / expected
  std::string to_json() const;
};

BenchStats bench(const SearchConfig& config, int trials);

}  // namespace ncs
