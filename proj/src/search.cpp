#include "ncs/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "ncs/combinatorics.hpp"
#include "ncs/cycle_finder.hpp"

#include "json.hpp"

namespace ncs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string bytes_hex(std::span<const std::uint8_t> b) {
  std::string out;
  for (std::uint8_t v : b) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", v);
    out += buf;
  }
  return out;
}

}  // namespace

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::TruncPlain: return "trunc-plain";
    case Strategy::Trunc2e1: return "trunc-2e1";
    case Strategy::TruncOpt: return "trunc-opt";
    case Strategy::TruncFixed: return "trunc-fixed";
    case Strategy::Code: return "code";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  for (Strategy s : {Strategy::TruncPlain, Strategy::Trunc2e1,
                     Strategy::TruncOpt, Strategy::TruncFixed, Strategy::Code})
    if (name == strategy_name(s)) return s;
  return std::nullopt;
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Floyd: return "floyd";
    case Engine::Brent: return "brent";
    case Engine::Nivasch: return "nivasch";
  }
  return "?";
}

std::optional<Engine> engine_from_name(const std::string& name) {
  for (Engine e : {Engine::Floyd, Engine::Brent, Engine::Nivasch})
    if (name == engine_name(e)) return e;
  return std::nullopt;
}

CompressorSpec make_compressor(const SearchConfig& config) {
  int n = config.n;
  int k;
  if (config.strategy == Strategy::Code) {
    int R = config.radius > 0 ? config.radius : (config.eps + 1) / 2;
    CoveringCodeSpec spec = CoveringCodeSpec::build(n, R);
    k = spec.k;
    if (k < 8 || k > 64)
      throw std::invalid_argument("search: state width must be in [8, 64]");
    return CompressorSpec(spec);
  }
  int mu;
  switch (config.strategy) {
    case Strategy::TruncPlain: mu = config.eps; break;
    case Strategy::Trunc2e1: mu = 2 * config.eps + 1; break;
    case Strategy::TruncOpt:
      mu = static_cast<int>(optimal_mu_exact(config.eps).mode);
      break;
    default: mu = config.mu; break;
  }
  if (mu < 0) throw std::invalid_argument("search: missing truncation width");
  k = n - mu;
  if (k < 8 || k > 64)
    throw std::invalid_argument("search: state width must be in [8, 64]");
  return CompressorSpec(TruncationSpec::trailing(n, mu));
}

double run_success_probability(const SearchConfig& config) {
  CompressorSpec comp = make_compressor(config);
  if (comp.is_code()) {
    const auto& spec = comp.code();
    if (2 * spec.R <= config.eps) return 1.0;
    return fiber_success_probability(spec, config.eps).convert_to<double>();
  }
  int mu = comp.truncation().mu;
  if (mu <= config.eps) return 1.0;
  Rational p(ball_volume(mu, config.eps), BigCount(1) << mu);
  return p.convert_to<double>();
}

double expected_queries(const SearchConfig& config) {
  int k = make_compressor(config).k();
  double rho = std::sqrt(M_PI / 2.0 * std::ldexp(1.0, k));
  return rho / run_success_probability(config);
}

MaxRunsExceeded::MaxRunsExceeded(int runs_tried_, double expected_runs_)
    : std::runtime_error("search exhausted its run budget (" +
                         std::to_string(runs_tried_) + " runs, expected about " +
                         std::to_string(expected_runs_) + ")"),
      runs_tried(runs_tried_),
      expected_runs(expected_runs_) {}

RunResult run_once(const SearchConfig& config, std::uint32_t flavor) {
  CompressorSpec comp = make_compressor(config);
  int k = comp.k();
  auto f = step_function(comp, config.n, flavor);

  // Hash each distinct state once; the memo makes the reported query count
  // equal to the number of distinct messages hashed, i.e. the rho length.
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  auto f_memo = [&](std::uint64_t s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    std::uint64_t v = f(s);
    memo.emplace(s, v);
    return v;
  };

  // starting state derived from (seed, flavor) by hashing
  MessageEncoding init{config.seed, flavor, 0xffffffffu};
  auto init_msg = init.bytes();
  std::uint64_t x0 = hash_n(init_msg, 64).to_uint64() >> (64 - k);

  IterationOutcome out;
  switch (config.engine) {
    case Engine::Floyd: out = floyd(f_memo, x0); break;
    case Engine::Brent: out = brent(f_memo, x0); break;
    case Engine::Nivasch: out = nivasch(f_memo, x0); break;
  }

  RunResult res;
  res.queries = memo.size();
  if (!out.colliding_pair) return res;
  res.pair_found = true;
  auto [a, b] = *out.colliding_pair;
  res.m = MessageEncoding{a, flavor, 0}.bytes();
  res.m_star = MessageEncoding{b, flavor, 0}.bytes();
  res.digest = hash_n(res.m, config.n);
  res.digest_star = hash_n(res.m_star, config.n);
  res.distance = res.digest.distance(res.digest_star);
  res.success = res.distance <= config.eps;
  return res;
}

SearchReport find_near_collision(const SearchConfig& config) {
  double p = run_success_probability(config);
  int max_runs = config.max_runs > 0
                     ? config.max_runs
                     : static_cast<int>(std::ceil(64.0 / p));
  SearchReport report;
  report.strategy = strategy_name(config.strategy);
  report.n = config.n;
  report.eps = config.eps;
  report.seed = config.seed;
  for (int run = 0; run < max_runs; ++run) {
    std::uint32_t flavor = static_cast<std::uint32_t>(config.seed + run);
    RunResult r = run_once(config, flavor);
    report.flavors.push_back(flavor);
    report.queries_per_run.push_back(r.queries);
    report.queries_total += r.queries;
    ++report.runs_used;
    if (!r.pair_found) {
      ++report.retries;
      continue;
    }
    if (r.success) {
      report.m = r.m;
      report.m_star = r.m_star;
      report.digest = r.digest;
      report.digest_star = r.digest_star;
      report.distance = r.distance;
      return report;
    }
  }
  throw MaxRunsExceeded(max_runs, 1.0 / p);
}

SearchReport birthday_search(int n, int eps, std::uint64_t seed) {
  if (n < 8 || n > 40)
    throw std::invalid_argument("birthday_search: n must be in [8, 40]");
  if (eps < 0 || eps >= n)
    throw std::invalid_argument("birthday_search: 0 <= eps < n");
  if (ball_volume(n, eps) > 2'000'000)
    throw std::invalid_argument("birthday_search: eps-ball too large");

  // all XOR masks of weight <= eps
  std::vector<std::uint64_t> ball{0};
  std::vector<std::uint64_t> layer{0};
  for (int w = 1; w <= eps; ++w) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t v : layer) {
      int lowest = v ? std::countr_zero(v) : n;
      for (int i = 0; i < lowest; ++i) next.push_back(v | (1ULL << i));
    }
    ball.insert(ball.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::unordered_map<std::uint64_t, std::uint32_t> table;
  SearchReport report;
  report.strategy = "birthday";
  report.n = n;
  report.eps = eps;
  report.seed = seed;
  for (std::uint32_t counter = 0;; ++counter) {
    MessageEncoding enc{seed, 0, counter};
    auto msg = enc.bytes();
    Digest d = hash_n(msg, n);
    std::uint64_t h = d.to_uint64();
    for (std::uint64_t delta : ball) {
      auto it = table.find(h ^ delta);
      if (it == table.end()) continue;
      MessageEncoding other{seed, 0, it->second};
      report.m = msg;
      report.m_star = other.bytes();
      report.digest = d;
      auto star = other.bytes();
      report.digest_star = hash_n(star, n);
      report.distance = report.digest.distance(report.digest_star);
      report.runs_used = 1;
      report.queries_total = counter + 1;
      report.queries_per_run = {counter + 1};
      return report;
    }
    table.emplace(h, counter);
  }
}

VerifyResult verify_pair(std::span<const std::uint8_t> m,
                         std::span<const std::uint8_t> m_star, int n, int eps) {
  if (m.size() == m_star.size() &&
      std::equal(m.begin(), m.end(), m_star.begin()))
    throw std::invalid_argument("verify_pair: messages must be distinct");
  Digest d = hash_n(m, n);
  Digest d_star = hash_n(m_star, n);
  int dist = d.distance(d_star);
  return {dist <= eps, dist};
}

std::string SearchReport::to_json() const {
  nlohmann::json j;
  j["strategy"] = strategy;
  j["n"] = n;
  j["eps"] = eps;
  j["m"] = bytes_hex(m);
  j["m_star"] = bytes_hex(m_star);
  j["digest"] = digest.hex();
  j["digest_star"] = digest_star.hex();
  j["distance"] = distance;
  j["runs"] = runs_used;
  j["queries"] = queries_total;
  j["queries_per_run"] = queries_per_run;
  j["flavors"] = flavors;
  j["seed"] = seed;
  return j.dump();
}

std::string BenchStats::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["mean"] = mean;
  j["median"] = median;
  j["stddev"] = stddev;
  j["success_rate"] = success_rate;
  j["expected"] = expected;
  j["ratio"] = ratio;
  return j.dump();
}

BenchStats bench(const SearchConfig& config, int trials) {
  if (trials < 1) throw std::invalid_argument("bench: trials >= 1");
  std::vector<double> totals;
  int successes = 0;
  for (int i = 0; i < trials; ++i) {
    SearchConfig c = config;
    c.seed = splitmix64(config.seed ^ (0x6e6373ULL << 32) ^ static_cast<std::uint64_t>(i));
    try {
      SearchReport r = find_near_collision(c);
      totals.push_back(static_cast<double>(r.queries_total));
      ++successes;
    } catch (const MaxRunsExceeded&) {
    }
  }
  BenchStats st;
  st.trials = trials;
  st.success_rate = static_cast<double>(successes) / trials;
  st.expected = expected_queries(config);
  if (!totals.empty()) {
    double sum = 0;
    for (double v : totals) sum += v;
    st.mean = sum / totals.size();
    std::sort(totals.begin(), totals.end());
    size_t mid = totals.size() / 2;
    st.median = totals.size() % 2 ? totals[mid]
                                  : (totals[mid - 1] + totals[mid]) / 2.0;
    double var = 0;
    for (double v : totals) var += (v - st.mean) * (v - st.mean);
    st.stddev = totals.size() > 1 ? std::sqrt(var / (totals.size() - 1)) : 0.0;
    st.ratio = st.mean / st.expected;
  }
  return st;
}

}  // namespace ncs
