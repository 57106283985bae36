#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncs/planner.hpp"
#include "ncs/search.hpp"

namespace {

// "a..b" or a comma list
std::optional<std::vector<int>> parse_range(const std::string& text) {
  std::vector<int> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    try {
      int lo = std::stoi(text.substr(0, dots));
      int hi = std::stoi(text.substr(dots + 2));
      if (lo > hi) return std::nullopt;
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    } catch (...) {
      return std::nullopt;
    }
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      return std::nullopt;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out.empty() ? std::nullopt : std::make_optional(out);
}

nlohmann::json table1_json(const std::vector<ncs::Table1Row>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"eps", r.eps}, {"mu", r.mu}, {"mu_star", r.mu_star}});
  return arr;
}

nlohmann::json table3_json(const ncs::Table3& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json entry;
    entry["eps"] = row.eps;
    for (size_t i = 0; i < row.per_n.size(); ++i) {
      nlohmann::json group;
      for (const auto& est : row.per_n[i]) {
        nlohmann::json e;
        e["log2_queries"] = est.log2_queries;
        if (est.mu) e["mu"] = *est.mu;
        if (est.code) {
          e["ell"] = est.code->ell;
          e["r"] = est.code->r;
          e["R"] = est.code->R;
        }
        group[ncs::method_name(est.method)] = e;
      }
      entry["n" + std::to_string(t.n_list[i])] = group;
    }
    arr.push_back(entry);
  }
  return arr;
}

int cmd_plan(const std::vector<int>& n_list, const std::string& eps_text,
             const std::string& format) {
  auto eps_list = parse_range(eps_text);
  if (!eps_list) {
    std::cerr << "invalid --eps range\n";
    return 2;
  }
  for (int eps : *eps_list)
    if (eps < 1) {
      std::cerr << "eps must be >= 1\n";
      return 2;
    }
  for (int n : n_list) {
    for (int eps : *eps_list)
      if (2 * eps >= n) {
        std::cerr << "eps must satisfy eps < n/2 for bound E\n";
        return 2;
      }
    if (n < 16 || n > 1024) {
      std::cerr << "n must be in [16, 1024]\n";
      return 2;
    }
  }

  if (n_list.empty()) {
    auto rows = ncs::render_table1(*eps_list);
    if (format == "csv")
      std::cout << ncs::table1_csv(rows);
    else if (format == "json")
      std::cout << table1_json(rows).dump() << '\n';
    else
      std::cout << ncs::table1_pretty(rows);
    return 0;
  }

  ncs::Table3 t = ncs::render_table3(n_list, *eps_list);
  if (format == "csv") {
    std::cout << ncs::table3_csv(t);
  } else if (format == "json") {
    std::cout << table3_json(t).dump() << '\n';
  } else {
    auto rows = ncs::render_table1(*eps_list);
    std::cout << ncs::table1_pretty(rows) << '\n' << ncs::table3_pretty(t);
  }
  return 0;
}

void print_report(const ncs::SearchReport& r, bool json) {
  if (json) {
    std::cout << r.to_json() << '\n';
    return;
  }
  auto hex = [](std::span<const std::uint8_t> b) {
    std::string s;
    for (auto v : b) {
      char buf[3];
      std::snprintf(buf, sizeof buf, "%02x", v);
      s += buf;
    }
    return s;
  };
  std::cout << "strategy:    " << r.strategy << "\n"
            << "n, eps:      " << r.n << ", " << r.eps << "\n"
            << "m:           " << hex(r.m) << "\n"
            << "m*:          " << hex(r.m_star) << "\n"
            << "digest:      " << r.digest.hex() << "\n"
            << "digest*:     " << r.digest_star.hex() << "\n"
            << "distance:    " << r.distance << "\n"
            << "runs:        " << r.runs_used << "\n"
            << "queries:     " << r.queries_total << "\n"
            << "seed:        " << r.seed << "\n";
}

struct FindFlags {
  int n = 32;
  int eps = 4;
  std::string strategy = "trunc-opt";
  int mu = -1;
  int radius = -1;
  std::string engine = "brent";
  std::uint64_t seed = 0;
  int max_runs = 0;
  bool json = false;

  std::optional<ncs::SearchConfig> to_config() const {
    ncs::SearchConfig c;
    auto s = ncs::strategy_from_name(strategy);
    auto e = ncs::engine_from_name(engine);
    if (!s || !e) return std::nullopt;
    c.n = n;
    c.eps = eps;
    c.strategy = *s;
    c.mu = mu;
    c.radius = radius;
    c.engine = *e;
    c.seed = seed;
    c.max_runs = max_runs;
    return c;
  }
};

void add_find_flags(CLI::App* app, FindFlags& f) {
  app->add_option("--n", f.n, "digest width in bits");
  app->add_option("--eps", f.eps, "target near-collision distance");
  app->add_option("--strategy", f.strategy,
                  "trunc-plain | trunc-2e1 | trunc-opt | trunc-fixed | code");
  app->add_option("--mu", f.mu, "truncation width for trunc-fixed");
  app->add_option("--radius", f.radius,
                  "covering radius for code (default ceil(eps/2))");
  app->add_option("--engine", f.engine, "floyd | brent | nivasch");
  app->add_option("--seed", f.seed, "64-bit seed");
  app->add_option("--max-runs", f.max_runs, "run budget (0: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memoryless near-collision search planner and driver"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  // plan
  auto* plan = app.add_subcommand("plan", "complexity tables");
  std::vector<int> plan_n;
  std::string plan_eps = "1..8";
  std::string plan_format = "pretty";
  plan->add_option("--n", plan_n, "digest widths (list)")->delimiter(',');
  plan->add_option("--eps", plan_eps, "eps range, e.g. 1..8 or 1,2,5");
  plan->add_option("--format", plan_format, "csv | json | pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));

  // find
  auto* find = app.add_subcommand("find", "run a near-collision search");
  FindFlags ff;
  add_find_flags(find, ff);
  find->add_flag("--json", ff.json, "emit the report as JSON");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "repeated searches, statistics");
  FindFlags bf;
  int trials = 10;
  add_find_flags(bench_cmd, bf);
  bench_cmd->add_option("--trials", trials, "number of independent searches");

  // verify
  auto* verify = app.add_subcommand("verify", "check a claimed pair");
  int vn = 32, veps = 4;
  std::string vm, vmstar;
  verify->add_option("--n", vn, "digest width in bits");
  verify->add_option("--eps", veps, "claimed distance bound");
  verify->add_option("--m", vm, "first message, hex")->required();
  verify->add_option("--mstar", vmstar, "second message, hex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (plan->parsed()) return cmd_plan(plan_n, plan_eps, plan_format);

    if (find->parsed()) {
      auto config = ff.to_config();
      if (!config) {
        std::cerr << "unknown strategy or engine\n";
        return 2;
      }
      try {
        ncs::SearchReport r = ncs::find_near_collision(*config);
        print_report(r, ff.json);
        return 0;
      } catch (const ncs::MaxRunsExceeded& e) {
        std::cerr << e.what() << '\n';
        return 3;
      }
    }

    if (bench_cmd->parsed()) {
      auto config = bf.to_config();
      if (!config) {
        std::cerr << "unknown strategy or engine\n";
        return 2;
      }
      ncs::BenchStats st = ncs::bench(*config, trials);
      std::cout << st.to_json() << '\n';
      return 0;
    }

    if (verify->parsed()) {
      auto decode = [](const std::string& hexstr)
          -> std::optional<std::vector<std::uint8_t>> {
        if (hexstr.size() != 32) return std::nullopt;
        std::vector<std::uint8_t> out(16);
        for (size_t i = 0; i < 16; ++i) {
          auto nib = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
          };
          int hi = nib(hexstr[2 * i]), lo = nib(hexstr[2 * i + 1]);
          if (hi < 0 || lo < 0) return std::nullopt;
          out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
        }
        return out;
      };
      auto m = decode(vm), mstar = decode(vmstar);
      if (!m || !mstar) {
        std::cerr << "messages must be 16 bytes of hex\n";
        return 2;
      }
      ncs::VerifyResult res = ncs::verify_pair(*m, *mstar, vn, veps);
      std::cout << "distance: " << res.distance << '\n'
                << (res.valid ? "valid" : "invalid") << '\n';
      return res.valid ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
