#include "maxgenus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include <omp.h>

#include "maxgenus/generators.hpp"

namespace maxgenus {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename T>
T number(const std::string& key, const std::string& word, std::size_t line) {
  std::istringstream in(word);
  T value{};
  if (!(in >> value) || !in.eof())
    throw ConfigError("line " + std::to_string(line) + ": bad value '" + word + "' for " + key);
  return value;
}

MultiGraph make_graph(const BenchConfig& c, std::size_t n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = c.family;
  spec.n = n;
  spec.k = n;
  spec.m = static_cast<std::size_t>(std::llround(c.edge_factor * static_cast<double>(n)));
  if (spec.m + 1 < n) spec.m = n - 1;
  spec.loop_prob = c.loop_prob;
  spec.parallel_prob = c.parallel_prob;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig c;
  bool have_sizes = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const auto vals = words(line.substr(eq + 1));
    if (vals.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value for " + key);
    auto single = [&] {
      if (vals.size() != 1) throw ConfigError("line " + std::to_string(line_no) + ": " + key + " takes one value");
      return vals[0];
    };
    try {
      if (key == "family") {
        c.family = single();
      } else if (key == "sizes") {
        c.sizes.clear();
        for (const auto& w : vals) c.sizes.push_back(number<std::size_t>(key, w, line_no));
        have_sizes = true;
      } else if (key == "edge_factor") {
        c.edge_factor = number<double>(key, single(), line_no);
      } else if (key == "seeds") {
        c.seeds.clear();
        for (const auto& w : vals) c.seeds.push_back(number<std::uint64_t>(key, w, line_no));
      } else if (key == "backends") {
        c.backends.clear();
        for (const auto& w : vals) c.backends.push_back(parse_backend_kind(w));
      } else if (key == "policy") {
        c.policy = parse_order_policy(single());
      } else if (key == "loop_prob") {
        c.loop_prob = number<double>(key, single(), line_no);
      } else if (key == "parallel_prob") {
        c.parallel_prob = number<double>(key, single(), line_no);
      } else if (key == "jobs") {
        c.jobs = number<int>(key, single(), line_no);
      } else {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_sizes || c.sizes.empty()) throw ConfigError("missing sizes");
  if (c.edge_factor <= 0) throw ConfigError("edge_factor must be positive");
  if (c.jobs < 1) throw ConfigError("jobs must be at least 1");
  if (c.loop_prob < 0 || c.loop_prob > 1 || c.parallel_prob < 0 || c.parallel_prob > 1)
    throw ConfigError("probabilities must lie in [0, 1]");
  if (c.backends.empty()) throw ConfigError("no backends");
  if (c.seeds.empty()) throw ConfigError("no seeds");
  static constexpr std::string_view kFamilies[] = {"example", "random", "simple", "bouquet",
                                                   "dipole",  "complete", "cycle", "path"};
  if (std::find(std::begin(kFamilies), std::end(kFamilies), c.family) == std::end(kFamilies))
    throw ConfigError("unknown family '" + c.family + "'");
  return c;
}

double simple_degree_square_bound(std::size_t n, std::size_t m) {
  if (n < 2) return 0.0;
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  return dm * (2.0 * dm / (dn - 1.0) + dn - 2.0);
}

double loglog_slope(std::span<const std::pair<double, double>> points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0) continue;
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) return 0.0;
  const double denom = static_cast<double>(count) * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (static_cast<double>(count) * sxy - sx * sy) / denom;
}

BenchResult run_bench(const BenchConfig& config) {
  struct Job {
    std::size_t n;
    std::uint64_t seed;
    BackendKind backend;
  };
  std::vector<Job> jobs;
  for (auto n : config.sizes)
    for (auto seed : config.seeds)
      for (auto b : config.backends) jobs.push_back({n, seed, b});

  BenchResult result;
  result.cells.resize(jobs.size());
  std::vector<PairSet> pairs(jobs.size());
  std::vector<std::string> errors(jobs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i) {
    const Job& job = jobs[i];
    BenchCell& cell = result.cells[i];
    cell.family = config.family;
    cell.seed = job.seed;
    cell.backend = job.backend;
    try {
      const MultiGraph g = make_graph(config, job.n, job.seed);
      cell.n = g.num_vertices();
      cell.m = g.num_edges();
      cell.degree_square_sum = degree_square_sum(g);
      GreedyOptions opt;
      opt.backend = job.backend;
      opt.policy = config.policy;
      opt.seed = job.seed;
      const auto start = std::chrono::steady_clock::now();
      auto r = greedy_max_genus(g, opt);
      cell.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      cell.k = r.pairs.size();
      cell.counters = r.counters;
      pairs[i] = std::move(r.pairs);
      if (is_simple(g) && static_cast<double>(cell.degree_square_sum) >
                              simple_degree_square_bound(cell.n, cell.m) + 1e-9)
        errors[i] = "degree square sum above simple-graph bound";
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  auto describe = [&](std::size_t i) {
    const auto& c = result.cells[i];
    return c.family + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) + " " +
           std::string(to_string(c.backend));
  };
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> first_of;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& c = result.cells[i];
    if (!errors[i].empty()) result.violations.push_back(describe(i) + ": " + errors[i]);
    const auto& k = c.counters;
    if (k.pair_tests != k.pair_successes + k.pair_failures)
      result.violations.push_back(describe(i) + ": pair tests != successes + failures");
    if (k.pair_tests > k.candidate_pairs || k.candidate_pairs > k.candidate_bound)
      result.violations.push_back(describe(i) + ": pair tests exceed candidate bound");
    if (k.backend.queries != k.pair_successes + k.pair_failures)
      result.violations.push_back(describe(i) + ": connectivity queries differ from pair tests");
    if (k.pair_successes != c.k) result.violations.push_back(describe(i) + ": successes != k");
    auto [it, fresh] = first_of.try_emplace({jobs[i].n, jobs[i].seed}, i);
    if (!fresh) {
      const auto& o = result.cells[it->second];
      if (pairs[i] != pairs[it->second] || o.counters.pair_tests != k.pair_tests ||
          o.counters.backend.queries != k.backend.queries)
        result.violations.push_back(describe(i) + ": disagrees with " + describe(it->second));
    }
  }

  for (auto b : config.backends) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& c : result.cells)
      if (c.backend == b) pts.emplace_back(static_cast<double>(c.m), c.wall_ms);
    result.slopes.push_back({b, loglog_slope(pts), pts.size()});
  }
  return result;
}

std::string format_bench_table(const BenchResult& result) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %8s %9s %6s %-8s %7s %10s %10s %10s %12s %10s\n", "family", "n", "m", "seed",
                "backend", "k", "tests", "queries", "promotions", "sum_d2", "ms");
  out << buf;
  for (const auto& c : result.cells) {
    std::snprintf(buf, sizeof buf, "%-8s %8zu %9zu %6llu %-8s %7zu %10llu %10llu %10llu %12llu %10.2f\n",
                  c.family.c_str(), c.n, c.m, static_cast<unsigned long long>(c.seed),
                  std::string(to_string(c.backend)).c_str(), c.k,
                  static_cast<unsigned long long>(c.counters.pair_tests),
                  static_cast<unsigned long long>(c.counters.backend.queries),
                  static_cast<unsigned long long>(c.counters.backend.promotions),
                  static_cast<unsigned long long>(c.degree_square_sum), c.wall_ms);
    out << buf;
  }
  for (const auto& s : result.slopes) {
    std::snprintf(buf, sizeof buf, "slope %s: %.3f over %zu cells\n", std::string(to_string(s.backend)).c_str(),
                  s.slope, s.points);
    out << buf;
  }
  for (const auto& v : result.violations) out << "violation: " << v << '\n';
  return out.str();
}

}  // namespace maxgenus
