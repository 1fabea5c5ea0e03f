#include "maxgenus/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "maxgenus/bench.hpp"
#include "maxgenus/embedding.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/greedy.hpp"
#include "maxgenus/oracle.hpp"
#include "maxgenus/report.hpp"

namespace maxgenus {

namespace {

struct CliFailure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitUsage, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

MultiGraph load_connected(const std::string& path) {
  MultiGraph g;
  try {
    g = parse_edge_list(read_input(path));
  } catch (const ParseError& e) {
    throw CliFailure{kExitParse, path + ": " + e.what()};
  }
  if (!is_connected(g)) throw CliFailure{kExitDisconnected, path + ": graph is disconnected"};
  return g;
}

std::string pair_text(const MultiGraph& g, const AdjacentPair& p) {
  return std::to_string(p.first) + " " + std::to_string(p.second) + " @ " + g.label(p.witness);
}

struct GreedyArgs {
  std::string input;
  std::string backend = "dynamic";
  std::string policy = "edge-id";
  std::uint64_t seed = 0;
  bool embed = false;
  bool json = false;
  bool preprocess = false;
};

int cmd_greedy(const GreedyArgs& a, std::ostream& out) {
  const MultiGraph g = load_connected(a.input);
  GreedyOptions opt;
  opt.backend = parse_backend_kind(a.backend);
  opt.policy = parse_order_policy(a.policy);
  opt.seed = a.seed;
  opt.preprocess = a.preprocess;

  const auto start = std::chrono::steady_clock::now();
  const auto r = greedy_max_genus(g, opt);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  RunReport report;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.beta = cycle_rank(g);
  report.k = r.pairs.size();
  report.bounds = r.bounds;
  report.policy = std::string(to_string(opt.policy));
  report.seed = opt.seed;
  report.backend = std::string(to_string(opt.backend));
  report.preprocess = opt.preprocess;
  report.counters = r.counters;
  report.wall_time_ms = ms;
  report.pairs = r.pairs;

  std::optional<EmbeddingResult> emb;
  if (a.embed) {
    emb = build_embedding(g, r.pairs);
    report.embedding = RunReport::EmbeddingSummary{emb->genus, emb->faces};
  }

  if (a.json) {
    out << nlohmann::json(report).dump() << '\n';
    return kExitOk;
  }
  out << "n = " << report.n << ", m = " << report.m << ", beta = " << report.beta << '\n';
  out << "k = " << report.k << '\n';
  out << "gamma_M in [" << report.bounds.lower << ", " << report.bounds.upper << "]\n";
  for (const auto& p : r.pairs) out << "pair " << pair_text(g, p) << '\n';
  if (emb) {
    out << "embedding genus = " << emb->genus << ", faces = " << emb->faces << '\n';
    out << format_rotation_system(g, emb->rotation);
  }
  return kExitOk;
}

struct ExactArgs {
  std::string input;
  std::string method = "all";
  OracleLimits limits;
};

int cmd_exact(const ExactArgs& a, std::ostream& out) {
  const MultiGraph g = load_connected(a.input);
  const bool all = a.method == "all";
  if (!all && a.method != "pairs" && a.method != "xuong" && a.method != "rotations")
    throw CliFailure{kExitUsage, "unknown method '" + a.method + "'"};
  std::optional<std::size_t> pairs_gamma, xuong_gamma, rot_gamma;
  try {
    if (all || a.method == "pairs") {
      const auto r = exact_max_genus_pairs(g, a.limits);
      pairs_gamma = r.gamma;
      out << "pairs: " << r.gamma << '\n';
      for (const auto& p : r.witness) out << "  pair " << pair_text(g, p) << '\n';
    }
    if (all || a.method == "xuong") {
      const auto r = xuong_max_genus(g, a.limits);
      xuong_gamma = r.gamma;
      out << "xuong: " << r.gamma << " (beta " << r.beta << ", odd components " << r.odd << ")\n";
      out << "  tree";
      for (auto e : r.tree) out << ' ' << e;
      out << '\n';
    }
    if (all || a.method == "rotations") {
      rot_gamma = exact_max_genus_rotations(g, a.limits);
      out << "rotations: " << *rot_gamma << '\n';
    }
  } catch (const LimitExceeded& e) {
    throw CliFailure{kExitLimit, e.what()};
  }
  if (all) {
    if (*pairs_gamma != *xuong_gamma || *pairs_gamma != *rot_gamma)
      throw CliFailure{kExitCheckFailed, "exact methods disagree"};
    out << "gamma_M = " << *pairs_gamma << " (all methods agree)\n";
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string input;
  std::string rotation;
  std::string policy = "edge-id";
  std::uint64_t seed = 0;
  bool verify = false;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
  const MultiGraph g = load_connected(a.input);
  if (!a.rotation.empty()) {
    RotationSystem rot;
    FaceSet faces;
    try {
      rot = parse_rotation_system(g, read_input(a.rotation));
      faces = trace_faces(g, rot);
    } catch (const ParseError& e) {
      throw CliFailure{kExitParse, a.rotation + ": " + e.what()};
    } catch (const EmbeddingError& e) {
      throw CliFailure{kExitParse, a.rotation + ": " + e.what()};
    }
    out << "genus = " << genus_of(g, rot) << ", faces = " << faces.size() << '\n';
    return kExitOk;
  }
  GreedyOptions opt;
  opt.policy = parse_order_policy(a.policy);
  opt.seed = a.seed;
  const auto r = greedy_max_genus(g, opt);
  EmbeddingOptions eo;
  eo.verify_each_step = a.verify;
  EmbeddingResult emb;
  try {
    emb = build_embedding(g, r.pairs, eo);
  } catch (const std::logic_error& e) {
    throw CliFailure{kExitCheckFailed, e.what()};
  }
  out << "k = " << r.pairs.size() << ", genus = " << emb.genus << ", faces = " << emb.faces << '\n';
  if (a.verify) out << "verified " << emb.verified_steps << " insertions\n";
  out << format_rotation_system(g, emb.rotation);
  return kExitOk;
}

struct GenArgs {
  GeneratorSpec spec;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  MultiGraph g;
  try {
    g = generate(a.spec);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitUsage, e.what()};
  }
  const std::string text = format_edge_list(g);
  if (a.output.empty() || a.output == "-") {
    out << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!(f << text)) throw CliFailure{kExitUsage, "cannot write '" + a.output + "'"};
  }
  return kExitOk;
}

struct BenchArgs {
  std::string config;
  int jobs = 0;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config;
  try {
    config = parse_bench_config(read_input(a.config));
  } catch (const ConfigError& e) {
    throw CliFailure{kExitUsage, a.config + ": " + e.what()};
  }
  if (a.jobs > 0) config.jobs = a.jobs;
  const auto result = run_bench(config);
  out << format_bench_table(result);
  return result.violations.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum genus approximation and exact oracles", "maxgenus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "maxgenus 1.0");

  const std::vector<std::string> backends{"dfs", "dynamic"};
  const std::vector<std::string> policies{"edge-id", "random", "loops-first", "central-vertex-first"};

  GreedyArgs ga;
  auto* greedy = app.add_subcommand("greedy", "Greedy pair removal with certified genus bounds");
  greedy->add_option("input", ga.input, "Edge-list file, - for stdin")->required();
  greedy->add_option("--backend", ga.backend, "Connectivity backend")->check(CLI::IsMember(backends));
  greedy->add_option("--policy", ga.policy, "Scan order")->check(CLI::IsMember(policies));
  greedy->add_option("--seed", ga.seed, "Seed for the random policy");
  greedy->add_flag("--embed", ga.embed, "Also build an embedding of genus >= k");
  greedy->add_flag("--json", ga.json, "Print a single-line JSON report");
  greedy->add_flag("--preprocess", ga.preprocess, "Extract forced pairs from parallel classes and loops first");

  ExactArgs xa;
  auto* exact = app.add_subcommand("exact", "Exact maximum genus for small graphs");
  exact->add_option("input", xa.input, "Edge-list file, - for stdin")->required();
  exact->add_option("--method", xa.method, "pairs, xuong, rotations or all")
      ->check(CLI::IsMember({"pairs", "xuong", "rotations", "all"}));
  exact->add_option("--max-edges", xa.limits.max_pair_search_edges, "Edge limit of the pair search");
  exact->add_option("--max-trees", xa.limits.max_spanning_trees, "Spanning tree limit");
  exact->add_option("--max-rotations", xa.limits.max_rotation_systems, "Rotation system limit");

  EmbedArgs ea;
  auto* embed = app.add_subcommand("embed", "Build an embedding from greedy pairs, or trace a given rotation");
  embed->add_option("input", ea.input, "Edge-list file, - for stdin")->required();
  embed->add_option("--rotation", ea.rotation, "Rotation system file to trace instead");
  embed->add_option("--policy", ea.policy, "Greedy scan order")->check(CLI::IsMember(policies));
  embed->add_option("--seed", ea.seed, "Seed for the random policy");
  embed->add_flag("--verify", ea.verify, "Re-trace all faces after every insertion");

  GenArgs gna;
  auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
  gen->add_option("family", gna.spec.family, "example|random|simple|bouquet|dipole|complete|cycle|path")
      ->required()
      ->check(CLI::IsMember({"example", "random", "simple", "bouquet", "dipole", "complete", "cycle", "path"}));
  gen->add_option("-n,--n", gna.spec.n, "Vertex count or family index");
  gen->add_option("-m,--m", gna.spec.m, "Edge count");
  gen->add_option("-k,--k", gna.spec.k, "Loop or parallel edge count");
  gen->add_option("--loop-prob", gna.spec.loop_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--parallel-prob", gna.spec.parallel_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gna.spec.seed);
  gen->add_option("-o,--output", gna.output, "Output file, stdout by default");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid from a key-value config");
  bench->add_option("config", ba.config, "Config file")->required();
  bench->add_option("--jobs", ba.jobs, "Override the config's parallel cell limit")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"maxgenus"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*greedy) return cmd_greedy(ga, out);
    if (*exact) return cmd_exact(xa, out);
    if (*embed) return cmd_embed(ea, out);
    if (*gen) return cmd_gen(gna, out);
    if (*bench) return cmd_bench(ba, out);
  } catch (const CliFailure& f) {
    err << "maxgenus: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "maxgenus: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxgenus
