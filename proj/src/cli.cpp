#include "islecolor/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "islecolor/bench.hpp"
#include "islecolor/dimacs.hpp"
#include "islecolor/dsatur.hpp"
#include "islecolor/island.hpp"

namespace islecolor {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SearchFlags {
  std::optional<int> k;
  bool auto_k = false;
  int islands = 4;
  std::uint64_t seed = 1;
  int generations = 1000;
  int population = 20;
  std::int64_t tabu_depth = 100000;
  int tabu_tenure = 7;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> eval_budget;
  bool sequential = false;
  int threads = 0;

  void attach(CLI::App& cmd) {
    auto* k_opt = cmd.add_option("--k", k, "Run only at this number of colors");
    auto* auto_opt = cmd.add_flag("--auto-k", auto_k, "Descend from the DSATUR bound (default)");
    k_opt->excludes(auto_opt);
    cmd.add_option("--islands", islands, "Worker islands")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", seed, "Base seed");
    cmd.add_option("--generations", generations, "Generations per island")->check(CLI::PositiveNumber);
    cmd.add_option("--population", population, "Population size")->check(CLI::Range(2, 1 << 20));
    cmd.add_option("--tabu-depth", tabu_depth, "TabuCol iteration limit (nbmax)")->check(CLI::PositiveNumber);
    cmd.add_option("--tabu-tenure", tabu_tenure, "Tabu tenure")->check(CLI::PositiveNumber);
    cmd.add_option("--time-limit", time_limit, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
    cmd.add_option("--eval-budget", eval_budget, "Fitness evaluations per island per k");
    cmd.add_flag("--sequential", sequential, "Run islands one after another");
    cmd.add_option("--threads", threads, "Worker threads in concurrent mode (0 = one per island)");
  }

  EnsembleConfig config() const {
    EnsembleConfig c;
    c.island_count = islands;
    c.base_seed = seed;
    c.generations = generations;
    c.population_size = population;
    c.tabu.nbmax = tabu_depth;
    c.tabu.tenure = tabu_tenure;
    if (time_limit) c.time_limit = std::chrono::duration<double>(*time_limit);
    c.fitness_eval_budget = eval_budget;
    c.target_k = k;
    c.sequential = sequential;
    c.max_threads = threads;
    return c;
  }
};

Graph load_reporting(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g = load_dimacs(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

int cmd_solve(const std::string& path, const SearchFlags& flags, const std::string& result_json,
              const std::string& witness_path, std::ostream& out, std::ostream& err) {
  const Graph g = load_reporting(path, err);
  const EnsembleConfig config = flags.config();
  const auto started = Clock::now();
  const SolveResult result = solve(g, config);
  const double elapsed = std::chrono::duration<double>(Clock::now() - started).count();

  if (!result_json.empty()) {
    std::ofstream(result_json) << to_json(result).dump(2) << '\n';
  }
  const std::string name = instance_name_from_path(path);
  if (!result.witness) {
    err << name << ": no proper coloring with k=" << *config.target_k << " found ("
        << total_evaluations(result) << " evaluations, " << elapsed << " s)\n";
    return kExitFailure;
  }
  const std::string witness = format_witness(name, *result.witness, config.base_seed);
  if (witness_path.empty()) {
    out << witness;
  } else {
    std::ofstream(witness_path) << witness;
  }
  err << name << ": k=" << *result.smallest_legal_k << " (" << total_evaluations(result)
      << " evaluations, " << elapsed << " s)\n";
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& solution_path, std::ostream& out,
               std::ostream& err) {
  const Graph g = load_reporting(graph_path, err);
  std::ifstream in(solution_path);
  if (!in) {
    err << "error: cannot open " << solution_path << '\n';
    return kExitUsage;
  }
  const std::vector<int> colors = parse_solution(in);
  if (static_cast<int>(colors.size()) != g.vertex_count()) {
    err << "error: solution has " << colors.size() << " colors for " << g.vertex_count() << " vertices\n";
    return kExitFailure;
  }
  const auto bad = monochromatic_edges(g, colors);
  for (auto [u, v] : bad) {
    out << "conflict: edge " << u + 1 << ' ' << v + 1 << " both colored " << colors[static_cast<std::size_t>(u)]
        << '\n';
  }
  if (!bad.empty()) {
    out << "INVALID: " << bad.size() << " monochromatic edge(s)\n";
    return kExitFailure;
  }
  const int k = *std::max_element(colors.begin(), colors.end()) + 1;
  const Coloring c(g, k, colors);
  out << "OK: proper coloring of " << g.vertex_count() << " vertices using " << c.distinct_colors()
      << " colors\n";
  return 0;
}

int cmd_info(const std::string& path, std::ostream& out, std::ostream& err) {
  const Graph g = load_reporting(path, err);
  const std::string name = instance_name_from_path(path);
  out << "instance: " << name << '\n'
      << "vertices: " << g.vertex_count() << '\n'
      << "edges: " << g.edge_count() << '\n';
  if (g.vertex_count() >= 2) out << "density: " << density(g) << '\n';
  out << "max_degree: " << g.max_degree() << '\n'
      << "dsatur_bound: " << greedy_upper_bound(g) << '\n';
  if (const auto* e = find_registry_entry(name)) {
    out << "best_known_k: " << e->best_known_k << '\n';
    if (e->vertices != g.vertex_count() || e->edges != g.edge_count()) {
      out << "registry_mismatch: expected " << e->vertices << " vertices / " << e->edges << " edges\n";
    }
  }
  return 0;
}

}  // namespace

std::vector<int> parse_solution(std::istream& in) {
  std::vector<int> colors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token) || token == "c") continue;
    do {
      int value = -1;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw std::runtime_error("solution line " + std::to_string(line_no) + ": bad color '" + token + "'");
      }
      colors.push_back(value);
    } while (tokens >> token);
  }
  return colors;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Island ensemble graph coloring solver"};
  app.name("islecolor");
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Find a proper coloring with as few colors as possible");
  std::string solve_path;
  std::string result_json;
  std::string witness_path;
  SearchFlags solve_flags;
  solve_cmd->add_option("file", solve_path, "DIMACS .col file")->required();
  solve_flags.attach(*solve_cmd);
  solve_cmd->add_option("--result-json", result_json, "Write the full solve result as JSON");
  solve_cmd->add_option("--witness", witness_path, "Write the witness here instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Repeat solves over instances and tabulate results");
  std::vector<std::string> bench_paths;
  SearchFlags bench_flags;
  BenchOptions bench_options;
  std::string bench_format = "table";
  std::string bench_out;
  std::string witness_dir;
  bench_cmd->add_option("files", bench_paths, "DIMACS .col files")->required();
  bench_flags.attach(*bench_cmd);
  bench_cmd->add_option("--runs", bench_options.runs, "Runs per instance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", bench_format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  bench_cmd->add_option("--out", bench_out, "Write results here instead of stdout");
  bench_cmd->add_flag("--omit-timing", bench_options.omit_timing, "Report zero times (reproducible output)");
  bench_cmd->add_option("--witness-dir", witness_dir, "Write one witness file per successful run");

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
  std::string verify_graph;
  std::string verify_solution;
  verify_cmd->add_option("file", verify_graph, "DIMACS .col file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution file")->required();

  auto* info_cmd = app.add_subcommand("info", "Print instance statistics");
  std::string info_path;
  info_cmd->add_option("file", info_path, "DIMACS .col file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_path, solve_flags, result_json, witness_path, out, err);
    if (*bench_cmd) {
      if (!witness_dir.empty()) bench_options.witness_dir = witness_dir;
      const auto records = run_benchmark(bench_paths, bench_flags.config(), bench_options);
      const std::string doc = emit_results(records, parse_output_format(bench_format));
      if (bench_out.empty()) {
        out << doc;
      } else {
        std::ofstream(bench_out) << doc;
      }
      int code = 0;
      for (const auto& r : records) {
        if (!r.error) continue;
        err << "error: " << r.instance.source_path << ": " << *r.error << '\n';
        code = kExitUsage;
      }
      return code;
    }
    if (*verify_cmd) return cmd_verify(verify_graph, verify_solution, out, err);
    if (*info_cmd) return cmd_info(info_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace islecolor
