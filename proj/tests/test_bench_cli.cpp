#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "islecolor/bench.hpp"
#include "islecolor/cli.hpp"
#include "islecolor/dimacs.hpp"
#include "islecolor/registry.hpp"
#include "published_rows.hpp"
#include "test_support.hpp"

using namespace islecolor;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "islecolor");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Workspace : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("islecolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_graph(const std::string& name, const Graph& g) {
    const auto p = dir_ / name;
    std::ofstream out(p);
    write_dimacs(out, g);
    return p.string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

RunRecord sample_record() {
  RunRecord r;
  r.instance = InstanceMeta{"R125.1", 5, "data/R125.1.col"};
  r.vertices = 125;
  r.edges = 209;
  r.k_reported = 5;
  r.hits = 2;
  r.runs = 2;
  r.mean_time_sec = 0.25;
  r.total_evaluations = 80;
  r.per_run_details = {{1, 5, 0.2, true}, {2, 5, 0.3, true}};
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(EmitResults, CsvShape) {
  const std::string header = "instance,vertices,edges,k_star,k,hits,runs,mean_time_sec,total_evals";
  EXPECT_EQ(lines_of(emit_results({}, OutputFormat::Csv)), std::vector<std::string>{header});
  const auto lines = lines_of(emit_results({sample_record()}, OutputFormat::Csv));
  ASSERT_EQ(lines.size(), 2U);
  EXPECT_EQ(lines[0], header);
  EXPECT_EQ(lines[1].rfind("R125.1,125,209,5,5,2,2,", 0), 0U) << lines[1];
  EXPECT_EQ(lines[1].substr(lines[1].rfind(',') + 1), "80");
}

TEST(EmitResults, JsonRoundTrip) {
  RunRecord unregistered;
  unregistered.instance = InstanceMeta{"mine", std::nullopt, "x/mine.col"};
  unregistered.vertices = 3;
  unregistered.edges = 1;
  unregistered.runs = 1;
  unregistered.per_run_details = {{7, std::nullopt, 0.0, false}};
  RunRecord broken;
  broken.instance = InstanceMeta{"bad", std::nullopt, "bad.col"};
  broken.error = "line 2: malformed";
  const std::vector<RunRecord> records{sample_record(), unregistered, broken};

  const auto doc = records_to_json(records);
  const auto again = records_to_json(records_from_json(doc));
  EXPECT_EQ(doc, again);
  EXPECT_EQ(doc.dump(), again.dump());
  const std::string text = emit_results(records, OutputFormat::Json);
  EXPECT_EQ(nlohmann::json::parse(text), doc);
}

TEST(EmitResults, TableHasHeaderAndRows) {
  const auto lines = lines_of(emit_results({sample_record()}, OutputFormat::Table));
  ASSERT_GE(lines.size(), 2U);
  EXPECT_NE(lines[0].find("#hits/runs"), std::string::npos);
  EXPECT_NE(lines[1].find("2/2"), std::string::npos);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(ParseSolution, SkipsCommentsAndRejectsJunk) {
  std::istringstream ok("c instance=x k=2 seed=1\n0 1\n\n1\n");
  EXPECT_EQ(parse_solution(ok), (std::vector<int>{0, 1, 1}));
  std::istringstream bad("0 x 1\n");
  EXPECT_THROW(parse_solution(bad), std::runtime_error);
  std::istringstream negative("0 -1\n");
  EXPECT_THROW(parse_solution(negative), std::runtime_error);
}

TEST_F(Workspace, VerifyExitCodes) {
  const auto graph = write_graph("tri.col", complete_graph(3));
  const auto good = write_text("good.sol", "0 1 2\n");
  const auto bad = write_text("bad.sol", "c one conflict\n0 1 1\n");
  const auto short_sol = write_text("short.sol", "0 1\n");

  auto r = cli({"verify", graph, good});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OK"), std::string::npos);

  r = cli({"verify", graph, bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("conflict: edge 2 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("INVALID: 1"), std::string::npos);

  EXPECT_EQ(cli({"verify", graph, short_sol}).code, 1);
  EXPECT_EQ(cli({"verify", graph, (dir_ / "missing.sol").string()}).code, 2);
}

TEST_F(Workspace, UsageErrors) {
  const auto graph = write_graph("g.col", path_graph(4));
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"solve", graph, "--bogus"}).code, 2);
  EXPECT_EQ(cli({"solve", graph, "--k", "2", "--auto-k"}).code, 2);
  EXPECT_EQ(cli({"solve", (dir_ / "nope.col").string()}).code, 2);
  EXPECT_EQ(cli({"solve", write_text("broken.col", "p edge 2 1\ne 1 9\n")}).code, 2);
  EXPECT_EQ(cli({"bench", graph, "--output", "xml"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
}

TEST_F(Workspace, SolveThenVerify) {
  const Graph g = random_graph(60, 0.1, 3);
  const auto graph = write_graph("g60.col", g);
  const auto witness = (dir_ / "g60.sol").string();
  const auto json_path = (dir_ / "g60.json").string();
  auto r = cli({"solve", graph, "--islands", "2", "--time-limit", "5", "--witness", witness, "--result-json",
                json_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string w = slurp(witness);
  EXPECT_EQ(w.rfind("c instance=g60 k=", 0), 0U) << w;
  r = cli({"verify", graph, witness});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(slurp(json_path));
  EXPECT_TRUE(doc.at("smallest_legal_k").is_number_integer());

  // Fixed k at the witness size must succeed; a clearly impossible k fails.
  const int k = doc.at("smallest_legal_k").get<int>();
  r = cli({"solve", graph, "--k", std::to_string(k), "--islands", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto out_witness = write_text("stdout.sol", r.out);
  EXPECT_EQ(cli({"verify", graph, out_witness}).code, 0);

  const auto k4 = write_graph("k4.col", complete_graph(4));
  r = cli({"solve", k4, "--k", "3", "--islands", "1", "--generations", "3", "--tabu-depth", "100"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Workspace, InfoReport) {
  const auto graph = write_graph("tri.col", complete_graph(3));
  const auto r = cli({"info", graph});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vertices: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("edges: 3"), std::string::npos);
  EXPECT_NE(r.out.find("density: 1"), std::string::npos);
  EXPECT_EQ(r.out.find("best_known_k"), std::string::npos);

  // A file named after a registered instance but with different contents.
  const auto fake = write_graph("R125.1.col", path_graph(5));
  const auto f = cli({"info", fake});
  EXPECT_NE(f.out.find("best_known_k: 5"), std::string::npos) << f.out;
  EXPECT_NE(f.out.find("registry_mismatch"), std::string::npos);
}

TEST_F(Workspace, BenchRecordsAndHits) {
  // Registered name, bipartite contents: every run reaches k = 2 <= 5.
  const auto hit = write_graph("R125.1.col", path_graph(10));
  const auto free = write_graph("free.col", complete_graph(3));
  const auto broken = write_text("broken.col", "p edge 3 1\ne 1 1\n");
  EnsembleConfig c;
  c.island_count = 2;
  c.generations = 10;
  c.population_size = 4;
  c.tabu.nbmax = 200;
  BenchOptions opts;
  opts.runs = 3;
  opts.omit_timing = true;
  opts.witness_dir = (dir_ / "wit").string();
  const auto records = run_benchmark({hit, free, broken}, c, opts);
  ASSERT_EQ(records.size(), 3U);

  EXPECT_EQ(records[0].k_reported, 2);
  EXPECT_EQ(records[0].hits, 3);
  EXPECT_EQ(records[0].runs, 3);
  ASSERT_EQ(records[0].per_run_details.size(), 3U);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(records[0].per_run_details[static_cast<std::size_t>(i)].seed, c.base_seed + static_cast<std::uint64_t>(i));

  EXPECT_EQ(records[1].k_reported, 3);
  EXPECT_FALSE(records[1].hits);
  EXPECT_FALSE(records[1].error);

  EXPECT_TRUE(records[2].error);
  EXPECT_TRUE(records[2].per_run_details.empty());

  for (int i = 0; i < 3; ++i) {
    const auto sol = (dir_ / "wit" / ("R125.1.run" + std::to_string(i) + ".sol")).string();
    ASSERT_TRUE(fs::exists(sol));
    EXPECT_EQ(cli({"verify", hit, sol}).code, 0);
  }
}

TEST_F(Workspace, BenchSingleRun) {
  const auto g = write_graph("p.col", path_graph(6));
  const auto r = cli({"bench", g, "--runs", "1", "--output", "json", "--islands", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1U);
  const auto records = records_from_json(doc);
  EXPECT_EQ(records[0].per_run_details.size(), 1U);
}

TEST_F(Workspace, BenchIsReproducible) {
  const auto a = write_graph("a.col", random_graph(40, 0.3, 1));
  const auto b = write_graph("b.col", random_graph(30, 0.5, 2));
  const std::vector<std::string> args{"bench", a, b, "--runs", "2", "--islands", "3", "--generations", "20",
                                      "--tabu-depth", "500", "--population", "6", "--seed", "9", "--omit-timing", "--output",
                                      "csv"};
  const auto first = cli(args);
  const auto second = cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  auto json_args = args;
  json_args.back() = "json";
  json_args.push_back("--out");
  json_args.push_back((dir_ / "one.json").string());
  ASSERT_EQ(cli(json_args).code, 0);
  json_args.back() = (dir_ / "two.json").string();
  ASSERT_EQ(cli(json_args).code, 0);
  EXPECT_EQ(slurp((dir_ / "one.json").string()), slurp((dir_ / "two.json").string()));
}

TEST_F(Workspace, BenchReportsBrokenFilesButFinishes) {
  const auto good = write_graph("good.col", path_graph(4));
  const auto bad = write_text("bad.col", "garbage\n");
  const auto r = cli({"bench", good, bad, "--runs", "1", "--output", "csv", "--islands", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(lines_of(r.out).size(), 3U);
  EXPECT_NE(r.err.find("bad.col"), std::string::npos);
}

TEST_F(Workspace, HardInstanceUnderTimeLimit) {
  const auto g = write_graph("hard.col", random_graph(400, 0.5, 77));
  const auto start = std::chrono::steady_clock::now();
  const auto r = cli({"bench", g, "--runs", "1", "--time-limit", "2", "--output", "csv"});
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(elapsed, 10.0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2U);
  EXPECT_EQ(lines[1].rfind("hard,400,", 0), 0U);
}

TEST(FormatWitness, HeaderAndColors) {
  const Graph g = path_graph(3);
  const Coloring c(g, 2, {0, 1, 0});
  EXPECT_EQ(format_witness("p3", c, 11), "c instance=p3 k=2 seed=11\n0 1 0\n");
}

TEST(Registry, MatchesPublishedRows) {
  const auto entries = registry_entries();
  ASSERT_EQ(entries.size(), 43U);
  std::size_t i = 0;
  auto check = [&](const published::Row& row, InstanceSet set) {
    const auto& e = entries[i++];
    EXPECT_EQ(e.name, row.name);
    EXPECT_EQ(e.vertices, row.vertices) << row.name;
    EXPECT_EQ(e.edges, row.edges) << row.name;
    EXPECT_EQ(e.best_known_k, row.best_known_k) << row.name;
    EXPECT_EQ(e.reference_k, row.reference_k) << row.name;
    EXPECT_EQ(e.set, set) << row.name;
  };
  for (const auto& row : published::kSmallRows) check(row, InstanceSet::Small);
  for (const auto& row : published::kLargeRows) check(row, InstanceSet::Large);
}

TEST(Registry, LookupAndNames) {
  const auto* e = find_registry_entry("DSJC125.1");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->vertices, 125);
  EXPECT_EQ(e->edges, 736);
  EXPECT_EQ(e->best_known_k, 5);
  EXPECT_EQ(find_registry_entry("nope"), nullptr);
  EXPECT_EQ(instance_name_from_path("a/b/DSJC125.1.col"), "DSJC125.1");
  EXPECT_EQ(instance_name_from_path("C2000.5.col.b"), "C2000.5");
  EXPECT_EQ(instance_name_from_path("plain"), "plain");
  const auto meta = describe_instance("x/R250.1.col");
  EXPECT_EQ(meta.name, "R250.1");
  EXPECT_EQ(meta.best_known_k, 8);
  EXPECT_FALSE(describe_instance("x/unknown.col").best_known_k);
}

TEST(Registry, LocalFilesMatch) {
  int checked = 0;
  for (const auto& e : registry_entries()) {
    const auto path = find_instance(std::string(e.name));
    if (!path) continue;
    const Graph g = load_dimacs(*path);
    EXPECT_EQ(g.vertex_count(), e.vertices) << e.name;
    EXPECT_EQ(g.edge_count(), e.edges) << e.name;
    ++checked;
  }
  if (checked == 0) GTEST_SKIP() << "no registered instance files in " << instance_dir();
}

TEST_F(Workspace, SolveKnownInstanceAtBestK) {
  const auto path = find_instance("DSJC125.1");
  if (!path) GTEST_SKIP() << "DSJC125.1.col not present in " << instance_dir();
  const auto witness = (dir_ / "w.sol").string();
  const auto r = cli({"solve", path->string(), "--k", "5", "--witness", witness});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli({"verify", path->string(), witness}).code, 0);
}
