#include "islecolor/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "islecolor/dimacs.hpp"

namespace islecolor {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown output format '" + name + "' (expected csv, json or table)");
}

std::string format_witness(const std::string& instance, const Coloring& coloring, std::uint64_t seed) {
  std::ostringstream out;
  out << "c instance=" << instance << " k=" << coloring.k() << " seed=" << seed << '\n'
      << format_assignment(coloring.assignment()) << '\n';
  return out.str();
}

std::vector<RunRecord> run_benchmark(const std::vector<std::string>& paths, const EnsembleConfig& config,
                                     const BenchOptions& options) {
  if (options.runs < 1) throw std::invalid_argument("runs must be >= 1");
  std::vector<RunRecord> records;
  for (const auto& path : paths) {
    RunRecord record;
    record.instance = describe_instance(path);
    Graph g;
    try {
      g = load_dimacs(path);
    } catch (const std::exception& e) {
      record.error = e.what();
      records.push_back(std::move(record));
      continue;
    }
    record.vertices = g.vertex_count();
    record.edges = g.edge_count();
    record.runs = options.runs;
    if (record.instance.best_known_k) record.hits = 0;

    double total_time = 0.0;
    for (int run = 0; run < options.runs; ++run) {
      EnsembleConfig run_config = config;
      run_config.base_seed = config.base_seed + static_cast<std::uint64_t>(run);
      const auto started = Clock::now();
      const SolveResult result = solve(g, run_config);
      const double elapsed =
          options.omit_timing ? 0.0 : std::chrono::duration<double>(Clock::now() - started).count();

      RunDetail detail{run_config.base_seed, result.smallest_legal_k, elapsed, false};
      if (result.smallest_legal_k) {
        detail.success = !record.instance.best_known_k ||
                         *result.smallest_legal_k <= *record.instance.best_known_k;
        if (!record.k_reported || *result.smallest_legal_k < *record.k_reported) {
          record.k_reported = result.smallest_legal_k;
        }
        if (options.witness_dir) {
          std::filesystem::create_directories(*options.witness_dir);
          const auto file = std::filesystem::path(*options.witness_dir) /
                            (record.instance.name + ".run" + std::to_string(run) + ".sol");
          std::ofstream(file) << format_witness(record.instance.name, *result.witness, run_config.base_seed);
        }
      }
      if (record.hits && detail.success) ++*record.hits;
      total_time += elapsed;
      record.total_evaluations += total_evaluations(result);
      record.per_run_details.push_back(detail);
    }
    record.mean_time_sec = total_time / options.runs;
    records.push_back(std::move(record));
  }
  return records;
}

nlohmann::json records_to_json(const std::vector<RunRecord>& records) {
  using nlohmann::json;
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json doc = json::array();
  for (const auto& r : records) {
    json details = json::array();
    for (const auto& d : r.per_run_details) {
      details.push_back({{"seed", d.seed}, {"k", opt(d.k)}, {"time_sec", d.time_sec}, {"success", d.success}});
    }
    doc.push_back({{"instance", r.instance.name},
                   {"source_path", r.instance.source_path},
                   {"vertices", r.vertices},
                   {"edges", r.edges},
                   {"k_star", opt(r.instance.best_known_k)},
                   {"k", opt(r.k_reported)},
                   {"hits", opt(r.hits)},
                   {"runs", r.runs},
                   {"mean_time_sec", r.mean_time_sec},
                   {"total_evals", r.total_evaluations},
                   {"per_run_details", std::move(details)},
                   {"error", opt(r.error)}});
  }
  return doc;
}

std::vector<RunRecord> records_from_json(const nlohmann::json& doc) {
  auto opt_int = [](const nlohmann::json& v) -> std::optional<int> {
    if (v.is_null()) return std::nullopt;
    return v.get<int>();
  };
  std::vector<RunRecord> records;
  for (const auto& item : doc) {
    RunRecord r;
    r.instance.name = item.at("instance").get<std::string>();
    r.instance.source_path = item.at("source_path").get<std::string>();
    r.instance.best_known_k = opt_int(item.at("k_star"));
    r.vertices = item.at("vertices").get<int>();
    r.edges = item.at("edges").get<std::int64_t>();
    r.k_reported = opt_int(item.at("k"));
    r.hits = opt_int(item.at("hits"));
    r.runs = item.at("runs").get<int>();
    r.mean_time_sec = item.at("mean_time_sec").get<double>();
    r.total_evaluations = item.at("total_evals").get<std::uint64_t>();
    for (const auto& d : item.at("per_run_details")) {
      r.per_run_details.push_back(RunDetail{d.at("seed").get<std::uint64_t>(), opt_int(d.at("k")),
                                            d.at("time_sec").get<double>(), d.at("success").get<bool>()});
    }
    if (!item.at("error").is_null()) r.error = item.at("error").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

template <typename T>
std::string or_empty(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream out;
  out << *v;
  return out.str();
}

std::string fixed3(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << x;
  return out.str();
}

std::string emit_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "instance,vertices,edges,k_star,k,hits,runs,mean_time_sec,total_evals\n";
  for (const auto& r : records) {
    out << r.instance.name << ',' << r.vertices << ',' << r.edges << ',' << or_empty(r.instance.best_known_k)
        << ',' << or_empty(r.k_reported) << ',' << or_empty(r.hits) << ',' << r.runs << ','
        << fixed3(r.mean_time_sec) << ',' << r.total_evaluations << '\n';
  }
  return out.str();
}

std::string emit_table(const std::vector<RunRecord>& records) {
  const std::vector<std::string> header{"instance", "#vertices", "#edges", "k*", "k", "#hits/runs", "time(sec.)"};
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : records) {
    if (r.error) {
      rows.push_back({r.instance.name, "error: " + *r.error, "", "", "", "", ""});
      continue;
    }
    const std::string hits = r.hits ? std::to_string(*r.hits) + "/" + std::to_string(r.runs) : "-";
    rows.push_back({r.instance.name, std::to_string(r.vertices), std::to_string(r.edges),
                    r.instance.best_known_k ? std::to_string(*r.instance.best_known_k) : "-",
                    r.k_reported ? std::to_string(*r.k_reported) : "-", hits, fixed3(r.mean_time_sec)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[i])) << row[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_results(const std::vector<RunRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      return emit_csv(records);
    case OutputFormat::Json:
      return records_to_json(records).dump(2) + "\n";
    case OutputFormat::Table:
      return emit_table(records);
  }
  return {};
}

}  // namespace islecolor
