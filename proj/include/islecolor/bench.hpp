#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "islecolor/island.hpp"
#include "islecolor/registry.hpp"

namespace islecolor {

struct RunDetail {
  std::uint64_t seed = 0;
  std::optional<int> k;  // empty when the run found no proper coloring
  double time_sec = 0.0;
  bool success = false;

  friend bool operator==(const RunDetail&, const RunDetail&) = default;
};

struct RunRecord {
  InstanceMeta instance;
  int vertices = 0;
  std::int64_t edges = 0;
  std::optional<int> k_reported;  // best k over all runs
  std::optional<int> hits;        // only for registered instances
  int runs = 0;
  double mean_time_sec = 0.0;
  std::uint64_t total_evaluations = 0;
  std::vector<RunDetail> per_run_details;
  std::optional<std::string> error;
};

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_output_format(const std::string& name);

struct BenchOptions {
  int runs = 20;
  /// Zero every time field so repeated benchmarks produce identical output.
  bool omit_timing = false;
  /// When set, each successful run writes `<dir>/<instance>.run<i>.sol`.
  std::optional<std::string> witness_dir;
};

/// Runs `runs` solves per instance with seeds base_seed + run index. A run
/// is a hit when its k is at most the registered best-known k; a fixed-k
/// run that fails is never a hit. Unparseable files produce a record with
/// `error` set instead of aborting the batch.
std::vector<RunRecord> run_benchmark(const std::vector<std::string>& paths, const EnsembleConfig& config,
                                     const BenchOptions& options);

std::string emit_results(const std::vector<RunRecord>& records, OutputFormat format);

nlohmann::json records_to_json(const std::vector<RunRecord>& records);
std::vector<RunRecord> records_from_json(const nlohmann::json& doc);

/// Witness file: `c instance=<name> k=<k> seed=<s>` then one line of
/// 0-based colors in vertex order.
std::string format_witness(const std::string& instance, const Coloring& coloring, std::uint64_t seed);

}  // namespace islecolor
