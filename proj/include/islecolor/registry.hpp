#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace islecolor {

struct InstanceMeta {
  std::string name;
  std::optional<int> best_known_k;
  std::string source_path;
};

enum class InstanceSet { Small, Large };

/// Benchmark instance with its published size and best-known color count.
/// `reference_k` is the color count the reference ensemble runs reported.
struct RegistryEntry {
  std::string_view name;
  int vertices;
  std::int64_t edges;
  int best_known_k;
  int reference_k;
  InstanceSet set;
};

/// All 43 rows: 19 small instances followed by 24 large ones. DSJC250.5
/// appears in both sets with identical values.
std::span<const RegistryEntry> registry_entries();

/// First row with this name, or nullptr.
const RegistryEntry* find_registry_entry(std::string_view name);

/// "dir/DSJC125.1.col" -> "DSJC125.1".
std::string instance_name_from_path(std::string_view path);

InstanceMeta describe_instance(std::string_view path);

}  // namespace islecolor
