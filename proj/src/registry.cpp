#include "islecolor/registry.hpp"

#include <array>
#include <filesystem>

namespace islecolor {

namespace {

using enum InstanceSet;

constexpr std::array<RegistryEntry, 43> kEntries{{
    {"DSJC125.1", 125, 736, 5, 5, Small},
    {"DSJC125.5", 125, 3891, 17, 17, Small},
    {"DSJC125.9", 125, 6961, 44, 44, Small},
    {"DSJC250.1", 250, 3218, 8, 8, Small},
    {"DSJC250.5", 250, 15668, 28, 28, Small},
    {"DSJC250.9", 250, 27897, 72, 72, Small},
    {"DSJR500.1", 500, 3555, 12, 12, Small},
    {"school1", 385, 19095, 14, 14, Small},
    {"school1_nsh", 352, 14612, 14, 14, Small},
    {"flat300_20_0", 300, 21375, 20, 20, Small},
    {"le450_15a", 450, 8168, 15, 15, Small},
    {"le450_15b", 450, 8169, 15, 15, Small},
    {"le450_25a", 450, 8260, 25, 25, Small},
    {"le450_25b", 450, 8263, 25, 25, Small},
    {"R1000.1", 1000, 14348, 20, 20, Small},
    {"R125.1", 125, 209, 5, 5, Small},
    {"R125.1c", 125, 7501, 46, 46, Small},
    {"R125.5", 125, 3838, 36, 36, Small},
    {"R250.1", 250, 867, 8, 8, Small},

    {"C2000.5", 2000, 999836, 153, 148, Large},
    {"C4000.5", 4000, 4000268, 280, 272, Large},
    {"latin_sqr_10", 900, 307350, 98, 98, Large},
    {"DSJC250.5", 250, 15668, 28, 28, Large},
    {"DSJC500.1", 500, 12458, 12, 12, Large},
    {"DSJC500.5", 500, 62624, 49, 48, Large},
    {"DSJC500.9", 500, 112437, 126, 126, Large},
    {"DSJC1000.1", 1000, 49629, 20, 20, Large},
    {"DSJC1000.5", 1000, 249826, 83, 83, Large},
    {"DSJC1000.9", 1000, 449449, 224, 223, Large},
    {"DSJR500.1c", 500, 121275, 85, 85, Large},
    {"DSJR500.5", 500, 58862, 122, 122, Large},
    {"R250.5", 250, 14849, 65, 65, Large},
    {"R1000.1c", 1000, 485090, 98, 98, Large},
    {"R1000.5", 1000, 238267, 234, 240, Large},
    {"flat300_26_0", 300, 21633, 26, 26, Large},
    {"flat300_28_0", 300, 21695, 28, 28, Large},
    {"flat1000_50_0", 1000, 245000, 50, 50, Large},
    {"flat1000_60_0", 1000, 245830, 60, 60, Large},
    {"flat1000_76_0", 1000, 246708, 82, 82, Large},
    {"le450_15c", 450, 16680, 15, 15, Large},
    {"le450_15d", 450, 16750, 15, 15, Large},
    {"le450_25c", 450, 17343, 25, 25, Large},
    {"le450_25d", 450, 17425, 25, 25, Large},
}};

}  // namespace

std::span<const RegistryEntry> registry_entries() { return kEntries; }

const RegistryEntry* find_registry_entry(std::string_view name) {
  for (const auto& e : kEntries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string instance_name_from_path(std::string_view path) {
  std::string name = std::filesystem::path(path).filename().string();
  for (std::string_view suffix : {".col.b", ".col"}) {
    if (name.size() > suffix.size() && name.ends_with(suffix)) {
      name.resize(name.size() - suffix.size());
      break;
    }
  }
  return name;
}

InstanceMeta describe_instance(std::string_view path) {
  InstanceMeta meta{instance_name_from_path(path), std::nullopt, std::string(path)};
  if (const auto* e = find_registry_entry(meta.name)) meta.best_known_k = e->best_known_k;
  return meta;
}

}  // namespace islecolor
