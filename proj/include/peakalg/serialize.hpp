#ifndef PEAKALG_SERIALIZE_HPP
#define PEAKALG_SERIALIZE_HPP

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "peakalg/enriched.hpp"
#include "peakalg/eulerian.hpp"
#include "peakalg/group_algebra.hpp"
#include "peakalg/polynomial.hpp"
#include "peakalg/qsym.hpp"

namespace peakalg {

using json = nlohmann::json;

/// Bumped whenever the structure-table file layout changes; cached files
/// with another version are ignored.
inline constexpr int structure_format_version = 1;

json to_json(const StatSet& s);
json to_json(const Census& c);
json to_json(const QSymElement& e);
QSymElement qsym_from_json(const json& j);
json to_json(const StructureTable& t);
StructureTable structure_from_json(const json& j);
json to_json(const AlgebraElement& e);
json to_json(const RationalPolynomial& p);
json to_json(const RhoReport& r);
json to_json(const BatteryEntry& e);
json to_json(const BatteryReport& r);
json to_json(const DualityReport& r);
json to_json(const AuditReport& r);

/// Cache file for the (flavor, n) structure table inside dir.
std::filesystem::path structure_cache_path(const std::filesystem::path& dir, Flavor flavor, Kind kind, int n);

/// Reads a cached table; nullopt when absent, unreadable, or of another
/// format version.
std::optional<StructureTable> load_structure_table(const std::filesystem::path& dir, Flavor flavor, Kind kind,
                                                   int n);
void save_structure_table(const std::filesystem::path& dir, const StructureTable& t);

/// Cached lookup that computes and stores the table on a miss. An empty
/// dir disables the cache.
StructureTable cached_structure_constants(const std::filesystem::path& dir, int n, Flavor flavor, Kind kind,
                                          unsigned jobs = 1);

} // namespace peakalg

#endif
