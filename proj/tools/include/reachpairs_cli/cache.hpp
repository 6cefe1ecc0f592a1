#pragma once

// On-disk memo of the b table and weight sets.

#include <filesystem>
#include <iosfwd>

#include "reachpairs/tables.hpp"

namespace reachpairs::cli {

inline constexpr int kCacheVersion = 1;

// Loads path into tables. A missing file is not an error. A corrupt file,
// a version mismatch or values that disagree with recomputation leave the
// tables untouched and print a warning to err. Returns true if loaded.
bool load_cache(const std::filesystem::path& path, WeightTables& tables, std::ostream& err);

// Writes the current tables. Failures are reported to err and otherwise
// ignored.
void save_cache(const std::filesystem::path& path, const WeightTables& tables, std::ostream& err);

}  // namespace reachpairs::cli
