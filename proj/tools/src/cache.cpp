#include "reachpairs_cli/cache.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string>

namespace reachpairs::cli {

bool load_cache(const std::filesystem::path& path, WeightTables& tables, std::ostream& err) {
  std::ifstream file(path);
  if (!file) return false;
  try {
    const auto j = nlohmann::json::parse(file);
    if (j.at("version").get<int>() != kCacheVersion) {
      err << "warning: cache " << path.string() << " has an unsupported version; recomputing\n";
      return false;
    }
    auto b_values = j.at("b_values").get<std::vector<Weight>>();
    const auto& sets = j.at("w_sets");
    std::vector<WeightSet> weight_sets(sets.size() + 1);
    for (std::size_t n = 1; n <= sets.size(); ++n) {
      std::vector<Interval> parts;
      for (const auto& iv : sets.at(std::to_string(n))) {
        parts.push_back({iv.at(0).get<Weight>(), iv.at(1).get<Weight>()});
      }
      weight_sets[n] = WeightSet::from_intervals(std::move(parts));
    }
    if (!tables.load(std::move(b_values), std::move(weight_sets))) {
      err << "warning: cache " << path.string() << " disagrees with recomputation; ignoring it\n";
      return false;
    }
    return true;
  } catch (const std::exception& e) {
    err << "warning: cache " << path.string() << " is unreadable (" << e.what()
        << "); recomputing\n";
    return false;
  }
}

void save_cache(const std::filesystem::path& path, const WeightTables& tables, std::ostream& err) {
  nlohmann::ordered_json j;
  j["version"] = kCacheVersion;
  const auto b = tables.b_values();
  j["b_values"] = std::vector<Weight>(b.begin(), b.end());
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  const auto memo = tables.memoized_weight_sets();
  for (std::size_t n = 1; n < memo.size(); ++n) {
    auto& list = sets[std::to_string(n)] = nlohmann::ordered_json::array();
    for (const auto& iv : memo[n].intervals()) list.push_back({iv.lo, iv.hi});
  }
  j["w_sets"] = std::move(sets);
  j["max_prepared_n"] = b.empty() ? 0 : b.size() - 1;

  // Write then rename so a crash never leaves a half-written cache.
  const auto temp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream file(temp, std::ios::trunc);
    if (!file || !(file << j.dump() << '\n')) {
      err << "warning: could not write cache " << path.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) err << "warning: could not write cache " << path.string() << ": " << ec.message() << "\n";
}

}  // namespace reachpairs::cli
