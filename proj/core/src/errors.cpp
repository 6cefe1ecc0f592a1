#include "reachpairs/errors.hpp"

#include <string>

namespace reachpairs {
namespace {

std::string describe(std::uint64_t n, std::uint64_t k,
                     const std::optional<std::uint64_t>& below,
                     const std::optional<std::uint64_t>& above) {
  std::string msg = "weight " + std::to_string(k) + " is not achievable on " +
                    std::to_string(n) + " vertices";
  if (below || above) {
    msg += " (nearest achievable:";
    if (below) msg += " " + std::to_string(*below);
    if (below && above) msg += " and";
    if (above) msg += " " + std::to_string(*above);
    msg += ")";
  }
  return msg;
}

}  // namespace

NotAchievable::NotAchievable(std::uint64_t n, std::uint64_t k,
                             std::optional<std::uint64_t> below,
                             std::optional<std::uint64_t> above)
    : std::domain_error(describe(n, k, below, above)),
      n_(n),
      k_(k),
      below_(below),
      above_(above) {}

}  // namespace reachpairs
