#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace reachpairs {

// A caller passed arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed digraph text, trace JSON or cache file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition that the math guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested weight k is not in W(n). Carries the closest members of W(n)
// on either side, when they exist.
class NotAchievable : public std::domain_error {
 public:
  NotAchievable(std::uint64_t n, std::uint64_t k,
                std::optional<std::uint64_t> below,
                std::optional<std::uint64_t> above);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t k() const noexcept { return k_; }
  const std::optional<std::uint64_t>& nearest_below() const noexcept { return below_; }
  const std::optional<std::uint64_t>& nearest_above() const noexcept { return above_; }

 private:
  std::uint64_t n_;
  std::uint64_t k_;
  std::optional<std::uint64_t> below_;
  std::optional<std::uint64_t> above_;
};

}  // namespace reachpairs
