#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reachpairs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed or weight not achievable
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). `in` backs `verify -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace reachpairs::cli
