#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowkit::cli {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowkit::cli
