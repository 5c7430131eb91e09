#pragma once

// Command-line front end. Exit codes: 0 ok or verification pass,
// 1 verification failure (or an operator word that cannot be applied),
// 2 usage or parse error, 3 internal invariant breach.

#include <iosfwd>
#include <string>
#include <vector>

namespace mvpoly::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBreach = 3;

// args excludes the program name. "-" as a file name reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace mvpoly::cli
