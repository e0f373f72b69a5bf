#pragma once

#include "a3res/quiver.hpp"
#include "a3res/desing.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace a3res::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// "a,b,c,d,e,f", nonnegative. Throws std::invalid_argument.
Multiplicities parse_mult(const std::string& s);
/// "b1,b2,b3/g1,g2,g3", nonnegative. Throws std::invalid_argument.
FlagData parse_flag(const std::string& s);
/// Comma-separated integers, negatives allowed.
std::vector<int> parse_ints(const std::string& s);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a3res::cli
