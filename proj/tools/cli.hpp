#pragma once

#include <iosfwd>

namespace homalg::cli {

/// Exit statuses.
inline constexpr int kPassed = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Parses arguments, runs one subcommand and writes its report.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homalg::cli
