#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sweepmap/verify.hpp"

namespace sweepmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one invocation. `args` excludes the program name. Words come from
/// --path / --sigma or, when those are absent, from `in` one per line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int exit_code_for(const VerifyReport& report);

/// Upper-cases and maps the N/E aliases to S/W; surrounding blanks dropped.
std::string normalize_word(std::string_view text);

}  // namespace sweepmap::cli
