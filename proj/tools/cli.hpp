#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ers::cli {

/// Exit codes: 0 success, 1 a requested check failed, 2 bad input.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ers::cli
