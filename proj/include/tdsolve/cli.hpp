#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdsolve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Runs one command. `args` excludes the program name; `in` feeds commands
/// that read queries from standard input.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tdsolve::cli
