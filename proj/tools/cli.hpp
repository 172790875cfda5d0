#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stallings::cli {

// Exit codes.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kInputError = 2;

// args excludes the program name.  Reports go to `out` (or to the -o
// file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stallings::cli
