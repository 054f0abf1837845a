#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlgraph::cli {

/// Exit codes: decisions report kYes or kNo; anything malformed is kError.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

/// Runs one command line (without the program name). Input named "-" is read
/// from `in`; a path starting with '@' is taken relative to the fixtures
/// directory (--fixtures, else $NLGRAPH_FIXTURES, else the built-in corpus).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nlgraph::cli
