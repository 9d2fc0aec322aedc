#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace sectordirac::cli {

inline constexpr const char *schema_version = "1.0";

enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  solver_failure = 3,
  indeterminate = 4,
};

//! Run one command; args excludes the program name. JSON goes to out,
//! one-line errors to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sectordirac::cli
