#pragma once

#include "chordgenus/oracle.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chordgenus::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kLimit = 3 };

/// Parses key=value lines; blank lines and '#' comments are skipped.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Precedence: flag, then environment, then config file, then defaults.
OracleConfig resolve_oracle_config(const std::map<std::string, std::string>& file_values,
                                   const char* env_limit, std::optional<std::size_t> flag_limit);

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordgenus::cli
