#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mvalg::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kDomain = 2,    // negative verdict of a check, failed precondition
  kSchema = 3,    // malformed input document or command line
  kResource = 4,  // a size cap would be exceeded
};

/// Runs one command line (args[0] is the program name). Reads "-" from
/// `in`, writes the report to `out` unless --out is given, diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mvalg::cli
