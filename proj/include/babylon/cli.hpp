#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace babylon::cli {

/// Exit codes are a stable scripting contract.
enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,     // replay --expect found differences
  kInputError = 2,   // unreadable arguments, numerals or files
  kDomainError = 3,  // irrational root, division by zero, ...
};

/// Runs one command. args excludes the program name.
///
///   eval <expr>
///   replay <file> [--expect <trace-file|canonical>] [--attested-only]
///   solve sumprod <s> <p>
///   solve product_ratio <p> <k>
///   geom fourth <a> <b> <c>
///   geom transversal <x> <y> <z>
///   geom bisect <a> <b> <h>
///   geom intercept <ox> <oy> <ax> <ay> <bx> <by> <cx> <cy> <dx> <dy>
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace babylon::cli
