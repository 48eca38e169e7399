#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mvfilter/verify.hpp"

namespace mvfilter {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailures = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Fixed-layout text report without timings, so runs can be diffed.
std::string render_report_text(const VerificationReport& r);
/// Machine-readable report including per-statement timings.
std::string render_report_json(const VerificationReport& r);

/// Runs `mvfilter <args...>` (program name excluded) writing to the given
/// streams, and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvfilter
