#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qlogic/error.hpp"

namespace qlogic {

inline constexpr const char* kReportSchema = "qlogic-report/1";

// Exit codes by error family.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitSizeBound = 4,
  kExitAssert = 5,
  kExitSemantic = 6,
};

int exit_code_for(ErrorKind kind);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

struct CommandResult {
  int exit_code = kExitOk;
  std::string human;            // for stdout
  std::string diagnostics;      // for stderr
  nlohmann::ordered_json report;

  std::string report_text() const { return report.dump(2) + "\n"; }
};

// Runs one subcommand; args exclude the program name. Writes the report to
// the --json path when one is given.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace qlogic
