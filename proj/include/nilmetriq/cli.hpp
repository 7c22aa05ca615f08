#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilmetriq::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,  // verify-paper or theorem found a mismatch
  kUsage = 2,               // bad arguments, unknown algebra, constraint violation
  kExpectMismatch = 3,      // output differs from the --expect golden file
};

constexpr int kSchemaVersion = 1;

// args excludes the program name. `terminal` selects the default format
// (table on a terminal, json otherwise).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal = false);

}  // namespace nilmetriq::cli
