#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eboca::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFindings = 1;  // validate/scan found Error-severity findings
inline constexpr int kUsage = 2;     // bad flags or arguments
inline constexpr int kFailure = 3;   // I/O, parse or mapping failure

// Runs one command line. args excludes the program name. Results that are not
// written to an --out file go to `out`; logs and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eboca::cli
