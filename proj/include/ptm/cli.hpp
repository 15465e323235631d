#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptm::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,         // table1 disagrees with the golden file
  kArgumentError = 2,
  kNumericalFailure = 3,  // non-convergence, pole, domain error
};

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 10 significant digits; scientific for 0 < |x| < 1e-4; "0" for zero.
std::string format_number(double x);

/// x rounded to the digits format_number prints.
double rounded(double x);

}  // namespace ptm::cli
