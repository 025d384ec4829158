#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fidest::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `fidest <args...>` (args excludes the program name).
// Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Table1Row {
  std::size_t k;
  double lambda_max;
  double expected;
  bool pass;
  std::string detail;
};

// Replays the scripted single-qubit run (outcomes up, +, +i from a {up, down}
// start) and checks fidelities, most likely states and basis unbiasedness for
// k = 0..3. perturb tilts the second basis off the optimum by that many
// radians (negative control).
std::vector<Table1Row> validate_table1(double perturb = 0.0);

}  // namespace fidest::cli
