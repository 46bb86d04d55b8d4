#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylkit/report.hpp"

namespace weylkit {

// One parsed CLI command. The front end (argv or a batch line) fills the
// fields relevant to its verb; run_command dispatches, times the work, and
// wraps any domain error into an error report with exit code 1.
struct Command {
    std::string verb;
    std::vector<std::string> exprs; // positional arguments, verb-specific

    std::string mode = "weyl";   // eval: weyl | comm
    std::string kind = "";       // homo | anti where applicable
    std::string which = "P";     // P | Q
    std::string parity = "sym";  // sym | skew
    std::string variant = "endo";
    bool invert = false;

    std::optional<int> bound;
    int word_length = 2;
    int pool_degree = 3;
    std::vector<std::string> pool_coeffs;
    std::optional<unsigned> seed;
};

Report run_command(const Command& c);

} // namespace weylkit
