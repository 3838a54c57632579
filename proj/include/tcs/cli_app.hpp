#pragma once
// Command-line front end. The parsing and the subcommand bodies live in the
// library so tests can drive the exact code path the binary uses.
//
// Subcommands: overlap, expect, density, wavefunction, verify.
// Exit codes: 0 ok, 1 check failure, 2 bad flags or invalid parameters.

#include <iosfwd>
#include <string>
#include <vector>

namespace tcs {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tcs
