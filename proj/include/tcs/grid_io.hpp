#pragma once
// Plot-ready serialization of density grids: CSV (UTF-8, LF, header line)
// and 16-bit ASCII PGM (P2, maxval 65535, values scaled by the grid peak).
// Output is a pure function of the grid and the comment string, so reruns
// are byte-identical.

#include <iosfwd>
#include <string>

#include "tcs/torus.hpp"

namespace tcs {

// double -> shortest decimal string at the given significant digits,
// locale-independent.
std::string format_sig(double x, int sig_digits = 12);

// Header comment documents the grid convention; a footer comment records the
// mean, argmax and peak.
void write_density_csv(std::ostream& os, const DensityGrid& grid,
                       const std::string& comment, int sig_digits = 12);

void write_density_pgm(std::ostream& os, const DensityGrid& grid,
                       const std::string& comment);

}  // namespace tcs
