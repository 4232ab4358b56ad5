#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polybranch/poly.hpp"

namespace polybranch {

// Runs one command line (without the program name). Returns the process exit
// code: 0 success, 2 partial result (warnings) or failed verification,
// 1 usage or runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re,im" or a bare real. Throws std::invalid_argument.
Complex parse_complex(const std::string& text);

// Either ';'-separated "re,im" entries or, with no ';', comma-separated reals.
std::vector<Complex> parse_coefficients(const std::string& text);

}  // namespace polybranch
