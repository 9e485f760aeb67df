#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symdisc/poly.hpp"

namespace symdisc::cli {

/// Exit codes. check maps its verdict onto 0/1/2; every error is > 2.
inline constexpr int kExitAllInside = 0;
inline constexpr int kExitNotAllInside = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitError = 3;

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`. Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Semicolon-separated coefficients, each either `re,im` or a complex literal.
std::vector<Complex> parse_coeff_list(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdisc::cli
