#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rtp/network.hpp"

namespace rtp::cli {

enum ExitCode : int {
  kPass = 0,        // verified, or every checked minor nonnegative
  kViolation = 1,   // a mathematical violation or a failed self-check
  kInputError = 2,  // malformed input or an unmet precondition
};

// Runs one command line (without the program name). Everything the command
// prints goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1,2,-3/4" -> exact values. Throws ParseError on empty items or floats.
std::vector<Rational> parse_list(const std::string& text);

// Reads a coefficient file: either "n value" lines (b-file style, indices
// must run 0, 1, 2, ...) or values separated by commas or whitespace. Lines
// starting with '#' are ignored.
std::vector<Rational> read_sequence_file(const std::string& path);

// Caps from RTP_ORACLE_CAPS ("order=4,paths=10000,families=10000"); unset
// keys keep their defaults.
OracleCaps caps_from_env();

}  // namespace rtp::cli
