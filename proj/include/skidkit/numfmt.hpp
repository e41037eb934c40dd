#pragma once

#include <string>

namespace skidkit {

// Locale-independent numeric text. All file output goes through these
// so that a comma-decimal system locale cannot change emitted bytes.

// Shortest general form with the given significant digits (like %.Ng).
std::string format_general(double value, int significant_digits = 9);

// Fixed-point with the given number of decimals (like %.Nf).
std::string format_fixed(double value, int decimals);

// Strict parse of a full token as double; '.' decimal point only.
// Returns false if the token is not entirely a number.
bool parse_double(const std::string& token, double& out);

}  // namespace skidkit
