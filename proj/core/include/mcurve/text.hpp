#pragma once

// Locale-independent text helpers shared by the CSV readers and writers.

#include <string>
#include <string_view>
#include <vector>

namespace mcurve::text {

std::string trim(std::string_view s);
std::string upper(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Dot-decimal parse of the whole field (surrounding blanks allowed). Throws ParseError.
double parse_double(std::string_view s);

/// Rewrites a decimal number with its point moved by `pow10` places, in plain notation
/// ("1.56e-2", 2 -> "1.56"). Accepts an optional sign and exponent. Throws ParseError.
std::string shift_decimal(std::string_view number, int pow10);

/// The decimal value of `s` times 10^pow10, rounded once to the nearest double.
double parse_scaled(std::string_view s, int pow10);

/// Shortest text `t` with parse_scaled(t, -pow10) == v, in plain notation.
std::string format_scaled(double v, int pow10);

/// printf-%.{precision}g style, but independent of the C locale.
std::string format_general(double v, int precision);
/// printf-%.{decimals}f style, locale-independent. Negative zero prints as zero.
std::string format_fixed(double v, int decimals);

}  // namespace mcurve::text
