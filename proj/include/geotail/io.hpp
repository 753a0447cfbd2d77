#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace geotail {

/// Parses a parameter list: decimal numbers separated by whitespace, commas
/// or newlines. Lines whose first non-blank character is '#' are skipped.
/// Throws Error(ParseError) on anything else.
std::vector<double> parse_param_text(std::string_view text);

/// Reads and parses a parameter file in the format above.
std::vector<double> read_param_file(const std::filesystem::path& path);

/// Locale-independent "%.12g"-style rendering.
std::string format_number(double v, int significant = 12);

}  // namespace geotail
