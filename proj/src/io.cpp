#include "geotail/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "geotail/error.hpp"

namespace geotail {

namespace {

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; }

void parse_line(std::string_view line, std::size_t line_no, std::vector<double>& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j])) ++j;
    const std::string_view token = line.substr(i, j - i);
    // from_chars rejects a leading '+', accept it by hand.
    const std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" +
                                             std::string(token) + "' is not a number");
    }
    out.push_back(v);
    i = j;
  }
}

}  // namespace

std::vector<double> parse_param_text(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    parse_line(line, line_no, out);
  }
  return out;
}

std::vector<double> read_param_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open parameter file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_param_text(buf.str());
}

std::string format_number(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

}  // namespace geotail
