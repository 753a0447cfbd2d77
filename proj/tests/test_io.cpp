#include <doctest.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "geotail/error.hpp"
#include "geotail/io.hpp"
#include "test_support.hpp"

using namespace geotail;

TEST_CASE("parameter text accepts commas, whitespace and comment lines") {
  CHECK(parse_param_text("0.5,0.5") == std::vector{0.5, 0.5});
  CHECK(parse_param_text("# header\n0.1\n 0.2 0.3\n\t# indented comment\n0.4, 0.5\r\n") ==
        std::vector{0.1, 0.2, 0.3, 0.4, 0.5});
  CHECK(parse_param_text("1e-3 +2").size() == 2);
  CHECK(parse_param_text("").empty());
  CHECK(parse_param_text("# nothing\n").empty());
}

TEST_CASE("parameter text rejects junk") {
  CHECK_THROWS_AS(parse_param_text("0.5,abc"), Error);
  CHECK_THROWS_AS(parse_param_text("0.5x"), Error);
  CHECK_THROWS_AS(parse_param_text("0.5 # trailing comment"), Error);
  try {
    parse_param_text("0.1\n0.2\nnope");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("parameter files") {
  const auto path = std::filesystem::temp_directory_path() / "geotail_params_test.txt";
  {
    std::ofstream out(path);
    out << "# success probabilities\n0.5\n0.25\n";
  }
  CHECK(read_param_file(path) == std::vector{0.5, 0.25});
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_param_file(path), Error);
}

TEST_CASE("format_number uses 12 significant digits") {
  CHECK(format_number(0.541341132946450768) == "0.541341132946");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.0625) == "0.0625");
  CHECK(format_number(1.5777218104420236e-28) == "1.57772181044e-28");
}

TEST_CASE("printed numbers round-trip through parse and print") {
  testing::for_all(61, 5000, [](CounterRng& r) {
    const double mant = r.uniform_open();
    const int exp10 = static_cast<int>(r.next() % 600) - 300;
    return mant * std::pow(10.0, exp10);
  }, [](double v) {
    const auto text = format_number(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(format_number(back) == text);
  });
}
