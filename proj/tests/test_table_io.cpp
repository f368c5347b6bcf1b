#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "tensegrity/table_io.hpp"

using namespace tensegrity::io;

namespace {

Table sample_table() {
  Table t;
  t.header = {{"class", "Stable"}, {"alpha_sing", format_number(std::numbers::pi / 4)}};
  t.columns = {"loop", "angle", "tangential"};
  t.rows.push_back({Cell{1LL}, Cell{-2.717561614}, Cell{std::string("false")}});
  t.rows.push_back({Cell{2LL}, Cell{std::numbers::pi / 4}, Cell{std::string("true")}});
  t.footer = {{"evaluated", "2"}};
  return t;
}

double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(std::numbers::pi / 4) == "0.785398163397");
  CHECK(format_number(3.24) == "3.24000000000");
  CHECK(format_number(-0.0) == format_number(0.0));
  CHECK(format_number(-1e-13) == "-0.000000000000100000000000");
  CHECK(format_number(1234.5) == "1234.50000000");
}

TEST_CASE("csv layout") {
  std::ostringstream out;
  write_csv(sample_table(), out);
  CHECK(out.str() ==
        "# class=Stable\n"
        "# alpha_sing=0.785398163397\n"
        "loop,angle,tangential\n"
        "1,-2.71756161400,false\n"
        "2,0.785398163397,true\n"
        "# evaluated=2\n");
}

TEST_CASE("csv and json round trips agree") {
  const Table original = sample_table();
  for (Format f : {Format::kCsv, Format::kJson}) {
    std::stringstream buffer;
    write_table(original, f, buffer);
    const Table back = read_table(f, buffer);
    CHECK(back.header == original.header);
    CHECK(back.columns == original.columns);
    CHECK(back.footer == original.footer);
    REQUIRE(back.rows.size() == original.rows.size());
    for (std::size_t r = 0; r < back.rows.size(); ++r) {
      CHECK(as_double(back.rows[r][0]) == as_double(original.rows[r][0]));
      CHECK(as_double(back.rows[r][1]) == doctest::Approx(as_double(original.rows[r][1])).epsilon(1e-11));
      CHECK(std::get<std::string>(back.rows[r][2]) == std::get<std::string>(original.rows[r][2]));
    }
    CHECK(*back.find_meta("class") == "Stable");
    CHECK(back.find_meta("missing") == nullptr);
  }
}

TEST_CASE("formats") {
  CHECK(parse_format("csv") == Format::kCsv);
  CHECK(parse_format("json") == Format::kJson);
  CHECK(extension(Format::kJson) == ".json");
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("malformed csv") {
  std::istringstream ragged("a,b\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), std::runtime_error);
  std::istringstream headless("# k=v\n");
  CHECK_THROWS_AS(read_csv(headless), std::runtime_error);
}
