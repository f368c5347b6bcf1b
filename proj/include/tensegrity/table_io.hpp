#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tensegrity::io {

// Fixed notation with 12 significant digits; negative zero prints as zero.
std::string format_number(double value);

using Cell = std::variant<double, long long, std::string>;
using Metadata = std::vector<std::pair<std::string, std::string>>;

// A column table with "key=value" metadata lines above and below the rows.
struct Table {
  Metadata header;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Metadata footer;

  const std::string* find_meta(std::string_view key) const;
};

enum class Format { kCsv, kJson };

Format parse_format(std::string_view name);
std::string_view extension(Format format);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

// Numeric cells are restored as numbers; the numeric value equals the value
// written up to format_number precision.
Table read_csv(std::istream& in);
Table read_json(std::istream& in);
Table read_table(Format format, std::istream& in);

}  // namespace tensegrity::io
