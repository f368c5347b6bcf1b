#include "tensegrity/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace tensegrity::io {

namespace {

constexpr int kSignificantDigits = 12;

using ordered_json = nlohmann::ordered_json;

std::string render(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

void check_field(std::string_view text) {
  if (text.find_first_of(",\n\r") != std::string_view::npos) {
    throw std::invalid_argument("table field contains a separator: " + std::string(text));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    parts.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return text;
  const bool integral = text.find_first_of(".eEnN") == std::string::npos;
  char* end = nullptr;
  if (integral) {
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() + text.size()) return v;
  }
  const double d = std::strtod(text.c_str(), &end);
  if (end == text.c_str() + text.size()) return d;
  return text;
}

std::pair<std::string, std::string> parse_meta(std::string_view line) {
  line.remove_prefix(1);
  line = trim(line);
  const std::size_t eq = line.find('=');
  if (eq == std::string_view::npos) return {std::string(line), std::string()};
  return {std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
}

ordered_json meta_to_json(const Metadata& meta) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : meta) obj[k] = v;
  return obj;
}

Metadata meta_from_json(const ordered_json& obj) {
  Metadata meta;
  if (obj.is_null()) return meta;
  for (const auto& [k, v] : obj.items()) meta.emplace_back(k, v.get<std::string>());
  return meta;
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  int decimals = kSignificantDigits;
  if (value != 0.0) {
    const int before_point = static_cast<int>(std::floor(std::log10(std::abs(value)))) + 1;
    decimals = std::clamp(kSignificantDigits - before_point, 0, 40);
  }
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  std::string text(buffer);
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  return text;
}

const std::string* Table::find_meta(std::string_view key) const {
  for (const Metadata* meta : {&header, &footer}) {
    for (const auto& [k, v] : *meta) {
      if (k == key) return &v;
    }
  }
  return nullptr;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string_view extension(Format format) { return format == Format::kCsv ? ".csv" : ".json"; }

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [k, v] : table.header) out << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    check_field(table.columns[i]);
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string text = render(row[i]);
      check_field(text);
      out << (i ? "," : "") << text;
    }
    out << '\n';
  }
  for (const auto& [k, v] : table.footer) out << "# " << k << '=' << v << '\n';
}

void write_json(const Table& table, std::ostream& out) {
  ordered_json doc;
  doc["header"] = meta_to_json(table.header);
  doc["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json jrow = ordered_json::array();
    for (const Cell& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        // Round through the text form so both formats carry the same value.
        const std::string text = format_number(*d);
        if (std::isfinite(*d)) {
          jrow.push_back(std::strtod(text.c_str(), nullptr));
        } else {
          jrow.push_back(text);
        }
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        jrow.push_back(*i);
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  doc["footer"] = meta_to_json(table.footer);
  out << doc.dump(2) << '\n';
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

Table read_csv(std::istream& in) {
  Table table;
  bool have_columns = false;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      (have_columns ? table.footer : table.header).push_back(parse_meta(view));
      continue;
    }
    if (!table.footer.empty()) throw std::runtime_error("csv row after footer metadata");
    std::vector<std::string> fields = split(view);
    if (!have_columns) {
      table.columns = std::move(fields);
      have_columns = true;
      continue;
    }
    if (fields.size() != table.columns.size()) throw std::runtime_error("csv row width mismatch");
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) row.push_back(parse_cell(f));
    table.rows.push_back(std::move(row));
  }
  if (!have_columns) throw std::runtime_error("csv has no header row");
  return table;
}

Table read_json(std::istream& in) {
  const ordered_json doc = ordered_json::parse(in);
  Table table;
  table.header = meta_from_json(doc.value("header", ordered_json()));
  table.footer = meta_from_json(doc.value("footer", ordered_json()));
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& jrow : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& v : jrow) {
      if (v.is_number_integer()) {
        row.emplace_back(v.get<long long>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    if (row.size() != table.columns.size()) throw std::runtime_error("json row width mismatch");
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table read_table(Format format, std::istream& in) {
  return format == Format::kCsv ? read_csv(in) : read_json(in);
}

}  // namespace tensegrity::io
