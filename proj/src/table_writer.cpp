#include "entspec/table_writer.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace entspec {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_value(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Number:
      return c.text == "inf" || c.text == "-inf" || c.text == "nan" ? "null" : c.text;
    case Cell::Kind::Integer:
    case Cell::Kind::Boolean:
      return c.text;
    case Cell::Kind::BigInteger:
    case Cell::Kind::Text:
      return nlohmann::json(c.text).dump();
    case Cell::Kind::Empty:
      return "null";
  }
  return "null";
}

}  // namespace

Cell number_cell(double value, int precision) {
  if (std::isnan(value)) return {Cell::Kind::Number, "nan"};
  if (std::isinf(value)) return {Cell::Kind::Number, value > 0 ? "inf" : "-inf"};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return {Cell::Kind::Number, buf};
}

Cell integer_cell(long long value) { return {Cell::Kind::Integer, std::to_string(value)}; }
Cell big_integer_cell(const BigInt& value) { return {Cell::Kind::BigInteger, value.get_str()}; }
Cell text_cell(std::string value) { return {Cell::Kind::Text, std::move(value)}; }
Cell boolean_cell(bool value) { return {Cell::Kind::Boolean, value ? "true" : "false"}; }
Cell empty_cell() { return {Cell::Kind::Empty, ""}; }

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << csv_field(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  out << "{\"table\":" << nlohmann::json(table.name).dump() << ",\"columns\":[";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << nlohmann::json(table.columns[i]).dump();
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n" : "\n") << '[';
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << json_value(row[i]);
    out << ']';
  }
  out << "\n]}\n";
}

}  // namespace entspec
