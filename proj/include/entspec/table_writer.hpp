#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "entspec/partitions.hpp"

namespace entspec {

/// One pre-formatted output value. Numbers are formatted once, so CSV and
/// JSON renderings of the same table carry identical digits.
struct Cell {
  enum class Kind { Number, Integer, BigInteger, Text, Boolean, Empty };
  Kind kind = Kind::Empty;
  std::string text;
};

Cell number_cell(double value, int precision);
Cell integer_cell(long long value);
Cell big_integer_cell(const BigInt& value);
Cell text_cell(std::string value);
Cell boolean_cell(bool value);
Cell empty_cell();

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// RFC 4180 CSV: header line, comma separated, fields quoted when needed.
void write_csv(std::ostream& out, const Table& table);

/// {"table": name, "columns": [...], "rows": [[...], ...]}. Big integers are
/// emitted as decimal digit strings; non-finite numbers and empty cells as null.
void write_json(std::ostream& out, const Table& table);

}  // namespace entspec
