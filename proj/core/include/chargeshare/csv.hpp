#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace chargeshare {

using Cell = std::variant<std::string, double, long>;

/// Header plus rows, fixed column order.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  /// Index of a header column; throws if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// Shortest round-trip decimal ('.' separator), "nan"/"inf" spelled out.
std::string format_number(double x);

/// RFC 4180: comma separated, CRLF-free ("\n"), fields quoted when needed.
void write_csv(std::ostream& os, const Table& t);
std::string to_csv(const Table& t);
void write_csv_file(const std::string& path, const Table& t);

}  // namespace chargeshare
