#pragma once

// RFC-4180 style tables: header row, comma separated, CRLF-free ("\n")
// records, fields quoted only when they contain a comma, quote or newline.

#include <iosfwd>
#include <string>
#include <vector>

namespace mddim {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::size_t column(const std::string& name) const;
};

// Writes the listed columns (all when empty) in the given order.
void write_table(std::ostream& out, const Table& table, const std::vector<std::string>& columns = {});
void emit_table(const Table& table, const std::vector<std::string>& columns, const std::string& path);

Table parse_table(std::istream& in);
Table read_table(const std::string& path);

std::string quote_field(const std::string& field);

}  // namespace mddim
