#include "mddim/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "mddim/errors.hpp"

namespace mddim {

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw Error(fmt::format("row has {} fields, table has {} columns", row.size(), columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error(fmt::format("no column '{}'", name));
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_table(std::ostream& out, const Table& table, const std::vector<std::string>& columns) {
  std::vector<std::size_t> picks;
  if (columns.empty()) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) picks.push_back(i);
  } else {
    for (const auto& c : columns) picks.push_back(table.column(c));
  }
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < picks.size(); ++i) {
      if (i) out << ',';
      out << quote_field(fields[picks[i]]);
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

void emit_table(const Table& table, const std::vector<std::string>& columns, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(fmt::format("cannot open '{}' for writing", path));
  write_table(file, table, columns);
  file.flush();
  if (!file) throw Error(fmt::format("write to '{}' failed", path));
}

namespace {

// Splits one record; returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error("unterminated quoted field");
  fields.push_back(std::move(field));
  return true;
}

}  // namespace

Table parse_table(std::istream& in) {
  Table table;
  std::vector<std::string> fields;
  if (!read_record(in, fields)) return table;
  table.columns = fields;
  while (read_record(in, fields)) table.add_row(fields);
  return table;
}

Table read_table(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(fmt::format("cannot open '{}'", path));
  return parse_table(file);
}

}  // namespace mddim
