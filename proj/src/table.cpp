#include "pnt/table.hpp"

#include <cmath>
#include <cstdio>

#include "pnt/error.hpp"

namespace pnt {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    fail(ErrorKind::invariant_violation, "row has " + std::to_string(row.size()) + " cells, table has " +
                                             std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  fail(ErrorKind::invariant_violation, "no column named " + name);
}

double Table::number(std::size_t row, const std::string& name) const {
  const auto& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  fail(ErrorKind::invariant_violation, "column " + name + " is not numeric");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s, char sep) {
  const bool needs = s.find(sep) != std::string::npos || s.find('"') != std::string::npos ||
                     s.find('\n') != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_table(const Table& table, TableFormat format) {
  const char sep = format == TableFormat::csv ? ',' : '\t';
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += sep;
    out += quote(table.columns[i], sep);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += sep;
      const auto& cell = row[i];
      if (const auto* d = std::get_if<double>(&cell)) {
        out += format_number(*d);
      } else if (const auto* n = std::get_if<std::int64_t>(&cell)) {
        out += std::to_string(*n);
      } else {
        out += quote(std::get<std::string>(cell), sep);
      }
    }
    out += '\n';
  }
  return out;
}

bool has_nan(const Table& table) {
  for (const auto& row : table.rows) {
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell); d && std::isnan(*d)) return true;
    }
  }
  return false;
}

}  // namespace pnt
