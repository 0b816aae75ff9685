#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pnt {

/// Named-column table; the common currency of every report.
struct Table {
  using Cell = std::variant<double, std::int64_t, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  explicit Table(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}

  /// Throws InvariantViolation when the width does not match the header.
  void add_row(std::vector<Cell> row);

  /// Index of a column, or throws InvariantViolation.
  std::size_t column(const std::string& name) const;

  double number(std::size_t row, const std::string& name) const;
};

enum class TableFormat { csv, tsv };

/// Header row then one line per row; `%.12g` numbers, `nan`/`inf` for
/// non-finite values, LF line endings.
std::string emit_table(const Table& table, TableFormat format = TableFormat::csv);

bool has_nan(const Table& table);

/// `%.12g`.
std::string format_number(double v);

}  // namespace pnt
