#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "deltainfer/errors.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

/// Header-named numeric columns read from a comma-separated file.
struct CsvTable {
  std::vector<std::string> headers;
  std::vector<std::vector<double>> columns;  // one vector per header

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }

  std::size_t column_index(const std::string& name) const {
    for (std::size_t j = 0; j < headers.size(); ++j)
      if (headers[j] == name) return j;
    throw InvalidArgument("column '" + name + "' not found in CSV header");
  }

  Sample select(const std::vector<std::string>& names) const {
    std::vector<std::vector<double>> picked;
    picked.reserve(names.size());
    for (const auto& name : names) picked.push_back(columns[column_index(name)]);
    return Sample::from_columns(picked);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline double parse_cell(const std::string& cell, std::size_t line_number) {
  std::string body = cell;
  if (!body.empty() && body.front() == '+') body.erase(body.begin());
  double value = 0.0;
  const auto* first = body.data();
  const auto* last = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || body.empty())
    throw IoError("non-numeric or missing cell '" + cell + "' on line " +
                  std::to_string(line_number));
  if (!std::isfinite(value))
    throw IoError("non-finite value on line " + std::to_string(line_number));
  return value;
}

}  // namespace detail

/// Strict reader: first row is the header, every cell numeric, every row the
/// same width. Offending rows are reported with their 1-based line number.
inline CsvTable read_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");

  CsvTable table;
  std::string line;
  std::size_t line_number = 0;

  while (std::getline(file, line)) {
    ++line_number;
    if (line_number == 1) {
      for (const auto& name : detail::split_csv_line(line)) {
        if (name.empty())
          throw IoError("empty column name in header");
        table.headers.push_back(name);
      }
      if (table.headers.empty()) throw IoError("empty CSV header");
      table.columns.resize(table.headers.size());
      continue;
    }
    if (detail::trim(line).empty() && file.peek() == std::ifstream::traits_type::eof())
      break;  // tolerate one trailing newline
    const std::vector<std::string> cells = detail::split_csv_line(line);
    if (cells.size() != table.headers.size())
      throw IoError("ragged row on line " + std::to_string(line_number) + ": expected " +
                    std::to_string(table.headers.size()) + " cells, found " +
                    std::to_string(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j)
      table.columns[j].push_back(detail::parse_cell(cells[j], line_number));
  }

  if (line_number == 0) throw IoError("empty file '" + path + "'");
  if (table.rows() == 0) throw IoError("no data rows in '" + path + "'");
  return table;
}

}  // namespace deltainfer
