#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ybfr {

// Plot-ready CSV: a '#'-prefixed metadata block (echoed parameters), one
// header row, then comma-separated numeric rows. Numbers are written in
// shortest round-trip form, so a written table reloads without loss.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  size_t column_index(const std::string& name) const;  // throws if absent
  std::vector<double> column(const std::string& name) const;
};

std::string format_double(double v);  // shortest exact decimal form

void write_csv(std::ostream& os, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

Table read_csv(std::istream& is);
Table read_csv_file(const std::string& path);

}  // namespace ybfr
