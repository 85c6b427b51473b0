#include "ybfr/tabular.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ybfr/atomdata.hpp"

namespace ybfr {

size_t Table::column_index(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::domain_error("no column named '" + name + "'");
}

std::vector<double> Table::column(const std::string& name) const {
  const size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(idx));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Table& table) {
  for (const auto& [key, value] : table.metadata) os << "# " << key << " = " << value << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::domain_error("row width does not match the header");
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
}

void write_csv_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open for writing: " + path);
  write_csv(out, table);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Table read_csv(std::istream& is) {
  Table table;
  std::string line;
  bool have_header = false;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string text = strip(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto eq = text.find('=');
      if (eq != std::string::npos)
        table.metadata.emplace_back(strip(text.substr(1, eq - 1)), strip(text.substr(eq + 1)));
      continue;
    }
    if (!have_header) {
      for (auto& name : split(text, ',')) table.columns.push_back(strip(name));
      have_header = true;
      continue;
    }
    const auto fields = split(text, ',');
    if (fields.size() != table.columns.size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(table.columns.size()) + " fields, got " +
                       std::to_string(fields.size()));
    std::vector<double> row;
    for (const auto& f : fields) {
      const std::string v = strip(f);
      double x = 0.0;
      const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
      if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + v + "'");
      row.push_back(x);
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("empty table: no header row found");
  return table;
}

Table read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path);
  return read_csv(in);
}

}  // namespace ybfr
