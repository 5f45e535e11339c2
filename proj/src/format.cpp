#include "polariton/format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace polariton {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 12);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), end);
}

std::uint64_t round_percent(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return 0;
  return (200 * part + whole) / (2 * whole);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::string CsvTable::str() const {
  std::string text = join(header) + '\n';
  for (const auto& row : rows) text += join(row) + '\n';
  return text;
}

CsvTable CsvTable::select(const std::vector<std::string>& columns) const {
  std::vector<std::size_t> picks;
  for (const auto& name : columns) {
    std::size_t i = 0;
    while (i < header.size() && header[i] != name) ++i;
    if (i == header.size()) throw std::invalid_argument("csv: no column named " + name);
    picks.push_back(i);
  }
  CsvTable out;
  out.header = columns;
  for (const auto& row : rows) {
    std::vector<std::string> picked;
    for (std::size_t i : picks) picked.push_back(i < row.size() ? row[i] : std::string());
    out.rows.push_back(std::move(picked));
  }
  return out;
}

CsvTable CsvTable::parse(std::string_view text) {
  CsvTable table;
  bool first = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    if (line.empty()) continue;
    if (first) {
      table.header = split(line);
      first = false;
    } else {
      table.rows.push_back(split(line));
    }
  }
  return table;
}

}  // namespace polariton
