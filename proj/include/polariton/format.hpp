#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polariton {

/// 12 significant digits, '.' decimal point, independent of the C++ locale.
std::string format_number(double value);

/// Nearest whole percent of part / whole, halves rounded up; 0 when whole is 0.
std::uint64_t round_percent(std::uint64_t part, std::uint64_t whole);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Minimal CSV table (no quoting: every cell here is numeric or a bare word).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
  /// Keeps only the named columns, in the given order. Throws
  /// std::invalid_argument for an unknown column.
  CsvTable select(const std::vector<std::string>& columns) const;
  static CsvTable parse(std::string_view text);
};

}  // namespace polariton
