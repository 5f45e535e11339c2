#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polariton/format.hpp"
#include "polariton/model.hpp"

namespace polariton::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kValidation = 2,
  kComputeCap = 3,
  kCheckMismatch = 4,
};

/// Sector sizes and photon-number traces, indexed by Statistics.
struct CountRow {
  int levels = 0;
  int ground_levels = 0;
  int molecules = 0;
  Manifold manifold = Manifold::FirstExcited;
  int max_photons = 1;
  std::array<std::uint64_t, 3> states{};
  std::array<double, 3> bright{};

  std::uint64_t states_of(Statistics s) const { return states[static_cast<int>(s)]; }
  double bright_of(Statistics s) const { return bright[static_cast<int>(s)]; }
};

/// Projects the manifold onto every sector (orbit path) and traces the photon
/// number operator in each.
CountRow count_row(int levels, int ground_levels, int molecules, Manifold manifold,
                   int max_photons = 1);

/// "297 | 35 (12%) | 2 (1%) | 81 | 15 (43%) | 0 (0%)" for the selected sectors.
std::string format_count_row(const CountRow& row, std::span<const Statistics> sectors);
std::string format_count_header(std::span<const Statistics> sectors);

/// Full-precision CSV of count rows.
CsvTable count_csv(std::span<const CountRow> rows, std::span<const Statistics> sectors);

/// The (m, m_g, n) configurations of the first-excitation-manifold table.
std::vector<std::array<int, 3>> table1_configurations();

/// Integer counts with whole-percent columns, one row per configuration.
CsvTable table1_csv(std::span<const Statistics> sectors);

std::string default_table1_fixture();

/// Entry point shared by the `polariton` executable and the tests. `args`
/// excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polariton::cli
