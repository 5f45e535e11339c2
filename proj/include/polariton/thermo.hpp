#pragma once

#include <span>
#include <vector>

#include "polariton/hamiltonian.hpp"
#include "polariton/model.hpp"

namespace polariton {

/// Direct-summation thermodynamic functions, all referenced to the lowest
/// energy of the spectrum they were computed from.
///   q  partition function
///   u  internal energy, kJ mol^-1
///   c  heat capacity, J mol^-1 K^-1
///   s  entropy, J mol^-1 K^-1
///   g  free energy -RT ln Q, kJ mol^-1
struct ThermoTable {
  std::vector<double> temperatures;
  std::vector<double> q;
  std::vector<double> u;
  std::vector<double> c;
  std::vector<double> s;
  std::vector<double> g;

  std::size_t size() const { return temperatures.size(); }
};

/// Q = sum_i exp(-(E_i - E_0) / (k_B T)) with energies in cm^-1.
/// Throws std::invalid_argument on an empty spectrum or t <= 0.
double partition_function(std::span<const double> energies, double temperature);

/// Throws std::invalid_argument unless the grid is positive and strictly ascending.
ThermoTable thermo_table(std::span<const double> energies, std::span<const double> temperatures);

/// Inclusive grid tmin, tmin + step, ... <= tmax (with a small tolerance at the end).
std::vector<double> temperature_grid(double tmin, double tmax, double step);

/// Column-wise a - baseline on a shared grid.
ThermoTable difference(const ThermoTable& a, const ThermoTable& baseline);

struct SectorThermo {
  Statistics statistics = Statistics::None;
  std::size_t dimension = 0;
  double ground_energy = 0.0;     ///< E_0 of the sector, cm^-1
  double zero_point_shift = 0.0;  ///< E_0(sector) - E_0(None), cm^-1
  ThermoTable absolute;
  ThermoTable relative;  ///< absolute minus the None sector
};

struct ThermoOptions {
  /// Add N_A hc (E_0(sector) - E_0(None)) to U and G.
  bool include_zero_point = false;
};

/// Runs the sector pipeline for None plus the requested sectors and tabulates
/// each one. The None sector is always present and always first.
std::vector<SectorThermo> sector_thermo_compare(const EnsembleSpec& spec,
                                                std::span<const double> temperatures,
                                                std::span<const Statistics> sectors,
                                                const HamiltonianOptions& hamiltonian = {},
                                                const ThermoOptions& options = {});

}  // namespace polariton
