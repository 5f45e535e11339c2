#pragma once

namespace polariton::constants {

// CODATA 2018.
/// Boltzmann constant over hc, in cm^-1 per K.
inline constexpr double kBoltzmannWavenumber = 0.695034800;
/// Molar gas constant, J mol^-1 K^-1.
inline constexpr double kGasConstant = 8.31446261815324;
/// Molar energy of one wavenumber, N_A h c, in J mol^-1 per cm^-1.
inline constexpr double kMolarEnergyPerWavenumber = kGasConstant / kBoltzmannWavenumber;

}  // namespace polariton::constants
