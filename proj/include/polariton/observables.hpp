#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "polariton/symmetry.hpp"

namespace polariton {

/// Photon content of a subspace. `trace` counts bright basis functions.
struct BrightnessReport {
  double trace = 0.0;
  std::size_t dim = 0;
  double ratio = 0.0;  ///< trace / dim, 0 for an empty subspace
};

/// B^T N B, with N the diagonal photon-number operator of the source basis.
Eigen::MatrixXd photon_matrix(const SubspaceBasis& subspace);

BrightnessReport brightness(const SubspaceBasis& subspace);

/// <psi| a^dagger a |psi> for psi given as coefficients over the subspace
/// columns. Throws std::invalid_argument unless |psi| = 1 within 1e-8.
double photon_expectation(const SubspaceBasis& subspace, const Eigen::VectorXd& coefficients);

enum class BrightnessClass { Dark, Polaritonic, Photonic };

struct ClassThresholds {
  double dark_below = 0.1;
  double photonic_above = 0.9;
};

BrightnessClass classify(double photon_expectation, const ClassThresholds& thresholds = {});
std::string_view to_string(BrightnessClass c);

}  // namespace polariton
