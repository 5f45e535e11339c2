#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polariton/model.hpp"
#include "polariton/observables.hpp"
#include "polariton/statespace.hpp"
#include "polariton/symmetry.hpp"

namespace polariton {

struct HamiltonianOptions {
  /// Keep only coupling terms that conserve the excitation number
  /// N + #(molecules in the excited manifold).
  bool rotating_wave = false;
  /// Include diagonal dipole elements (photon-changing, level-preserving).
  bool permanent_dipoles = false;
};

/// Real symmetric Hamiltonian in cm^-1 over a direct-product basis, or over a
/// symmetry sector when `sector` is set.
struct HamiltonianMatrix {
  BasisSetPtr basis;
  std::optional<Statistics> sector;
  Eigen::MatrixXd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

/// H = sum_i E(k_i) + nu N + g sum_i D^(i) (a^dagger + a), with the photon
/// ladder truncated at the basis cutoff. Couplings leading out of `basis` are
/// dropped, which is how the first-excited manifold is closed.
HamiltonianMatrix build_hamiltonian(const EnsembleSpec& spec, const BasisSetPtr& basis,
                                    const HamiltonianOptions& options = {});

/// B^T H B. Throws std::invalid_argument if the subspace was projected from a
/// different basis.
HamiltonianMatrix restrict_to(const HamiltonianMatrix& h, const SubspaceBasis& subspace);

struct SpectrumResult {
  Statistics statistics = Statistics::None;
  std::vector<double> energies;  ///< ascending, cm^-1
  std::vector<double> photon_expectations;
  Eigen::MatrixXd vectors;  ///< eigenvectors over the subspace columns

  std::size_t size() const { return energies.size(); }
};

/// Dense symmetric eigendecomposition of a sector Hamiltonian. Throws
/// std::invalid_argument on non-finite entries or a size mismatch.
SpectrumResult diagonalize(const HamiltonianMatrix& h, const SubspaceBasis& subspace);

struct SectorResult {
  Statistics statistics = Statistics::None;
  SubspaceBasis subspace;
  SpectrumResult spectrum;
};

/// Enumerate, project (orbit path), build, restrict, and diagonalize each
/// requested sector. The Hamiltonian is assembled once; sectors run
/// concurrently and are returned in request order.
std::vector<SectorResult> run_sectors(const EnsembleSpec& spec,
                                      std::span<const Statistics> sectors,
                                      const HamiltonianOptions& options = {},
                                      std::size_t max_states = kDefaultMaxStates);

}  // namespace polariton
