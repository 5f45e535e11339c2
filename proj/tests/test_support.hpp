#pragma once

#include <string>

#include "polariton/model.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) {
  return std::string(POLARITON_DATA_DIR) + "/" + name;
}

/// Two-level molecule with energies (0, excitation) and unit transition dipole.
inline polariton::MoleculeModel two_level(double excitation) {
  return polariton::synthetic_model(2, 1, excitation);
}

inline polariton::EnsembleSpec ensemble(polariton::MoleculeModel model, int molecules,
                                        double nu, double g, int nmax,
                                        polariton::Manifold manifold) {
  polariton::EnsembleSpec spec;
  spec.molecule = std::move(model);
  spec.molecules = molecules;
  spec.cavity = polariton::CavityMode{nu, nmax, g};
  spec.manifold = manifold;
  return spec;
}

}  // namespace testing_support
