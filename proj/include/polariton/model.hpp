#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace polariton {

/// Single-molecule eigenstates: level energies, transition dipoles, and the
/// split of the levels into a ground-state manifold (the lowest `ground_levels`)
/// and an excited-state manifold (the rest).
struct MoleculeModel {
  std::string name;
  std::vector<double> energies;     ///< cm^-1, nondecreasing
  std::vector<std::string> labels;  ///< empty, or one per level
  Eigen::MatrixXd dipole;           ///< atomic units, symmetric m x m
  int ground_levels = 1;            ///< m_g

  int levels() const { return static_cast<int>(energies.size()); }
};

struct CavityMode {
  double photon_energy = 0.0;  ///< cm^-1
  int max_photons = 1;         ///< Fock-space truncation
  double coupling = 0.0;       ///< g, cm^-1 per atomic unit of dipole
};

enum class Statistics { None, Boson, Fermion };
enum class Manifold { Full, FirstExcited };

std::string_view to_string(Statistics s);
std::string_view to_string(Manifold m);
std::optional<Statistics> parse_statistics(std::string_view text);
std::optional<Manifold> parse_manifold(std::string_view text);

struct EnsembleSpec {
  MoleculeModel molecule;
  int molecules = 1;
  CavityMode cavity;
  Statistics statistics = Statistics::None;
  Manifold manifold = Manifold::Full;
};

/// Returns one message per violated invariant; empty when the model is valid.
std::vector<std::string> validate(const MoleculeModel& model);
std::vector<std::string> validate(const CavityMode& cavity);

/// Throws ValidationError carrying every violation when the model is invalid.
void require_valid(const MoleculeModel& model);
void require_valid(const CavityMode& cavity);

/// Parses the JSON model schema:
///   {"name": str, "m_g": int, "levels": [{"energy_cm1": num, "label": str}],
///    "dipole_au": [[num, ...], ...]}
/// Throws ParseError on malformed text or schema mismatch, ValidationError when
/// the parsed model breaks an invariant.
MoleculeModel parse_model(std::string_view json_text);
MoleculeModel load_model(const std::filesystem::path& path);

std::string model_to_json(const MoleculeModel& model);
void save_model(const MoleculeModel& model, const std::filesystem::path& path);

/// Placeholder model with evenly spaced levels inside each manifold: ground
/// levels at k * spacing, excited levels at excitation + (k - m_g) * spacing.
/// Every ground/excited pair has a unit transition dipole; intra-manifold and
/// permanent dipoles are zero.
MoleculeModel synthetic_model(int levels, int ground_levels, double excitation_cm1,
                              double spacing_cm1 = 10.0);

}  // namespace polariton
