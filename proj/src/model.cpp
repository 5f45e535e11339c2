#include "polariton/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polariton/errors.hpp"

namespace polariton {

using json = nlohmann::json;

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::None: return "none";
    case Statistics::Boson: return "boson";
    case Statistics::Fermion: return "fermion";
  }
  return "unknown";
}

std::string_view to_string(Manifold m) {
  return m == Manifold::Full ? "full" : "first-excited";
}

std::optional<Statistics> parse_statistics(std::string_view text) {
  if (text == "none") return Statistics::None;
  if (text == "boson") return Statistics::Boson;
  if (text == "fermion") return Statistics::Fermion;
  return std::nullopt;
}

std::optional<Manifold> parse_manifold(std::string_view text) {
  if (text == "full") return Manifold::Full;
  if (text == "first-excited") return Manifold::FirstExcited;
  return std::nullopt;
}

std::vector<std::string> validate(const MoleculeModel& model) {
  std::vector<std::string> out;
  const int m = model.levels();
  if (m < 2) out.emplace_back("levels: m must be >= 2");
  if (model.ground_levels < 1) out.emplace_back("m_g must be >= 1");
  if (model.ground_levels >= m) out.emplace_back("m_g must be < m");

  for (int i = 0; i < m; ++i) {
    if (!std::isfinite(model.energies[i])) {
      out.push_back("energies[" + std::to_string(i) + "] is not finite");
    }
  }
  for (int i = 1; i < m; ++i) {
    if (model.energies[i] < model.energies[i - 1]) {
      out.emplace_back("energies not nondecreasing");
      break;
    }
  }
  if (!model.labels.empty() && static_cast<int>(model.labels.size()) != m) {
    out.emplace_back("labels: count does not match number of levels");
  }

  if (model.dipole.rows() != m || model.dipole.cols() != m) {
    out.push_back("dipole_au: expected " + std::to_string(m) + "x" + std::to_string(m) +
                  " matrix");
    return out;
  }
  if (!model.dipole.allFinite()) out.emplace_back("dipole_au has non-finite entries");
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double a = model.dipole(i, j);
      const double b = model.dipole(j, i);
      if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
        out.push_back("dipole_au not symmetric at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
        return out;
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const CavityMode& cavity) {
  std::vector<std::string> out;
  if (!(cavity.photon_energy > 0.0)) out.emplace_back("photon_energy must be > 0");
  if (cavity.max_photons < 1) out.emplace_back("n_max must be >= 1");
  if (!(cavity.coupling >= 0.0)) out.emplace_back("coupling_g must be >= 0");
  return out;
}

namespace {

template <typename T>
void throw_if_invalid(const T& value) {
  auto problems = validate(value);
  if (problems.empty()) return;
  std::string msg = problems.front();
  for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
  throw ValidationError(msg);
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + ": expected a number");
  return value.get<double>();
}

}  // namespace

void require_valid(const MoleculeModel& model) { throw_if_invalid(model); }
void require_valid(const CavityMode& cavity) { throw_if_invalid(cavity); }

MoleculeModel parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model file: top level must be an object");

  MoleculeModel model;
  const json& name = field(doc, "name");
  if (!name.is_string()) throw ParseError("name: expected a string");
  model.name = name.get<std::string>();

  const json& mg = field(doc, "m_g");
  if (!mg.is_number_integer()) throw ParseError("m_g: expected an integer");
  model.ground_levels = mg.get<int>();

  const json& levels = field(doc, "levels");
  if (!levels.is_array()) throw ParseError("levels: expected an array");
  bool any_label = false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    const json& level = levels[i];
    if (!level.is_object()) throw ParseError(where + ": expected an object");
    auto e = level.find("energy_cm1");
    if (e == level.end()) throw ParseError(where + ": missing field 'energy_cm1'");
    model.energies.push_back(number(*e, where + ".energy_cm1"));
    auto label = level.find("label");
    if (label != level.end()) {
      if (!label->is_string()) throw ParseError(where + ".label: expected a string");
      any_label = true;
      model.labels.push_back(label->get<std::string>());
    } else {
      model.labels.emplace_back();
    }
  }
  if (!any_label) model.labels.clear();

  const json& dipole = field(doc, "dipole_au");
  if (!dipole.is_array()) throw ParseError("dipole_au: expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(dipole.size());
  const Eigen::Index cols = rows > 0 && dipole[0].is_array()
                                ? static_cast<Eigen::Index>(dipole[0].size())
                                : 0;
  model.dipole.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = dipole[static_cast<std::size_t>(i)];
    const std::string where = "dipole_au[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(where + ": rows must be arrays of equal length");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      model.dipole(i, j) =
          number(row[static_cast<std::size_t>(j)], where + "[" + std::to_string(j) + "]");
    }
  }

  require_valid(model);
  return model;
}

MoleculeModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string model_to_json(const MoleculeModel& model) {
  json doc;
  doc["name"] = model.name;
  doc["m_g"] = model.ground_levels;
  json levels = json::array();
  for (int i = 0; i < model.levels(); ++i) {
    json level;
    level["energy_cm1"] = model.energies[i];
    level["label"] = model.labels.empty() ? std::string() : model.labels[i];
    levels.push_back(std::move(level));
  }
  doc["levels"] = std::move(levels);
  json dipole = json::array();
  for (Eigen::Index i = 0; i < model.dipole.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < model.dipole.cols(); ++j) row.push_back(model.dipole(i, j));
    dipole.push_back(std::move(row));
  }
  doc["dipole_au"] = std::move(dipole);
  // nlohmann emits the shortest digit string that round-trips each double.
  return doc.dump(2) + "\n";
}

void save_model(const MoleculeModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << model_to_json(model);
}

MoleculeModel synthetic_model(int levels, int ground_levels, double excitation_cm1,
                              double spacing_cm1) {
  MoleculeModel model;
  model.name = "synthetic " + std::to_string(levels) + "-level (m_g=" +
               std::to_string(ground_levels) + ")";
  model.ground_levels = ground_levels;
  model.energies.resize(static_cast<std::size_t>(std::max(levels, 0)));
  for (int k = 0; k < levels; ++k) {
    model.energies[k] = k < ground_levels ? k * spacing_cm1
                                          : excitation_cm1 + (k - ground_levels) * spacing_cm1;
  }
  model.dipole = Eigen::MatrixXd::Zero(levels, levels);
  for (int a = 0; a < ground_levels && a < levels; ++a) {
    for (int b = ground_levels; b < levels; ++b) {
      model.dipole(a, b) = 1.0;
      model.dipole(b, a) = 1.0;
    }
  }
  require_valid(model);
  return model;
}

}  // namespace polariton
