#include "polariton/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polariton/errors.hpp"
#include "polariton/hamiltonian.hpp"
#include "polariton/observables.hpp"
#include "polariton/symmetry.hpp"
#include "polariton/thermo.hpp"

namespace polariton::cli {

namespace {

constexpr std::array<Statistics, 3> kAllSectors{Statistics::None, Statistics::Boson,
                                                Statistics::Fermion};

std::string name_of(Statistics s) { return std::string(to_string(s)); }

std::string with_percent(std::uint64_t value, std::uint64_t whole) {
  return std::to_string(value) + " (" + std::to_string(round_percent(value, whole)) + "%)";
}

std::uint64_t bright_count(double trace) { return static_cast<std::uint64_t>(std::llround(trace)); }

double percent(double part, double whole) { return whole == 0.0 ? 0.0 : 100.0 * part / whole; }

}  // namespace

CountRow count_row(int levels, int ground_levels, int molecules, Manifold manifold,
                   int max_photons) {
  CountRow row;
  row.levels = levels;
  row.ground_levels = ground_levels;
  row.molecules = molecules;
  row.manifold = manifold;
  row.max_photons = manifold == Manifold::FirstExcited ? 1 : max_photons;
  const BasisSetPtr basis = manifold == Manifold::FirstExcited
                                ? enumerate_first_excited(levels, ground_levels, molecules)
                                : enumerate_full(levels, molecules, max_photons);
  for (Statistics s : kAllSectors) {
    const auto subspace = project_orbit(basis, s);
    const auto report = brightness(subspace);
    row.states[static_cast<int>(s)] = report.dim;
    row.bright[static_cast<int>(s)] = report.trace;
  }
  return row;
}

std::string format_count_header(std::span<const Statistics> sectors) {
  std::vector<std::string> cells;
  for (Statistics s : sectors) cells.push_back(s == Statistics::None ? "no Pauli" : name_of(s));
  for (Statistics s : sectors) {
    cells.push_back("Tr " + (s == Statistics::None ? std::string("no Pauli") : name_of(s)));
  }
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? " | " : "") + cells[i];
  return line;
}

std::string format_count_row(const CountRow& row, std::span<const Statistics> sectors) {
  const std::uint64_t total = row.states_of(Statistics::None);
  std::vector<std::string> cells;
  for (Statistics s : sectors) {
    cells.push_back(s == Statistics::None ? std::to_string(total)
                                          : with_percent(row.states_of(s), total));
  }
  for (Statistics s : sectors) {
    const std::uint64_t bright = bright_count(row.bright_of(s));
    cells.push_back(s == Statistics::None ? std::to_string(bright)
                                          : with_percent(bright, row.states_of(s)));
  }
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? " | " : "") + cells[i];
  return line;
}

CsvTable count_csv(std::span<const CountRow> rows, std::span<const Statistics> sectors) {
  CsvTable table;
  table.header = {"m", "m_g", "n", "manifold", "n_max"};
  for (Statistics s : sectors) {
    table.header.push_back("states_" + name_of(s));
    if (s != Statistics::None) table.header.push_back("pct_states_" + name_of(s));
  }
  for (Statistics s : sectors) {
    table.header.push_back("bright_" + name_of(s));
    table.header.push_back("pct_bright_" + name_of(s));
  }
  for (const auto& row : rows) {
    const auto total = static_cast<double>(row.states_of(Statistics::None));
    std::vector<std::string> cells{std::to_string(row.levels), std::to_string(row.ground_levels),
                                   std::to_string(row.molecules),
                                   std::string(to_string(row.manifold)),
                                   std::to_string(row.max_photons)};
    for (Statistics s : sectors) {
      cells.push_back(std::to_string(row.states_of(s)));
      if (s != Statistics::None) {
        cells.push_back(format_number(percent(static_cast<double>(row.states_of(s)), total)));
      }
    }
    for (Statistics s : sectors) {
      cells.push_back(format_number(row.bright_of(s)));
      cells.push_back(
          format_number(percent(row.bright_of(s), static_cast<double>(row.states_of(s)))));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::vector<std::array<int, 3>> table1_configurations() {
  std::vector<std::array<int, 3>> configs;
  auto add = [&](int m, int mg) {
    for (int n = 2; n <= 4; ++n) configs.push_back({m, mg, n});
  };
  add(2, 1);
  for (int mg : {1, 2, 3, 4}) add(5, mg);
  for (int mg : {1, 3, 5, 7}) add(10, mg);
  return configs;
}

CsvTable table1_csv(std::span<const Statistics> sectors) {
  CsvTable table;
  table.header = {"m", "m_g", "n"};
  for (Statistics s : sectors) {
    table.header.push_back("states_" + name_of(s));
    if (s != Statistics::None) table.header.push_back("pct_states_" + name_of(s));
  }
  for (Statistics s : sectors) {
    table.header.push_back("bright_" + name_of(s));
    if (s != Statistics::None) table.header.push_back("pct_bright_" + name_of(s));
  }
  for (const auto& [m, mg, n] : table1_configurations()) {
    const CountRow row = count_row(m, mg, n, Manifold::FirstExcited);
    const std::uint64_t total = row.states_of(Statistics::None);
    std::vector<std::string> cells{std::to_string(m), std::to_string(mg), std::to_string(n)};
    for (Statistics s : sectors) {
      cells.push_back(std::to_string(row.states_of(s)));
      if (s != Statistics::None) {
        cells.push_back(std::to_string(round_percent(row.states_of(s), total)));
      }
    }
    for (Statistics s : sectors) {
      const std::uint64_t bright = bright_count(row.bright_of(s));
      cells.push_back(std::to_string(bright));
      if (s != Statistics::None) {
        cells.push_back(std::to_string(round_percent(bright, row.states_of(s))));
      }
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string default_table1_fixture() { return std::string(POLARITON_DATA_DIR) + "/table1.csv"; }

namespace {

struct RunConfig {
  std::string model_path;
  std::optional<int> levels;
  std::optional<int> ground;
  int molecules = 0;
  std::string manifold;
  std::vector<std::string> stats{"all"};
  double cavity_wn = 1681.0;
  double coupling = 490.0;
  int nmax = 1;
  bool rwa = false;
  bool permanent_dipoles = false;
  double spacing = 10.0;
  double tmin = 1.0;
  double tmax = 1000.0;
  double tstep = 1.0;
  std::string out;
  bool check = false;
  std::string fixture;
  bool absolute = false;
  bool zero_point = false;
  double dark_below = 0.1;
  double photonic_above = 0.9;
};

void add_stats_option(CLI::App* app, RunConfig& cfg) {
  app->add_option("--stats", cfg.stats, "Sectors: none, boson, fermion, all (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"none", "boson", "fermion", "all"}));
}

void add_model_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--model", cfg.model_path, "Molecule model file (JSON)");
  app->add_option("--levels", cfg.levels, "Synthetic model: number of levels m");
  app->add_option("--ground", cfg.ground, "Synthetic model: ground-manifold levels m_g");
  app->add_option("--molecules", cfg.molecules, "Number of molecules n")->required();
}

void add_cavity_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--cavity-wn", cfg.cavity_wn, "Photon energy, cm^-1")->capture_default_str();
  app->add_option("--coupling", cfg.coupling, "Coupling strength g, cm^-1")->capture_default_str();
  app->add_option("--nmax", cfg.nmax, "Photon-number cutoff (full manifold)")->capture_default_str();
  app->add_flag("--rwa", cfg.rwa, "Rotating-wave approximation");
  app->add_flag("--permanent-dipoles", cfg.permanent_dipoles,
                "Keep diagonal dipole elements in the coupling");
  app->add_option("--spacing", cfg.spacing, "Synthetic model: level spacing within a manifold")
      ->capture_default_str();
}

std::vector<Statistics> resolve_sectors(const std::vector<std::string>& names) {
  std::vector<Statistics> out;
  for (Statistics s : kAllSectors) {
    const bool wanted = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
      return n == "all" || parse_statistics(n) == s;
    });
    if (wanted) out.push_back(s);
  }
  return out;
}

Manifold resolve_manifold(const RunConfig& cfg, Manifold fallback) {
  if (cfg.manifold.empty()) return fallback;
  auto m = parse_manifold(cfg.manifold);
  if (!m) throw ValidationError("--manifold must be first-excited or full");
  return *m;
}

MoleculeModel resolve_model(const RunConfig& cfg) {
  const bool synthetic = cfg.levels || cfg.ground;
  if (synthetic && !cfg.model_path.empty()) {
    throw ValidationError("--model cannot be combined with --levels/--ground");
  }
  if (!cfg.model_path.empty()) return load_model(cfg.model_path);
  if (!cfg.levels || !cfg.ground) {
    throw ValidationError("either --model or both --levels and --ground are required");
  }
  return synthetic_model(*cfg.levels, *cfg.ground, cfg.cavity_wn, cfg.spacing);
}

EnsembleSpec resolve_spec(const RunConfig& cfg, Manifold manifold) {
  if (cfg.molecules < 1) throw ValidationError("--molecules must be >= 1");
  EnsembleSpec spec;
  spec.molecule = resolve_model(cfg);
  spec.molecules = cfg.molecules;
  spec.cavity = CavityMode{cfg.cavity_wn, manifold == Manifold::FirstExcited ? 1 : cfg.nmax,
                           cfg.coupling};
  spec.manifold = manifold;
  require_valid(spec.cavity);
  return spec;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const Manifold manifold = resolve_manifold(cfg, Manifold::FirstExcited);
  int levels = 0, ground = 0;
  if (!cfg.model_path.empty()) {
    if (cfg.levels || cfg.ground) {
      throw ValidationError("--model cannot be combined with --levels/--ground");
    }
    const auto model = load_model(cfg.model_path);
    levels = model.levels();
    ground = model.ground_levels;
  } else {
    if (!cfg.levels || (manifold == Manifold::FirstExcited && !cfg.ground)) {
      throw ValidationError("count needs --model, or --levels (and --ground for first-excited)");
    }
    levels = *cfg.levels;
    ground = cfg.ground.value_or(0);
  }
  if (cfg.molecules < 1) throw ValidationError("--molecules must be >= 1");
  if (manifold == Manifold::Full && cfg.nmax < 0) throw ValidationError("--nmax must be >= 0");

  const auto sectors = resolve_sectors(cfg.stats);
  const CountRow row = count_row(levels, ground, cfg.molecules, manifold, cfg.nmax);
  out << format_count_header(sectors) << '\n' << format_count_row(row, sectors) << '\n';
  if (!cfg.out.empty()) write_file_atomic(cfg.out, count_csv({&row, 1}, sectors).str());
  return kSuccess;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto sectors = resolve_sectors(cfg.stats);
  const CsvTable table = table1_csv(sectors);
  const std::string text = table.str();
  emit(cfg.out, text, out);
  if (!cfg.check) return kSuccess;

  const std::string fixture_path = cfg.fixture.empty() ? default_table1_fixture() : cfg.fixture;
  std::ifstream in(fixture_path, std::ios::binary);
  if (!in) throw ParseError("cannot open fixture " + fixture_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const CsvTable expected = CsvTable::parse(buffer.str()).select(table.header);
  if (expected.str() == text) {
    err << "table1: " << table.rows.size() << " rows match " << fixture_path << '\n';
    return kSuccess;
  }
  auto line = [](const std::vector<std::vector<std::string>>& rows, std::size_t i) {
    if (i >= rows.size()) return std::string("<missing>");
    std::string text;
    for (const auto& cell : rows[i]) text += (text.empty() ? "" : ",") + cell;
    return text;
  };
  for (std::size_t i = 0; i < std::max(expected.rows.size(), table.rows.size()); ++i) {
    const auto want = line(expected.rows, i);
    const auto got = line(table.rows, i);
    if (want != got) err << "row " << i + 1 << ": expected " << want << ", got " << got << '\n';
  }
  err << "table1: output differs from " << fixture_path << '\n';
  return kCheckMismatch;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Manifold manifold = resolve_manifold(cfg, Manifold::Full);
  const EnsembleSpec spec = resolve_spec(cfg, manifold);
  const auto requested = resolve_sectors(cfg.stats);
  std::vector<Statistics> order{Statistics::None};
  for (Statistics s : requested) {
    if (s != Statistics::None) order.push_back(s);
  }
  const auto results = run_sectors(spec, order, {cfg.rwa, cfg.permanent_dipoles});
  const double reference =
      cfg.absolute || results.front().spectrum.energies.empty()
          ? 0.0
          : results.front().spectrum.energies.front();
  const ClassThresholds thresholds{cfg.dark_below, cfg.photonic_above};

  std::ostream& summary = cfg.out.empty() ? err : out;
  CsvTable combined;
  combined.header = {"sector", "index", "energy_cm1", "photon_expectation", "brightness_class"};
  for (Statistics s : requested) {
    const auto& r = *std::find_if(results.begin(), results.end(),
                                  [s](const SectorResult& x) { return x.statistics == s; });
    CsvTable table;
    table.header = combined.header;
    for (std::size_t k = 0; k < r.spectrum.size(); ++k) {
      const double nph = r.spectrum.photon_expectations[k];
      table.rows.push_back({name_of(s), std::to_string(k),
                            format_number(r.spectrum.energies[k] - reference), format_number(nph),
                            std::string(to_string(classify(nph, thresholds)))});
    }
    summary << name_of(s) << ": dim " << r.subspace.dim();
    if (!r.spectrum.energies.empty()) {
      summary << ", E0 " << format_number(r.spectrum.energies.front() - reference) << " cm-1";
    }
    summary << '\n';
    if (cfg.out.empty()) {
      combined.rows.insert(combined.rows.end(), table.rows.begin(), table.rows.end());
    } else {
      write_file_atomic(cfg.out + "_" + name_of(s) + ".csv", table.str());
    }
  }
  if (cfg.out.empty()) out << combined.str();
  return kSuccess;
}

int cmd_thermo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Manifold manifold = resolve_manifold(cfg, Manifold::Full);
  const EnsembleSpec spec = resolve_spec(cfg, manifold);
  const auto requested = resolve_sectors(cfg.stats);
  const auto grid = temperature_grid(cfg.tmin, cfg.tmax, cfg.tstep);
  const auto sectors = sector_thermo_compare(spec, grid, requested,
                                             {cfg.rwa, cfg.permanent_dipoles},
                                             {cfg.zero_point});

  std::vector<const SectorThermo*> shown;
  for (Statistics s : requested) {
    shown.push_back(&*std::find_if(sectors.begin(), sectors.end(),
                                   [s](const SectorThermo& x) { return x.statistics == s; }));
  }

  CsvTable table;
  table.header = {"T_K"};
  for (const auto* st : shown) {
    const std::string s = name_of(st->statistics);
    for (const char* col : {"Q_", "U_kJmol_", "C_JmolK_", "S_JmolK_", "G_kJmol_"}) {
      table.header.push_back(col + s);
    }
  }
  for (const auto* st : shown) {
    const std::string s = name_of(st->statistics);
    for (const char* col : {"dQ_", "dU_kJmol_", "dC_JmolK_", "dS_JmolK_", "dG_kJmol_"}) {
      table.header.push_back(col + s);
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{format_number(grid[i])};
    for (const auto* st : shown) {
      for (const auto* column : {&st->absolute.q, &st->absolute.u, &st->absolute.c,
                                 &st->absolute.s, &st->absolute.g}) {
        row.push_back(format_number((*column)[i]));
      }
    }
    for (const auto* st : shown) {
      for (const auto* column : {&st->relative.q, &st->relative.u, &st->relative.c,
                                 &st->relative.s, &st->relative.g}) {
        row.push_back(format_number((*column)[i]));
      }
    }
    table.rows.push_back(std::move(row));
  }

  std::ostream& summary = cfg.out.empty() ? err : out;
  for (const auto* st : shown) {
    summary << name_of(st->statistics) << ": dim " << st->dimension << ", E0 - E0(none) "
            << format_number(st->zero_point_shift) << " cm-1\n";
  }
  emit(cfg.out, table.str(), out);
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-symmetry sectors of molecules coupled to a cavity mode", "polariton"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* count = app.add_subcommand("count", "Sector sizes and photon-number traces");
  add_model_options(count, cfg);
  add_stats_option(count, cfg);
  count->add_option("--manifold", cfg.manifold, "first-excited (default) or full");
  count->add_option("--nmax", cfg.nmax, "Photon-number cutoff (full manifold)")->capture_default_str();
  count->add_option("--out", cfg.out, "Write a full-precision CSV here");

  auto* table1 = app.add_subcommand("table1", "First-excitation-manifold table for m = 2, 5, 10");
  add_stats_option(table1, cfg);
  table1->add_option("--out", cfg.out, "Write the CSV here instead of stdout");
  table1->add_flag("--check", cfg.check, "Compare against the shipped fixture (exit 4 on mismatch)");
  table1->add_option("--fixture", cfg.fixture, "Fixture used by --check");

  auto* spectrum = app.add_subcommand("spectrum", "Sector-resolved energy levels");
  add_model_options(spectrum, cfg);
  add_cavity_options(spectrum, cfg);
  add_stats_option(spectrum, cfg);
  spectrum->add_option("--manifold", cfg.manifold, "full (default) or first-excited");
  spectrum->add_flag("--absolute", cfg.absolute,
                     "Report absolute energies instead of relative to the no-Pauli minimum");
  spectrum->add_option("--dark-below", cfg.dark_below, "Photon expectation below which a level is dark")
      ->capture_default_str();
  spectrum->add_option("--photonic-above", cfg.photonic_above,
                       "Photon expectation above which a level is photonic")
      ->capture_default_str();
  spectrum->add_option("--out", cfg.out, "Output stem: writes <stem>_<sector>.csv");

  auto* thermo = app.add_subcommand("thermo", "Direct-summation thermodynamics per sector");
  add_model_options(thermo, cfg);
  add_cavity_options(thermo, cfg);
  add_stats_option(thermo, cfg);
  thermo->add_option("--manifold", cfg.manifold, "full (default) or first-excited");
  thermo->add_option("--tmin", cfg.tmin, "Lowest temperature, K")->capture_default_str();
  thermo->add_option("--tmax", cfg.tmax, "Highest temperature, K")->capture_default_str();
  thermo->add_option("--tstep", cfg.tstep, "Temperature step, K")->capture_default_str();
  thermo->add_flag("--zero-point", cfg.zero_point,
                   "Add E0(sector) - E0(none) to U and G");
  thermo->add_option("--out", cfg.out, "Write the CSV here instead of stdout");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (table1->parsed()) return cmd_table1(cfg, out, err);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
    if (thermo->parsed()) return cmd_thermo(cfg, out, err);
  } catch (const ComputeCapError& e) {
    err << "error: " << e.what() << '\n';
    return kComputeCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace polariton::cli
