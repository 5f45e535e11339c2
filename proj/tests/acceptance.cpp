// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polariton/cli.hpp"
#include "polariton/hamiltonian.hpp"
#include "polariton/observables.hpp"
#include "polariton/symmetry.hpp"
#include "polariton/thermo.hpp"
#include "table1_values.hpp"
#include "test_support.hpp"

using namespace polariton;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += why;
    pass = false;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string plain(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SpectrumResult spectrum_of(const EnsembleSpec& spec, const BasisSetPtr& basis,
                           const SubspaceBasis& sub, const HamiltonianOptions& opts = {}) {
  return diagonalize(restrict_to(build_hamiltonian(spec, basis, opts), sub), sub);
}

// 1. Table-1 counts and traces, end to end through the CLI, under 10 s.
Verdict table1_exactness() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const std::vector<std::string> args{"table1", "--check"};
  const int code = cli::run(args, out, err);
  if (code != cli::kSuccess) v.fail("table1 --check exit " + std::to_string(code));

  int mismatches = 0;
  for (const auto& row : paper_table::kRows) {
    const auto r = cli::count_row(row.m, row.m_g, row.n, Manifold::FirstExcited);
    const std::array<std::uint64_t, 3> states{r.states_of(Statistics::None),
                                              r.states_of(Statistics::Boson),
                                              r.states_of(Statistics::Fermion)};
    const std::array<double, 3> traces{r.bright_of(Statistics::None),
                                       r.bright_of(Statistics::Boson),
                                       r.bright_of(Statistics::Fermion)};
    const std::array<int, 3> want_states{row.none, row.boson, row.fermion};
    const std::array<int, 3> want_traces{row.tr_none, row.tr_boson, row.tr_fermion};
    for (int k = 0; k < 3; ++k) {
      if (states[k] != static_cast<std::uint64_t>(want_states[k]) ||
          std::llround(traces[k]) != want_traces[k] ||
          std::abs(traces[k] - want_traces[k]) > 1e-9) {
        ++mismatches;
      }
    }
  }
  if (mismatches) v.fail(std::to_string(mismatches) + " count/trace mismatches");
  const double t = seconds_since(start);
  if (t >= 10.0) v.fail("runtime " + sci(t) + " s >= 10 s");
  v.note(std::to_string(paper_table::kRows.size()) + " rows x 6 integers exact");
  return v;
}

// 2. m=10, n=3, n_max=1: 2000 -> 440 boson / 240 fermion on both paths, under 30 s.
Verdict demo_dimensions() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto basis = enumerate_full(10, 3, 1);
  if (basis->size() != 2000) v.fail("full basis size " + std::to_string(basis->size()));
  double worst = 0.0;
  for (auto [s, want] : {std::pair{Statistics::Boson, std::size_t{440}},
                         std::pair{Statistics::Fermion, std::size_t{240}}}) {
    const auto a = project_reference(basis, s);
    const auto b = project_orbit(basis, s);
    if (a.dim() != want || b.dim() != want) {
      v.fail(std::string(to_string(s)) + " dims " + std::to_string(a.dim()) + "/" +
             std::to_string(b.dim()) + ", expected " + std::to_string(want));
    }
    worst = std::max(worst, oracle::max_principal_sine(a.dense(), b.dense()));
  }
  if (!(worst < 1e-8)) v.fail("reference/orbit principal sine " + sci(worst));
  const double t = seconds_since(start);
  if (t >= 30.0) v.fail("runtime " + sci(t) + " s >= 30 s");
  v.note("2000 -> 440/240 on both paths, max sine " + sci(worst));
  return v;
}

// 3. Orbit construction spans the same subspace as the group-sum projector.
Verdict oracle_equivalence() {
  Verdict v;
  double worst = 0.0;
  int cases = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<BasisSetPtr> bases{enumerate_full(m, n, 1)};
      for (int mg = 1; mg < m; ++mg) bases.push_back(enumerate_first_excited(m, mg, n));
      for (const auto& basis : bases) {
        for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
          const auto a = project_reference(basis, s);
          const auto b = project_orbit(basis, s);
          ++cases;
          if (a.dim() != b.dim()) {
            v.fail("dim mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
            continue;
          }
          const double sine = std::max(oracle::max_principal_sine(a.dense(), b.dense()),
                                       oracle::max_principal_sine(b.dense(), a.dense()));
          worst = std::max(worst, sine);
        }
      }
    }
  }
  if (!(worst < 1e-8)) v.fail("max principal sine " + sci(worst));
  v.note(std::to_string(cases) + " cases, max principal sine " + sci(worst));
  return v;
}

// 4. Resonant two-level RWA polaritons in the first manifold.
Verdict analytic_polaritons() {
  Verdict v;
  const double nu = 1681.0, g = 49.0;
  double worst_split = 0.0, worst_dark = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto spec = testing_support::ensemble(testing_support::two_level(nu), n, nu, g, 1,
                                                Manifold::FirstExcited);
    const auto basis = enumerate_first_excited(2, 1, n);
    const auto sub = project_orbit(basis, Statistics::None);
    const auto s = spectrum_of(spec, basis, sub, {true, false});
    const double want = 2.0 * g * std::sqrt(static_cast<double>(n));
    const double split = s.energies.back() - s.energies.front();
    worst_split = std::max(worst_split, std::abs(split - want) / want);
    int dark = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double offset = std::abs(s.energies[k] - nu);
      if (offset < 1e-8) {
        ++dark;
        worst_dark = std::max(worst_dark, offset);
      }
    }
    if (dark != n - 1) {
      v.fail("n=" + std::to_string(n) + ": " + std::to_string(dark) + " dark states");
    }
  }
  if (!(worst_split < 1e-10)) v.fail("splitting relative error " + sci(worst_split));

  const auto spec = testing_support::ensemble(testing_support::two_level(nu), 2, nu, g, 1,
                                              Manifold::FirstExcited);
  const auto basis = enumerate_first_excited(2, 1, 2);
  const auto fermion = project_orbit(basis, Statistics::Fermion);
  const auto s = spectrum_of(spec, basis, fermion, {true, false});
  const Eigen::VectorXd psi = fermion.dense() * s.vectors;
  Eigen::VectorXd dark = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  dark(static_cast<Eigen::Index>(basis->index(BasisState{0, {0, 1}}))) = 1.0 / std::sqrt(2.0);
  dark(static_cast<Eigen::Index>(basis->index(BasisState{0, {1, 0}}))) = -1.0 / std::sqrt(2.0);
  if (fermion.dim() != 1 || std::abs(s.energies[0] - nu) > 1e-10 ||
      s.photon_expectations[0] > 1e-12 || std::abs(std::abs(psi.dot(dark)) - 1.0) > 1e-12) {
    v.fail("n=2 fermion sector is not the single dark state");
  }
  v.note("splitting rel err " + sci(worst_split) + " (n=1..4), n-1 dark states, n=2 fermion = dark");
  return v;
}

// 5. Sector eigenvalues inside the unprojected spectrum, m=3, n=3.
Verdict spectral_containment() {
  Verdict v;
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    auto model = synthetic_model(3, 1, 1500.0, 60.0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j <= i; ++j) model.dipole(i, j) = model.dipole(j, i) = unit(rng);
    }
    const auto spec = testing_support::ensemble(model, 3, 1500.0, 300.0, 1, Manifold::Full);
    const auto basis = enumerate_full(3, 3, 1);
    const HamiltonianOptions opts{false, true};
    const auto none = spectrum_of(spec, basis, project_orbit(basis, Statistics::None), opts);
    for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
      const auto sector = spectrum_of(spec, basis, project_orbit(basis, st), opts);
      for (double e : sector.energies) {
        double nearest = INFINITY;
        for (double f : none.energies) nearest = std::min(nearest, std::abs(e - f));
        worst = std::max(worst, nearest);
      }
    }
  }
  if (!(worst < 1e-8)) v.fail("max distance " + sci(worst) + " cm-1");
  v.note("5 random dipole matrices, max distance " + sci(worst) + " cm-1");
  return v;
}

// 6. Sector ordering and thermodynamics on the shipped demo model.
Verdict demo_properties() {
  Verdict v;
  EnsembleSpec spec;
  spec.molecule = load_model(testing_support::data_path("h2o_demo_10level.json"));
  spec.molecules = 3;
  spec.cavity = CavityMode{1681.0, 1, 490.0};
  spec.manifold = Manifold::Full;

  auto grid = temperature_grid(1.0, 50.0, 1.0);
  grid.push_back(298.15);
  const std::vector<Statistics> sectors{Statistics::Boson, Statistics::Fermion};
  const auto result = sector_thermo_compare(spec, grid, sectors);
  const auto& none = result[0];
  const auto& boson = result[1];
  const auto& fermion = result[2];

  if (std::abs(boson.ground_energy - none.ground_energy) > 1e-8) {
    v.fail("E0(boson) - E0(none) = " + sci(boson.ground_energy - none.ground_energy));
  }
  if (!(fermion.ground_energy > none.ground_energy + 1e-8)) {
    v.fail("E0(fermion) not above E0(none)");
  }
  int violations = 0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (boson.absolute.c[i] > none.absolute.c[i] + 1e-12) ++violations;
    if (fermion.absolute.c[i] > none.absolute.c[i] + 1e-12) ++violations;
  }
  if (violations) v.fail(std::to_string(violations) + " C ordering violations at T <= 50 K");
  const double dg = fermion.absolute.g.back() - none.absolute.g.back();
  if (!(dg > 0.0)) v.fail("G(fermion) - G(none) at 298.15 K = " + sci(dg));
  v.note("dims " + std::to_string(none.dimension) + "/" + std::to_string(boson.dimension) +
         "/" + std::to_string(fermion.dimension) + ", E0(f)-E0(n) " +
         sci(fermion.zero_point_shift) + " cm-1, dG(298.15 K) " + sci(dg) + " kJ/mol");
  return v;
}

// 7. Heat capacity vs dU/dT, entropy monotonicity, shift invariance.
Verdict thermo_consistency() {
  Verdict v;
  EnsembleSpec spec;
  spec.molecule = load_model(testing_support::data_path("h2o_demo_10level.json"));
  spec.molecules = 3;
  spec.cavity = CavityMode{1681.0, 1, 490.0};
  spec.manifold = Manifold::Full;
  const std::vector<Statistics> all{Statistics::None, Statistics::Boson, Statistics::Fermion};
  const auto results = run_sectors(spec, all);

  const auto grid = temperature_grid(1.0, 1000.0, 1.0);
  const double dt = 0.01;
  double worst_fd = 0.0, worst_fd_t = 0.0, worst_shift = 0.0;
  double holds_from = grid.front();  // lowest T above which every point is within 1e-5
  int s_drops = 0;
  for (const auto& r : results) {
    const auto& e = r.spectrum.energies;
    const auto table = thermo_table(e, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const std::vector<double> pair{grid[i] - dt, grid[i] + dt};
      const auto side = thermo_table(e, pair);
      const double fd = (side.u[1] - side.u[0]) * 1000.0 / (2.0 * dt);
      const double c = table.c[i];
      const double rel = std::abs(fd - c) / std::max(std::abs(c), 1e-300);
      if (c > 0.0 && rel > worst_fd) {
        worst_fd = rel;
        worst_fd_t = grid[i];
      }
      if (c > 0.0 && rel >= 1e-5) holds_from = std::max(holds_from, grid[i] + 1.0);
      if (i > 0 && table.s[i] < table.s[i - 1]) ++s_drops;
    }
    std::vector<double> shifted = e;
    for (auto& x : shifted) x += 4321.123;
    const auto moved = thermo_table(shifted, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (auto [a, b] : {std::pair{table.q[i], moved.q[i]}, {table.u[i], moved.u[i]},
                          {table.c[i], moved.c[i]}, {table.s[i], moved.s[i]},
                          {table.g[i], moved.g[i]}}) {
        worst_shift = std::max(worst_shift, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    }
  }
  // No tolerance relief at low T: the central difference's own truncation
  // error, ~(dT E_gap / k T^2)^2 / 6, is what exceeds 1e-5 there.
  if (!(worst_fd < 1e-5)) {
    v.fail("C vs central dU/dT (dT=0.01 K) relative error " + sci(worst_fd) + " at T=" +
           plain(worst_fd_t) + " K, within 1e-5 only for T >= " + plain(holds_from) + " K");
  }
  if (s_drops) v.fail(std::to_string(s_drops) + " entropy decreases");
  if (!(worst_shift < 1e-10)) v.fail("shift invariance error " + sci(worst_shift));
  v.note("demo sectors on 1..1000 K: C vs dU/dT " + sci(worst_fd) + ", S nondecreasing, shift " +
         sci(worst_shift));
  return v;
}

// 8. P^2 = P and P_boson P_fermion = 0 for the group-sum projector.
Verdict projector_algebra() {
  Verdict v;
  double worst_idem = 0.0, worst_cross = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto basis = enumerate_full(3, n, 1);
    const auto group = enumerate_group(n);
    const auto d = static_cast<Eigen::Index>(basis->size());
    auto dense = [&](Statistics s) {
      Eigen::MatrixXd p(d, d);
      for (Eigen::Index k = 0; k < d; ++k) {
        p.col(k) = apply_projector(*basis, group, s, Eigen::VectorXd::Unit(d, k));
      }
      return p;
    };
    const Eigen::MatrixXd pb = dense(Statistics::Boson);
    const Eigen::MatrixXd pf = dense(Statistics::Fermion);
    worst_idem = std::max({worst_idem, (pb * pb - pb).cwiseAbs().maxCoeff(),
                           (pf * pf - pf).cwiseAbs().maxCoeff()});
    // S_1 is trivial: both projectors are the identity there.
    if (n >= 2) {
      worst_cross = std::max({worst_cross, (pb * pf).cwiseAbs().maxCoeff(),
                              (pf * pb).cwiseAbs().maxCoeff()});
    }
  }
  if (!(worst_idem < 1e-12)) v.fail("idempotence error " + sci(worst_idem));
  if (!(worst_cross < 1e-12)) v.fail("boson-fermion product " + sci(worst_cross));
  v.note("m=3: |P^2-P| " + sci(worst_idem) + " (n=1..4), |PbPf| " + sci(worst_cross) +
         " (n=2..4)");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 table1 exactness", table1_exactness},
      {"2 m=10 n=3 full-space dimensions", demo_dimensions},
      {"3 orbit/reference equivalence", oracle_equivalence},
      {"4 analytic polariton checks", analytic_polaritons},
      {"5 spectral containment", spectral_containment},
      {"6 demo model sector properties", demo_properties},
      {"7 thermo self-consistency", thermo_consistency},
      {"8 projector algebra", projector_algebra},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::printf("%s  %-34s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), t,
                v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
