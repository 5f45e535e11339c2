#include "polariton/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "polariton/errors.hpp"

#ifdef POLARITON_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace polariton {

namespace {

void check_compatible(const EnsembleSpec& spec, const BasisSet& basis) {
  const auto& model = spec.molecule;
  if (basis.levels() != model.levels() || basis.molecules() != spec.molecules) {
    throw ValidationError("build_hamiltonian: basis (m=" + std::to_string(basis.levels()) +
                          ", n=" + std::to_string(basis.molecules()) +
                          ") does not match the model (m=" + std::to_string(model.levels()) +
                          ", n=" + std::to_string(spec.molecules) + ")");
  }
  if (basis.manifold() == Manifold::Full && basis.max_photons() != spec.cavity.max_photons) {
    throw ValidationError("build_hamiltonian: basis photon cutoff does not match n_max");
  }
  if (basis.manifold() == Manifold::FirstExcited &&
      basis.ground_levels() != model.ground_levels) {
    throw ValidationError("build_hamiltonian: basis m_g does not match the model");
  }
}

Eigen::SparseMatrix<double> column_map(const SubspaceBasis& subspace) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t c = 0; c < subspace.columns.size(); ++c) {
    for (const auto& e : subspace.columns[c]) {
      triplets.emplace_back(static_cast<int>(e.index), static_cast<int>(c), e.value);
    }
  }
  Eigen::SparseMatrix<double> b(static_cast<Eigen::Index>(subspace.source->size()),
                                static_cast<Eigen::Index>(subspace.dim()));
  b.setFromTriplets(triplets.begin(), triplets.end());
  return b;
}

// Eigenvalues ascending, eigenvectors in the columns of `vectors`.
void symmetric_eigensystem(const Eigen::MatrixXd& matrix, Eigen::VectorXd& values,
                           Eigen::MatrixXd& vectors) {
#ifdef POLARITON_HAVE_LAPACKE
  vectors = matrix;
  values.resize(matrix.rows());
  const auto n = static_cast<lapack_int>(matrix.rows());
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, vectors.data(), n, values.data());
  if (info != 0) {
    throw std::runtime_error("diagonalize: dsyevd failed with info " + std::to_string(info));
  }
#else
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("diagonalize: eigensolver did not converge");
  }
  values = solver.eigenvalues();
  vectors = solver.eigenvectors();
#endif
}

bool same_basis(const BasisSetPtr& a, const BasisSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const EnsembleSpec& spec, const BasisSetPtr& basis,
                                    const HamiltonianOptions& options) {
  require_valid(spec.molecule);
  require_valid(spec.cavity);
  if (!basis) throw std::invalid_argument("build_hamiltonian: null basis");
  check_compatible(spec, *basis);

  const auto& model = spec.molecule;
  const int m = model.levels();
  const int mg = model.ground_levels;
  const int n = spec.molecules;
  const double nu = spec.cavity.photon_energy;
  const double g = spec.cavity.coupling;
  const auto dim = static_cast<Eigen::Index>(basis->size());

  HamiltonianMatrix h{basis, std::nullopt, Eigen::MatrixXd::Zero(dim, dim)};
  std::vector<int> target(static_cast<std::size_t>(n));

  for (std::size_t a = 0; a < basis->size(); ++a) {
    const auto occ = basis->occupation(a);
    const int photons = basis->photons(a);
    const auto ia = static_cast<Eigen::Index>(a);

    double diagonal = nu * photons;
    for (int level : occ) diagonal += model.energies[level];
    h.entries(ia, ia) = diagonal;
    if (g == 0.0) continue;

    for (int step : {+1, -1}) {
      const int to_photons = photons + step;
      if (to_photons < 0) continue;
      // <N+1|a^dagger|N> = <N|a|N+1> = sqrt(N+1)
      const double ladder = std::sqrt(static_cast<double>(step > 0 ? to_photons : photons));
      for (int i = 0; i < n; ++i) {
        const int from = occ[i];
        for (int to = 0; to < m; ++to) {
          const double d = model.dipole(to, from);
          if (d == 0.0) continue;
          if (to == from && !options.permanent_dipoles) continue;
          if (options.rotating_wave) {
            const int molecular_change = (to >= mg ? 1 : 0) - (from >= mg ? 1 : 0);
            if (molecular_change + step != 0) continue;
          }
          std::copy(occ.begin(), occ.end(), target.begin());
          target[i] = to;
          auto b = basis->find(to_photons, target);
          if (!b) continue;
          h.entries(static_cast<Eigen::Index>(*b), ia) += g * d * ladder;
        }
      }
    }
  }
  return h;
}

HamiltonianMatrix restrict_to(const HamiltonianMatrix& h, const SubspaceBasis& subspace) {
  if (!same_basis(h.basis, subspace.source) ||
      h.dim() != static_cast<Eigen::Index>(subspace.source->size())) {
    throw std::invalid_argument("restrict: subspace was projected from a different basis");
  }
  if (h.sector) throw std::invalid_argument("restrict: Hamiltonian is already restricted");

  HamiltonianMatrix out{h.basis, subspace.statistics, {}};
  if (subspace.statistics == Statistics::None &&
      subspace.dim() == subspace.source->size()) {
    out.entries = h.entries;
    return out;
  }
  const Eigen::SparseMatrix<double> b = column_map(subspace);
  const Eigen::MatrixXd hb = h.entries * b;
  out.entries = b.transpose() * hb;
  // Symmetrize away rounding asymmetry from the two products.
  out.entries = 0.5 * (out.entries + out.entries.transpose()).eval();
  return out;
}

SpectrumResult diagonalize(const HamiltonianMatrix& h, const SubspaceBasis& subspace) {
  if (h.dim() != static_cast<Eigen::Index>(subspace.dim())) {
    throw std::invalid_argument("diagonalize: matrix size does not match the subspace");
  }
  if (!h.entries.allFinite()) throw std::invalid_argument("diagonalize: non-finite entries");

  SpectrumResult result;
  result.statistics = subspace.statistics;
  if (h.dim() == 0) return result;

  Eigen::VectorXd values;
  symmetric_eigensystem(h.entries, values, result.vectors);
  result.energies.assign(values.data(), values.data() + values.size());

  const Eigen::MatrixXd photons = photon_matrix(subspace);
  const Eigen::VectorXd diag = photons.diagonal();
  Eigen::VectorXd expectations;
  if ((photons - Eigen::MatrixXd(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0) {
    expectations = (result.vectors.array().square().colwise() * diag.array()).colwise().sum();
  } else {
    expectations = (photons * result.vectors).cwiseProduct(result.vectors).colwise().sum();
  }
  result.photon_expectations.resize(static_cast<std::size_t>(expectations.size()));
  const double cap = subspace.source->max_photons();
  for (Eigen::Index k = 0; k < expectations.size(); ++k) {
    result.photon_expectations[static_cast<std::size_t>(k)] =
        std::clamp(expectations(k), 0.0, cap);
  }
  return result;
}

std::vector<SectorResult> run_sectors(const EnsembleSpec& spec,
                                      std::span<const Statistics> sectors,
                                      const HamiltonianOptions& options,
                                      std::size_t max_states) {
  require_valid(spec.molecule);
  require_valid(spec.cavity);
  if (spec.molecules < 1) throw ValidationError("n must be >= 1");

  const BasisSetPtr basis =
      spec.manifold == Manifold::Full
          ? enumerate_full(spec.molecule.levels(), spec.molecules, spec.cavity.max_photons,
                           max_states)
          : enumerate_first_excited(spec.molecule.levels(), spec.molecule.ground_levels,
                                    spec.molecules, max_states);
  const HamiltonianMatrix h = build_hamiltonian(spec, basis, options);

  std::vector<std::future<SectorResult>> jobs;
  jobs.reserve(sectors.size());
  for (Statistics s : sectors) {
    jobs.push_back(std::async(std::launch::async, [&h, &basis, s] {
      SectorResult r;
      r.statistics = s;
      r.subspace = project_orbit(basis, s);
      r.spectrum = diagonalize(restrict_to(h, r.subspace), r.subspace);
      return r;
    }));
  }
  std::vector<SectorResult> results;
  results.reserve(jobs.size());
  for (auto& job : jobs) results.push_back(job.get());
  return results;
}

}  // namespace polariton
