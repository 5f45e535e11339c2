#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polariton/model.hpp"
#include "polariton/statespace.hpp"

namespace polariton {

/// Element of S_n. Acting on a state, molecule i's level moves to slot mapping[i].
struct Permutation {
  std::vector<int> mapping;
  int parity = 1;

  BasisState apply(const BasisState& state) const;
};

inline constexpr int kMaxGroupDegree = 8;

/// Parity from the cycle decomposition: (-1)^(n - #cycles).
int permutation_parity(std::span<const int> mapping);

/// All n! elements of S_n in lexicographic order of `mapping` (identity first).
/// Throws ComputeCapError for n > kMaxGroupDegree.
std::vector<Permutation> enumerate_group(int molecules);

/// Character of a one-dimensional irrep: 1 for bosons, the parity for fermions.
int character(Statistics statistics, const Permutation& p);

struct SparseEntry {
  std::size_t index;
  double value;
};
/// Entries sorted by basis index.
using SparseColumn = std::vector<SparseEntry>;

/// Orthonormal symmetry-adapted basis of a sector, as sparse columns over the
/// direct-product basis it was projected from.
struct SubspaceBasis {
  BasisSetPtr source;
  Statistics statistics = Statistics::None;
  std::vector<SparseColumn> columns;

  std::size_t dim() const { return columns.size(); }
  /// Dense D x dim representation.
  Eigen::MatrixXd dense() const;
};

struct ProjectionLimits {
  /// Upper bound on n! * D for the group-sum path.
  std::uint64_t max_group_work = 500'000'000;
  /// Residual norm below which a projected vector is treated as dependent.
  double rank_tolerance = 1e-10;
};

/// Applies (1/h) sum_R chi(R) R to a vector over `basis`. Statistics::None is
/// the identity.
Eigen::VectorXd apply_projector(const BasisSet& basis, std::span<const Permutation> group,
                                Statistics statistics, const Eigen::VectorXd& vector);

/// Group-sum projection of every basis vector followed by Gram-Schmidt rank
/// extraction. Columns appear in the order their seed basis vectors occur.
SubspaceBasis project_reference(BasisSetPtr basis, Statistics statistics,
                                const ProjectionLimits& limits = {});

/// Orbit construction: one boson column per occupation multiset, one fermion
/// column per set of distinct levels. Columns ordered by
/// (photon number, sorted occupation tuple).
SubspaceBasis project_orbit(BasisSetPtr basis, Statistics statistics);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Closed-form sector dimension of the first-excited manifold.
std::uint64_t count_first_excited(int levels, int ground_levels, int molecules,
                                  Statistics statistics);
/// Closed-form sector dimension of the full space with photons 0..max_photons.
std::uint64_t count_full(int levels, int molecules, int max_photons, Statistics statistics);

}  // namespace polariton
