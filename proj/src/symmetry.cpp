#include "polariton/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "polariton/errors.hpp"

namespace polariton {

BasisState Permutation::apply(const BasisState& state) const {
  BasisState out{state.photons, std::vector<int>(state.occupation.size())};
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    out.occupation[static_cast<std::size_t>(mapping[i])] = state.occupation[i];
  }
  return out;
}

int permutation_parity(std::span<const int> mapping) {
  const std::size_t n = mapping.size();
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(mapping[i])) {
      seen[i] = true;
    }
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> enumerate_group(int molecules) {
  if (molecules < 1) throw ValidationError("enumerate_group: n must be >= 1");
  if (molecules > kMaxGroupDegree) {
    throw ComputeCapError("enumerate_group: n = " + std::to_string(molecules) +
                          " exceeds the cap of " + std::to_string(kMaxGroupDegree));
  }
  std::vector<int> mapping(static_cast<std::size_t>(molecules));
  std::iota(mapping.begin(), mapping.end(), 0);
  std::vector<Permutation> group;
  do {
    group.push_back(Permutation{mapping, permutation_parity(mapping)});
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return group;
}

int character(Statistics statistics, const Permutation& p) {
  return statistics == Statistics::Fermion ? p.parity : 1;
}

Eigen::MatrixXd SubspaceBasis::dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(source->size()),
                                               static_cast<Eigen::Index>(dim()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& e : columns[c]) {
      out(static_cast<Eigen::Index>(e.index), static_cast<Eigen::Index>(c)) = e.value;
    }
  }
  return out;
}

namespace {

std::size_t permuted_index(const BasisSet& basis, const Permutation& p, std::size_t i,
                           std::vector<int>& scratch) {
  auto occ = basis.occupation(i);
  for (std::size_t k = 0; k < occ.size(); ++k) {
    scratch[static_cast<std::size_t>(p.mapping[k])] = occ[k];
  }
  auto j = basis.find(basis.photons(i), scratch);
  if (!j) throw std::logic_error("basis is not closed under molecule permutations");
  return *j;
}

void check_group(const BasisSet& basis, std::span<const Permutation> group) {
  if (group.empty() || group.front().mapping.size() != static_cast<std::size_t>(basis.molecules())) {
    throw std::invalid_argument("permutation group degree does not match the basis");
  }
}

SubspaceBasis identity_subspace(BasisSetPtr basis) {
  SubspaceBasis out{basis, Statistics::None, {}};
  out.columns.reserve(basis->size());
  for (std::size_t i = 0; i < basis->size(); ++i) out.columns.push_back({{i, 1.0}});
  return out;
}

}  // namespace

Eigen::VectorXd apply_projector(const BasisSet& basis, std::span<const Permutation> group,
                                Statistics statistics, const Eigen::VectorXd& vector) {
  if (vector.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("apply_projector: vector length does not match the basis");
  }
  if (statistics == Statistics::None) return vector;
  check_group(basis, group);

  const double inv_order = 1.0 / static_cast<double>(group.size());
  std::vector<int> scratch(static_cast<std::size_t>(basis.molecules()));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(vector.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double v = vector(static_cast<Eigen::Index>(i));
    if (v == 0.0) continue;
    for (const auto& p : group) {
      out(static_cast<Eigen::Index>(permuted_index(basis, p, i, scratch))) +=
          character(statistics, p) * inv_order * v;
    }
  }
  return out;
}

SubspaceBasis project_reference(BasisSetPtr basis, Statistics statistics,
                                const ProjectionLimits& limits) {
  if (!basis || basis->size() == 0) throw std::invalid_argument("project_reference: empty basis");
  if (statistics == Statistics::None) return identity_subspace(std::move(basis));

  const auto group = enumerate_group(basis->molecules());
  const auto work = static_cast<std::uint64_t>(group.size()) * basis->size();
  if (work > limits.max_group_work) {
    throw ComputeCapError("project_reference: n! * D = " + std::to_string(work) +
                          " exceeds the cap of " + std::to_string(limits.max_group_work));
  }

  const double inv_order = 1.0 / static_cast<double>(group.size());
  std::vector<int> scratch(static_cast<std::size_t>(basis->molecules()));
  SubspaceBasis out{basis, statistics, {}};
  // touching[i]: accepted columns with support on basis index i.
  std::vector<std::vector<std::size_t>> touching(basis->size());
  std::unordered_map<std::size_t, double> residual;
  std::vector<std::size_t> overlap;

  for (std::size_t seed = 0; seed < basis->size(); ++seed) {
    residual.clear();
    for (const auto& p : group) {
      residual[permuted_index(*basis, p, seed, scratch)] += character(statistics, p) * inv_order;
    }

    // Modified Gram-Schmidt against accepted columns sharing support, twice.
    for (int pass = 0; pass < 2; ++pass) {
      overlap.clear();
      for (const auto& [index, value] : residual) {
        overlap.insert(overlap.end(), touching[index].begin(), touching[index].end());
      }
      std::sort(overlap.begin(), overlap.end());
      overlap.erase(std::unique(overlap.begin(), overlap.end()), overlap.end());
      for (std::size_t c : overlap) {
        const auto& column = out.columns[c];
        double dot = 0.0;
        for (const auto& e : column) {
          auto it = residual.find(e.index);
          if (it != residual.end()) dot += e.value * it->second;
        }
        for (const auto& e : column) residual[e.index] -= dot * e.value;
      }
    }

    double norm2 = 0.0;
    for (const auto& [index, value] : residual) norm2 += value * value;
    const double norm = std::sqrt(norm2);
    if (norm <= limits.rank_tolerance) continue;

    SparseColumn column;
    column.reserve(residual.size());
    for (const auto& [index, value] : residual) {
      if (value != 0.0) column.push_back({index, value / norm});
    }
    std::sort(column.begin(), column.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    const std::size_t id = out.columns.size();
    for (const auto& e : column) touching[e.index].push_back(id);
    out.columns.push_back(std::move(column));
  }
  return out;
}

SubspaceBasis project_orbit(BasisSetPtr basis, Statistics statistics) {
  if (!basis || basis->size() == 0) throw std::invalid_argument("project_orbit: empty basis");
  if (statistics == Statistics::None) return identity_subspace(std::move(basis));

  SubspaceBasis out{basis, statistics, {}};
  std::vector<int> arrangement;
  std::vector<std::pair<std::size_t, int>> members;  // (basis index, sign)

  for (std::size_t i = 0; i < basis->size(); ++i) {
    auto occ = basis->occupation(i);
    // Each orbit is visited once, at its sorted representative.
    if (!std::is_sorted(occ.begin(), occ.end())) continue;
    const bool repeated = std::adjacent_find(occ.begin(), occ.end()) != occ.end();
    if (statistics == Statistics::Fermion && repeated) continue;

    members.clear();
    arrangement.assign(occ.begin(), occ.end());
    do {
      int sign = 1;
      if (statistics == Statistics::Fermion) {
        // Distinct entries: parity of the rearrangement is the inversion parity.
        for (std::size_t a = 0; a < arrangement.size(); ++a) {
          for (std::size_t b = a + 1; b < arrangement.size(); ++b) {
            if (arrangement[a] > arrangement[b]) sign = -sign;
          }
        }
      }
      auto j = basis->find(basis->photons(i), arrangement);
      if (!j) throw std::logic_error("basis is not closed under molecule permutations");
      members.emplace_back(*j, sign);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    const double weight = 1.0 / std::sqrt(static_cast<double>(members.size()));
    SparseColumn column;
    column.reserve(members.size());
    for (const auto& [index, sign] : members) column.push_back({index, sign * weight});
    std::sort(column.begin(), column.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    out.columns.push_back(std::move(column));
  }
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; cancel the common factor first.
    const auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(r, den);
    r = (r / g) * (static_cast<std::uint64_t>(n - k + i) / (den / g));
  }
  return r;
}

namespace {
std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

std::uint64_t count_first_excited(int levels, int ground_levels, int molecules,
                                  Statistics statistics) {
  if (levels < 2 || molecules < 1 || ground_levels < 1 || ground_levels >= levels) {
    throw ValidationError("count_first_excited: requires m >= 2, n >= 1, 1 <= m_g < m");
  }
  const std::int64_t m = levels, mg = ground_levels, n = molecules;
  switch (statistics) {
    case Statistics::Boson:
      return binomial(mg + n - 1, n) + static_cast<std::uint64_t>(m - mg) * binomial(mg + n - 2, n - 1);
    case Statistics::Fermion:
      return binomial(mg, n) + static_cast<std::uint64_t>(m - mg) * binomial(mg, n - 1);
    case Statistics::None:
      break;
  }
  return ipow(static_cast<std::uint64_t>(mg), molecules) +
         static_cast<std::uint64_t>(n * (m - mg)) * ipow(static_cast<std::uint64_t>(mg), molecules - 1);
}

std::uint64_t count_full(int levels, int molecules, int max_photons, Statistics statistics) {
  if (levels < 2 || molecules < 1 || max_photons < 0) {
    throw ValidationError("count_full: requires m >= 2, n >= 1, n_max >= 0");
  }
  const auto photon_states = static_cast<std::uint64_t>(max_photons) + 1;
  switch (statistics) {
    case Statistics::Boson:
      return binomial(levels + molecules - 1, molecules) * photon_states;
    case Statistics::Fermion:
      return binomial(levels, molecules) * photon_states;
    case Statistics::None:
      break;
  }
  return ipow(static_cast<std::uint64_t>(levels), molecules) * photon_states;
}

}  // namespace polariton
