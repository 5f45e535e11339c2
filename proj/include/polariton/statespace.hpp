#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polariton/model.hpp"

namespace polariton {

inline constexpr std::size_t kDefaultMaxStates = 10'000'000;

/// |N>|k_1>...|k_n>: photon number plus one level index per molecule.
struct BasisState {
  int photons = 0;
  std::vector<int> occupation;

  auto operator<=>(const BasisState&) const = default;
};

/// Swaps the levels of molecules i and j; the photon number is untouched.
BasisState apply_transposition(int i, int j, BasisState state);

/// Direct-product basis in canonical order: photon number major, then the
/// occupation tuple lexicographically. Immutable once built.
///
/// Each state maps to a mixed-radix key photons * m^n + sum_i k_i m^(n-1-i);
/// canonical order is key order, so lookup is a binary search over keys.
class BasisSet {
 public:
  static BasisSet full(int levels, int molecules, int max_photons,
                       std::size_t max_states = kDefaultMaxStates);
  static BasisSet first_excited(int levels, int ground_levels, int molecules,
                                std::size_t max_states = kDefaultMaxStates);

  std::size_t size() const { return keys_.size(); }
  int levels() const { return levels_; }
  int molecules() const { return molecules_; }
  int max_photons() const { return max_photons_; }
  /// m_g for the first-excited manifold; zero for the full space.
  int ground_levels() const { return ground_levels_; }
  Manifold manifold() const { return manifold_; }

  int photons(std::size_t i) const { return photons_[i]; }
  std::span<const int> occupation(std::size_t i) const {
    return {occupation_.data() + i * static_cast<std::size_t>(molecules_),
            static_cast<std::size_t>(molecules_)};
  }
  BasisState state(std::size_t i) const;

  std::optional<std::size_t> find(int photons, std::span<const int> occupation) const;
  std::optional<std::size_t> find(const BasisState& s) const {
    return find(s.photons, s.occupation);
  }
  /// Throws std::out_of_range when the state is not part of this basis.
  std::size_t index(const BasisState& s) const;

  bool operator==(const BasisSet& other) const;

 private:
  BasisSet(int levels, int molecules, int max_photons, int ground_levels, Manifold manifold);
  void push(int photons, std::span<const int> occupation);
  std::uint64_t key(int photons, std::span<const int> occupation) const;

  int levels_ = 0;
  int molecules_ = 0;
  int max_photons_ = 0;
  int ground_levels_ = 0;
  Manifold manifold_ = Manifold::Full;
  std::vector<int> photons_;
  std::vector<int> occupation_;  // row-major, molecules_ entries per state
  std::vector<std::uint64_t> keys_;
};

using BasisSetPtr = std::shared_ptr<const BasisSet>;

/// (n_max + 1) m^n states. Throws ComputeCapError above `max_states`.
BasisSetPtr enumerate_full(int levels, int molecules, int max_photons,
                           std::size_t max_states = kDefaultMaxStates);

/// One-photon states with every molecule in the ground manifold, plus
/// zero-photon states with exactly one molecule excited:
/// m_g^n + n (m - m_g) m_g^(n-1) states.
BasisSetPtr enumerate_first_excited(int levels, int ground_levels, int molecules,
                                    std::size_t max_states = kDefaultMaxStates);

}  // namespace polariton
