#include "polariton/statespace.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "polariton/errors.hpp"

namespace polariton {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// Saturating multiply: returns kU64Max on overflow.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kU64Max / a) return kU64Max;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return b > kU64Max - a ? kU64Max : a + b;
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul_sat(r, base);
  return r;
}

void check_cap(std::uint64_t states, std::size_t max_states) {
  if (states > max_states) {
    throw ComputeCapError("basis of " +
                          (states == kU64Max ? std::string("> 2^64") : std::to_string(states)) +
                          " states exceeds the cap of " + std::to_string(max_states));
  }
}

void check_key_space(int levels, int molecules, int max_photons) {
  // The largest key is (n_max + 1) m^n - 1.
  if (mul_sat(pow_sat(static_cast<std::uint64_t>(levels), molecules),
              static_cast<std::uint64_t>(max_photons) + 1) == kU64Max) {
    throw ComputeCapError("state labels do not fit a 64-bit index (m^n too large)");
  }
}

}  // namespace

BasisState apply_transposition(int i, int j, BasisState state) {
  std::swap(state.occupation.at(static_cast<std::size_t>(i)),
            state.occupation.at(static_cast<std::size_t>(j)));
  return state;
}

BasisSet::BasisSet(int levels, int molecules, int max_photons, int ground_levels,
                   Manifold manifold)
    : levels_(levels),
      molecules_(molecules),
      max_photons_(max_photons),
      ground_levels_(ground_levels),
      manifold_(manifold) {}

std::uint64_t BasisSet::key(int photons, std::span<const int> occupation) const {
  std::uint64_t k = static_cast<std::uint64_t>(photons);
  for (int level : occupation) k = k * static_cast<std::uint64_t>(levels_) + level;
  return k;
}

void BasisSet::push(int photons, std::span<const int> occupation) {
  photons_.push_back(photons);
  occupation_.insert(occupation_.end(), occupation.begin(), occupation.end());
  keys_.push_back(key(photons, occupation));
}

BasisSet BasisSet::full(int levels, int molecules, int max_photons, std::size_t max_states) {
  if (levels < 2 || molecules < 1 || max_photons < 0) {
    throw ValidationError("enumerate_full: requires m >= 2, n >= 1, n_max >= 0");
  }
  const std::uint64_t per_photon = pow_sat(static_cast<std::uint64_t>(levels), molecules);
  check_cap(mul_sat(per_photon, static_cast<std::uint64_t>(max_photons) + 1), max_states);
  check_key_space(levels, molecules, max_photons);

  BasisSet basis(levels, molecules, max_photons, 0, Manifold::Full);
  const std::size_t total = per_photon * static_cast<std::size_t>(max_photons + 1);
  basis.photons_.reserve(total);
  basis.keys_.reserve(total);
  basis.occupation_.reserve(total * static_cast<std::size_t>(molecules));

  std::vector<int> occ(static_cast<std::size_t>(molecules), 0);
  for (int photons = 0; photons <= max_photons; ++photons) {
    std::fill(occ.begin(), occ.end(), 0);
    for (std::uint64_t c = 0; c < per_photon; ++c) {
      basis.push(photons, occ);
      // Odometer increment, last molecule fastest.
      for (int i = molecules - 1; i >= 0; --i) {
        if (++occ[i] < levels) break;
        occ[i] = 0;
      }
    }
  }
  return basis;
}

BasisSet BasisSet::first_excited(int levels, int ground_levels, int molecules,
                                 std::size_t max_states) {
  if (levels < 2 || molecules < 1 || ground_levels < 1 || ground_levels >= levels) {
    throw ValidationError("enumerate_first_excited: requires m >= 2, n >= 1, 1 <= m_g < m");
  }
  const auto mg = static_cast<std::uint64_t>(ground_levels);
  const auto me = static_cast<std::uint64_t>(levels - ground_levels);
  const std::uint64_t one_photon = pow_sat(mg, molecules);
  const std::uint64_t zero_photon =
      mul_sat(mul_sat(static_cast<std::uint64_t>(molecules), me), pow_sat(mg, molecules - 1));
  check_cap(add_sat(one_photon, zero_photon), max_states);
  check_key_space(levels, molecules, 1);

  BasisSet basis(levels, molecules, 1, ground_levels, Manifold::FirstExcited);
  std::vector<int> occ(static_cast<std::size_t>(molecules), 0);

  // Zero photons, exactly one molecule in the excited manifold; depth-first in
  // lexicographic order.
  auto zero = [&](auto&& self, int pos, bool excited_used) -> void {
    if (pos == molecules) {
      if (excited_used) basis.push(0, occ);
      return;
    }
    const int remaining = molecules - pos - 1;
    for (int level = 0; level < levels; ++level) {
      const bool excited = level >= ground_levels;
      if (excited && excited_used) break;
      if (!excited && !excited_used && remaining == 0) continue;
      occ[pos] = level;
      self(self, pos + 1, excited_used || excited);
    }
  };
  zero(zero, 0, false);

  // One photon, every molecule in the ground manifold.
  std::fill(occ.begin(), occ.end(), 0);
  for (std::uint64_t c = 0; c < one_photon; ++c) {
    basis.push(1, occ);
    for (int i = molecules - 1; i >= 0; --i) {
      if (++occ[i] < ground_levels) break;
      occ[i] = 0;
    }
  }
  return basis;
}

BasisState BasisSet::state(std::size_t i) const {
  auto occ = occupation(i);
  return BasisState{photons_[i], std::vector<int>(occ.begin(), occ.end())};
}

std::optional<std::size_t> BasisSet::find(int photons, std::span<const int> occupation) const {
  if (photons < 0 || photons > max_photons_ ||
      occupation.size() != static_cast<std::size_t>(molecules_)) {
    return std::nullopt;
  }
  for (int level : occupation) {
    if (level < 0 || level >= levels_) return std::nullopt;
  }
  const std::uint64_t k = key(photons, occupation);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t BasisSet::index(const BasisState& s) const {
  auto i = find(s);
  if (!i) throw std::out_of_range("state is not part of this basis");
  return *i;
}

bool BasisSet::operator==(const BasisSet& other) const {
  return levels_ == other.levels_ && molecules_ == other.molecules_ &&
         max_photons_ == other.max_photons_ && ground_levels_ == other.ground_levels_ &&
         manifold_ == other.manifold_ && keys_ == other.keys_;
}

BasisSetPtr enumerate_full(int levels, int molecules, int max_photons, std::size_t max_states) {
  return std::make_shared<const BasisSet>(
      BasisSet::full(levels, molecules, max_photons, max_states));
}

BasisSetPtr enumerate_first_excited(int levels, int ground_levels, int molecules,
                                    std::size_t max_states) {
  return std::make_shared<const BasisSet>(
      BasisSet::first_excited(levels, ground_levels, molecules, max_states));
}

}  // namespace polariton
