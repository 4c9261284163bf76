#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sgq/factored.hpp"

namespace sgq {

/// Permutation of {0..n-1} stored as its image list.
///
/// Products act left to right: (a * b)(x) = b(a(x)), matching the usual
/// convention for permutation groups acting on the right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);  // validates bijectivity
  static Permutation identity(std::size_t n);
  /// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; "()" is the identity.
  static Permutation from_cycles(std::size_t n, std::string_view cycles);

  std::size_t degree() const noexcept { return img_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return img_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// lcm of the cycle lengths; throws CapExceededError above cap.
  std::uint64_t order(std::uint64_t cap = UINT64_MAX) const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

/// lcm of cycle lengths of an image array (no validation).
std::uint64_t cycle_lcm(const std::uint16_t* img, std::size_t n, std::vector<std::uint8_t>& scratch);

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm with explicit transversals.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  const std::vector<std::uint32_t>& base() const noexcept { return base_; }
  std::vector<std::size_t> orbit_sizes() const;
  FactoredInteger order() const;
  bool contains(const Permutation& g) const;
  /// Uniform element as a product of transversal representatives.
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    std::uint32_t point;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> index;  // point -> slot in orbit, -1 outside
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;      // maps point to orbit[i]
    std::vector<Permutation> inv_transversal;
  };

  void rebuild_orbit(Level& level);
  /// Residue of g after stripping levels from `start`; sets `failed_at`
  /// to the level where it left the orbit, or base length if it survived.
  Permutation sift(Permutation g, std::size_t start, std::size_t& failed_at) const;

  std::size_t degree_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

}  // namespace sgq
