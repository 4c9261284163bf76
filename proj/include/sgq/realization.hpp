#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgq/catalog.hpp"
#include "sgq/census.hpp"
#include "sgq/factored.hpp"
#include "sgq/field.hpp"
#include "sgq/permutation.hpp"

namespace sgq {

/// Square matrix over a finite field, row-major, acting on column vectors.
class Matrix {
 public:
  Matrix(std::shared_ptr<const FiniteField> field, unsigned dim);
  static Matrix identity(std::shared_ptr<const FiniteField> field, unsigned dim);

  unsigned dim() const noexcept { return dim_; }
  const FiniteField& field() const noexcept { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const noexcept { return field_; }
  std::uint32_t at(unsigned r, unsigned c) const { return a_[r * dim_ + c]; }
  void set(unsigned r, unsigned c, std::uint32_t v) { a_[r * dim_ + c] = v; }

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  std::uint32_t determinant() const;
  bool is_scalar() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

 private:
  std::shared_ptr<const FiniteField> field_;
  unsigned dim_;
  std::vector<std::uint32_t> a_;
};

/// Matrix group acting on projective points; generators parallel the
/// permutation generators of the owning realization.
struct ProjectiveAction {
  std::shared_ptr<const FiniteField> field;
  unsigned dimension = 0;
  std::vector<Matrix> generators;
  /// Point i of the permutation action, first nonzero coordinate 1.
  std::vector<std::vector<std::uint32_t>> points;
};

enum class RealizationKind { Permutation, ProjectiveMatrix };

/// Concrete generators of a group. Immutable once built; the stabilizer
/// chain is computed on first use and shared.
class GroupRealization {
 public:
  GroupRealization(std::string name, std::size_t degree, std::vector<Permutation> generators,
                   std::optional<FactoredInteger> expected_order = std::nullopt);
  GroupRealization(std::string name, ProjectiveAction action, std::vector<Permutation> generators,
                   std::optional<FactoredInteger> expected_order = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  const std::optional<FactoredInteger>& expected_order() const noexcept { return expected_; }
  RealizationKind kind() const noexcept {
    return projective_ ? RealizationKind::ProjectiveMatrix : RealizationKind::Permutation;
  }
  const ProjectiveAction* projective() const noexcept { return projective_.get(); }
  const StabilizerChain& chain() const;

 private:
  struct ChainCache;

  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::optional<FactoredInteger> expected_;
  std::shared_ptr<const ProjectiveAction> projective_;
  std::shared_ptr<ChainCache> cache_;
};

std::shared_ptr<const FiniteField> build_field(std::uint32_t p, unsigned k);

/// Induced action on the orbit of <e1> among projective points. Throws
/// DomainError for singular generators or an orbit above max_points.
GroupRealization projective_realization(std::string name, std::vector<Matrix> generators,
                                        std::optional<FactoredInteger> expected_order = std::nullopt,
                                        std::size_t max_points = 1u << 20);

/// A_n on n points: (1,2,3) with (1,...,n) for odd n or (2,...,n) for even n.
GroupRealization alternating_realization(unsigned n);

/// Generator file: "#" comments, first line "degree N", then one generator
/// per line as N space-separated 1-based images.
GroupRealization load_generator_file(const std::filesystem::path& path,
                                     std::optional<FactoredInteger> expected_order = std::nullopt);

/// Projective image of a classical group, reduced to two generators whose
/// group order is checked against the order formula.
GroupRealization classical_realization(const Classical& c);

/// Realization for any descriptor that has one: alternating groups, the
/// classical series, and sporadic groups with a vendored generator file.
/// Throws DomainError otherwise.
GroupRealization realize(const GroupDescriptor& d);
bool has_realization(const GroupDescriptor& d);

std::uint64_t element_order(const Permutation& g, std::uint64_t cap = UINT64_MAX);
/// Least k <= cap with g^k scalar; CapExceededError past cap.
std::uint64_t element_order(const Matrix& g, std::uint64_t cap);

FactoredInteger bsgs_order(const GroupRealization& r);

inline constexpr std::size_t kDefaultElementCap = std::size_t(1) << 21;
inline constexpr std::size_t kMaxElementCap = std::size_t(1) << 24;

struct CensusOptions {
  std::size_t element_cap = kDefaultElementCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Breadth-first closure from the identity, each element visited once.
/// CapExceededError carries the number of elements reached.
ElementOrderCensus enumerate_census(const GroupRealization& r, const CensusOptions& options = {});

struct SamplerOptions {
  unsigned threads = 1;
  unsigned slots = 10;
  unsigned burn_in = 100;
};

struct OrderEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Fraction of elements of order exactly k, from product replacement with
/// an accumulator. Deterministic for a fixed seed and thread count.
OrderEstimate estimate_order_fraction(const GroupRealization& r, std::uint64_t k, std::uint64_t samples,
                                      std::uint64_t seed, const SamplerOptions& options = {});

unsigned resolve_threads(unsigned requested);

}  // namespace sgq
