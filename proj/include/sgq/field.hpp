#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace sgq {

/// GF(p^k) for p^k <= 2^16.
///
/// Elements are the integers 0..q-1 read as base-p digit strings, digit i
/// being the coefficient of x^i. The defining polynomial is the first monic
/// irreducible of degree k when its lower coefficients are read the same
/// way (GF(4): x^2+x+1, GF(9): x^2+1), so indexing is reproducible.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned k);

  /// Shared instance for q = p^k; throws DomainError if q is not a prime
  /// power or exceeds 2^16.
  static std::shared_ptr<const FiniteField> of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Lower coefficients c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0.
  const std::vector<std::uint32_t>& polynomial() const noexcept { return poly_; }
  /// The element x (or a primitive root mod p when k = 1).
  std::uint32_t generator() const noexcept { return k_ == 1 ? primitive_ : p_; }
  std::uint32_t primitive() const noexcept { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  std::uint32_t from_int(std::int64_t n) const;

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> poly_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
};

}  // namespace sgq
