#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgq {

using u128 = unsigned __int128;

/// Largest value accepted by factor_integer: 2^127 - 1.
inline constexpr u128 kFactorLimit = (u128(1) << 127) - 1;

std::string u128_to_string(u128 v);
/// Parses a non-negative decimal; throws DomainError on junk or overflow.
u128 parse_u128(std::string_view text);

bool is_prime(u128 n);

/// A positive integer stored as prime -> exponent. The empty map is 1.
///
/// Equality is map equality, which coincides with numeric equality because
/// factorizations are unique. Ordering compares numeric values, so products
/// far beyond 128 bits (the Monster) still compare exactly.
class FactoredInteger {
 public:
  /// Prime keys are 128-bit so any n < 2^127 factors completely.
  using Map = std::map<u128, std::uint32_t>;

  FactoredInteger() = default;
  /// Validates that keys are prime and exponents positive.
  explicit FactoredInteger(Map factors);

  static FactoredInteger prime_power(u128 p, std::uint32_t e = 1);
  /// Factors any positive integer below 2^127.
  static FactoredInteger of(u128 n);
  /// Accepts caret-star text ("2^4*3^2*5*11", "1") or a plain decimal.
  static FactoredInteger parse(std::string_view text);

  const Map& factors() const& noexcept { return factors_; }
  Map factors() && noexcept { return std::move(factors_); }
  std::uint32_t exponent(u128 p) const;
  bool is_one() const noexcept { return factors_.empty(); }
  /// Group-order primes fit in 64 bits; these throw DomainError otherwise.
  std::vector<std::uint64_t> primes() const;
  /// Zero for 1.
  std::uint64_t largest_prime() const;
  bool divides(const FactoredInteger& other) const;

  /// Value when it fits in 128 bits.
  std::optional<u128> to_u128() const;
  std::uint64_t mod(std::uint64_t m) const;
  double log2() const;

  /// Caret-star rendering, primes ascending, "1" for the empty map.
  std::string to_string() const;
  std::string to_decimal() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
  friend std::strong_ordering operator<=>(const FactoredInteger& a, const FactoredInteger& b);

 private:
  struct Trusted {};
  FactoredInteger(Map factors, Trusted) : factors_(std::move(factors)) {}

  friend FactoredInteger factor_integer(u128 n);
  friend FactoredInteger multiply(const FactoredInteger& a, const FactoredInteger& b);
  friend FactoredInteger divide_exact(const FactoredInteger& a, const FactoredInteger& b);
  friend FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b);

  Map factors_;
};

FactoredInteger factor_integer(u128 n);

FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b);
FactoredInteger multiply(const FactoredInteger& a, const FactoredInteger& b);
/// a / b; throws NonDivisibleError unless b divides a.
FactoredInteger divide_exact(const FactoredInteger& a, const FactoredInteger& b);
std::strong_ordering compare(const FactoredInteger& a, const FactoredInteger& b);
/// phi(p^e) = p^(e-1) (p-1), factored.
FactoredInteger totient_of_prime_power(u128 p, std::uint32_t e);
FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b);

}  // namespace sgq
