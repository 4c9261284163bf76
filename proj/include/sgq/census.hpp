#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sgq/factored.hpp"

namespace sgq {

/// k -> |G(k)|, the number of elements of order exactly k.
///
/// A complete census lists every order and sums to the group order. Groups
/// too large to enumerate get partial censuses that carry only selected k;
/// the sum and phi-divisibility checks apply to complete censuses only.
class ElementOrderCensus {
 public:
  using Counts = std::map<std::uint64_t, std::uint64_t>;

  ElementOrderCensus() = default;
  ElementOrderCensus(Counts counts, FactoredInteger group_order, bool complete = true);

  const Counts& counts() const noexcept { return counts_; }
  const FactoredInteger& group_order() const noexcept { return order_; }
  bool complete() const noexcept { return complete_; }

  /// |G(k)|; zero when absent (only meaningful for complete censuses).
  std::uint64_t count(std::uint64_t k) const;
  std::uint64_t total() const;

  /// Throws ConsistencyError naming the first violated census law:
  /// counts[1] = 1, sum = |G|, phi(k) | counts[k], prime support of k in pi(G).
  void validate() const;

  /// "k count" lines, ascending k.
  std::string to_text() const;
  static ElementOrderCensus from_text(const std::string& text, const FactoredInteger& group_order);

  friend bool operator==(const ElementOrderCensus&, const ElementOrderCensus&) = default;

 private:
  Counts counts_;
  FactoredInteger order_;
  bool complete_ = true;
};

struct InvariantRecord {
  std::vector<std::uint64_t> pi;                 // primes dividing |G|
  std::set<std::uint64_t> pi_e;                  // element orders
  std::set<std::uint64_t> npe;                   // {|G(p)| : p in pi}
  std::multiset<std::uint64_t> npe_multiset;     // same, duplicates kept
  std::uint64_t involutions = 0;                 // |G(2)|
  std::uint64_t largest_prime = 0;
  std::uint64_t count_p = 0;                     // |G(largest_prime)|
};

InvariantRecord derive_invariants(const ElementOrderCensus& c);

/// |G| (p-1) / |G(p)| for p dividing |G| exactly once. Checks the Sylow
/// congruence |G(p)|/(p-1) = 1 (mod p) and that p divides the result.
FactoredInteger sylow_normalizer_order(const FactoredInteger& order, std::uint64_t p,
                                       const FactoredInteger& count_p);

/// Number of elements of order p in A_n. p odd: all permutations made of
/// p-cycles and fixed points. p = 2: even involutions (an even number of
/// transpositions).
FactoredInteger alternating_prime_order_count(unsigned n, std::uint64_t p);

ElementOrderCensus direct_product_census(const ElementOrderCensus& a, const ElementOrderCensus& b);
ElementOrderCensus cyclic_census(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace sgq
