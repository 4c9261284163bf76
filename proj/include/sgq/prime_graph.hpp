#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sgq {

/// Gruenberg-Kegel graph of a spectrum: primes, joined when their product
/// is an element order.
struct PrimeGraph {
  std::vector<std::uint64_t> vertices;                            // ascending
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;        // p < q
  /// Parts ascending by least prime; the part holding 2 (pi_1) comes first.
  std::vector<std::vector<std::uint64_t>> components;

  std::size_t t() const noexcept { return components.size(); }
  bool has_edge(std::uint64_t p, std::uint64_t q) const;
};

/// The spectrum is taken as given (no divisor closure). Throws DomainError
/// on an empty spectrum.
PrimeGraph build_prime_graph(const std::set<std::uint64_t>& pi_e);

/// True iff {p} is a component. DomainError when p is not a vertex.
bool is_isolated(const PrimeGraph& g, std::uint64_t p);

/// DOT text, one cluster subgraph per component.
std::string to_dot(const PrimeGraph& g, const std::string& name = "G");

}  // namespace sgq
