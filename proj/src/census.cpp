#include "sgq/census.hpp"

#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgq/errors.hpp"

namespace sgq {

namespace {

using boost::multiprecision::cpp_int;

FactoredInteger factor_big(const cpp_int& v) {
  if (v <= 0) throw DomainError("count must be positive");
  if (v > cpp_int(kFactorLimit)) throw DomainError("count exceeds the 2^127 factoring range");
  return factor_integer(static_cast<u128>(v));
}

cpp_int factorial(unsigned n) {
  cpp_int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (auto [p, e] : factor_integer(n).factors()) result = result / p * (p - 1);
  return result;
}

ElementOrderCensus::ElementOrderCensus(Counts counts, FactoredInteger group_order, bool complete)
    : counts_(std::move(counts)), order_(std::move(group_order)), complete_(complete) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->first == 0) throw DomainError("element order 0");
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
}

std::uint64_t ElementOrderCensus::count(std::uint64_t k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t ElementOrderCensus::total() const {
  std::uint64_t s = 0;
  for (auto [k, c] : counts_) s += c;
  return s;
}

void ElementOrderCensus::validate() const {
  if (!complete_) throw ConsistencyError("census is partial");
  if (count(1) != 1) throw ConsistencyError("census: |G(1)| != 1");
  auto order = order_.to_u128();
  if (!order || u128(total()) != *order)
    throw ConsistencyError("census: counts sum to " + std::to_string(total()) + ", group order is " +
                           order_.to_decimal());
  for (auto [k, c] : counts_) {
    if (c % euler_phi(k) != 0)
      throw ConsistencyError("census: phi(" + std::to_string(k) + ") does not divide " + std::to_string(c));
    for (auto [p, e] : factor_integer(k).factors())
      if (order_.exponent(p) < e)
        throw ConsistencyError("census: element order " + std::to_string(k) + " does not divide |G|");
  }
}

std::string ElementOrderCensus::to_text() const {
  std::ostringstream os;
  for (auto [k, c] : counts_) os << k << ' ' << c << '\n';
  return os.str();
}

ElementOrderCensus ElementOrderCensus::from_text(const std::string& text, const FactoredInteger& group_order) {
  Counts counts;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::uint64_t k = 0, c = 0;
    std::string rest;
    if (!(ls >> k >> c) || (ls >> rest)) throw ParseError("census", lineno, "expected 'k count'");
    if (!counts.emplace(k, c).second) throw ParseError("census", lineno, "duplicate order");
  }
  return ElementOrderCensus(std::move(counts), group_order, true);
}

InvariantRecord derive_invariants(const ElementOrderCensus& c) {
  c.validate();
  InvariantRecord r;
  r.pi = c.group_order().primes();
  for (auto [k, n] : c.counts()) r.pi_e.insert(k);
  for (auto p : r.pi) {
    r.npe.insert(c.count(p));
    r.npe_multiset.insert(c.count(p));
  }
  r.involutions = c.count(2);
  r.largest_prime = c.group_order().largest_prime();
  r.count_p = r.largest_prime ? c.count(r.largest_prime) : 0;
  return r;
}

FactoredInteger sylow_normalizer_order(const FactoredInteger& order, std::uint64_t p,
                                       const FactoredInteger& count_p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (order.exponent(p) != 1)
    throw DomainError("sylow_normalizer_order: " + std::to_string(p) + " must divide " + order.to_string() +
                      " exactly once");
  FactoredInteger pm1 = factor_integer(p - 1);
  if (!pm1.divides(count_p))
    throw ConsistencyError("sylow_normalizer_order: p-1 does not divide |G(p)| = " + count_p.to_string());
  FactoredInteger sylow_count = divide_exact(count_p, pm1);
  if (sylow_count.mod(p) != 1)
    throw ConsistencyError("Sylow congruence fails: |G(p)|/(p-1) = " + sylow_count.to_string() +
                           " is not 1 mod " + std::to_string(p));
  FactoredInteger normalizer;
  try {
    normalizer = divide_exact(order, sylow_count);
  } catch (const NonDivisibleError&) {
    throw ConsistencyError("number of Sylow subgroups " + sylow_count.to_string() + " does not divide |G|");
  }
  if (normalizer.exponent(p) != 1) throw ConsistencyError("p does not divide |N_G(P)|");
  return normalizer;
}

FactoredInteger alternating_prime_order_count(unsigned n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > n) throw DomainError("alternating_prime_order_count: p exceeds n");
  const cpp_int nf = factorial(n);
  cpp_int total = 0;
  cpp_int pk = 1;
  cpp_int kf = 1;
  for (unsigned k = 1; k * p <= n; ++k) {
    pk *= p;
    kf *= k;
    // p = 2 keeps only products of an even number of transpositions.
    if (p == 2 && k % 2 == 1) continue;
    total += nf / (kf * pk * factorial(n - static_cast<unsigned>(k * p)));
  }
  if (total == 0) throw DomainError("A_n has no elements of order 2 for this n");
  return factor_big(total);
}

ElementOrderCensus direct_product_census(const ElementOrderCensus& a, const ElementOrderCensus& b) {
  ElementOrderCensus::Counts out;
  for (auto [i, ci] : a.counts())
    for (auto [j, cj] : b.counts()) {
      std::uint64_t k = std::lcm(i, j);
      u128 prod = u128(ci) * cj;
      if (prod > UINT64_MAX || out[k] > UINT64_MAX - static_cast<std::uint64_t>(prod))
        throw DomainError("direct_product_census: count overflow");
      out[k] += static_cast<std::uint64_t>(prod);
    }
  return ElementOrderCensus(std::move(out), a.group_order() * b.group_order(), a.complete() && b.complete());
}

ElementOrderCensus cyclic_census(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic_census: n must be positive");
  ElementOrderCensus::Counts out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out[d] = euler_phi(d);
    out[n / d] = euler_phi(n / d);
  }
  return ElementOrderCensus(std::move(out), factor_integer(n));
}

}  // namespace sgq
