#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "sgq/census.hpp"
#include "sgq/errors.hpp"

using namespace sgq;

namespace {

unsigned perm_order(const std::vector<int>& p) {
  std::vector<bool> seen(p.size());
  unsigned o = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

bool is_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 == 0;
}

// Oracle: walk all of S_n and keep the even permutations.
ElementOrderCensus brute_alternating(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  ElementOrderCensus::Counts c;
  std::uint64_t total = 0;
  do {
    if (!is_even(p)) continue;
    ++c[perm_order(p)];
    ++total;
  } while (std::next_permutation(p.begin(), p.end()));
  return ElementOrderCensus(c, factor_integer(total));
}

}  // namespace

TEST_CASE("A5 census oracle and invariants") {
  auto a5 = brute_alternating(5);
  CHECK(a5.to_text() == "1 1\n2 15\n3 20\n5 24\n");
  a5.validate();
  auto r = derive_invariants(a5);
  CHECK(r.pi_e == std::set<std::uint64_t>{1, 2, 3, 5});
  CHECK(r.npe == std::set<std::uint64_t>{15, 20, 24});
  CHECK(r.involutions == 15);
  CHECK(r.largest_prime == 5);
  CHECK(r.count_p == 24);
  CHECK(ElementOrderCensus::from_text(a5.to_text(), a5.group_order()) == a5);
}

TEST_CASE("trivial census") {
  ElementOrderCensus t({{1, 1}}, FactoredInteger{});
  auto r = derive_invariants(t);
  CHECK(r.pi_e == std::set<std::uint64_t>{1});
  CHECK(r.npe.empty());
  CHECK(r.involutions == 0);
}

TEST_CASE("census validation catches broken data") {
  CHECK_THROWS_AS(ElementOrderCensus({{1, 1}, {2, 15}}, factor_integer(60)).validate(), ConsistencyError);
  CHECK_THROWS_AS(ElementOrderCensus({{1, 1}, {3, 1}}, factor_integer(2)).validate(), ConsistencyError);
  CHECK_THROWS_AS(ElementOrderCensus({{1, 1}, {2, 1}}, factor_integer(2), false).validate(), ConsistencyError);
  CHECK_THROWS_AS(derive_invariants(ElementOrderCensus({{1, 2}}, factor_integer(2))), ConsistencyError);
  CHECK_THROWS_AS(ElementOrderCensus::from_text("1 1\nx\n", factor_integer(1)), ParseError);
}

TEST_CASE("sylow_normalizer_order") {
  auto m11 = FactoredInteger::parse("2^4*3^2*5*11");
  CHECK(sylow_normalizer_order(m11, 11, FactoredInteger::parse("2^5*3^2*5")).to_string() == "5*11");
  auto j2 = FactoredInteger::parse("2^7*3^3*5^2*7");
  CHECK(sylow_normalizer_order(j2, 7, FactoredInteger::parse("2^7*3^3*5^2")).to_string() == "2*3*7");
  auto a8 = FactoredInteger::parse("2^6*3^2*5*7");
  CHECK(sylow_normalizer_order(a8, 7, FactoredInteger::parse("2^7*3^2*5")).to_string() == "3*7");
  CHECK_THROWS_AS(sylow_normalizer_order(a8, 3, factor_integer(112)), DomainError);
  CHECK_THROWS_AS(sylow_normalizer_order(m11, 11, factor_integer(10 * 2)), ConsistencyError);
}

TEST_CASE("alternating_prime_order_count") {
  CHECK(alternating_prime_order_count(8, 7).to_string() == "2^7*3^2*5");
  CHECK(alternating_prime_order_count(10, 7).to_string() == "2^7*3^3*5^2");
  CHECK(*alternating_prime_order_count(5, 5).to_u128() == 24);
  for (int n = 5; n <= 8; ++n) {
    auto c = brute_alternating(n);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (p > static_cast<std::uint64_t>(n)) continue;
      CHECK(*alternating_prime_order_count(n, p).to_u128() == c.count(p));
    }
  }
  CHECK_THROWS_AS(alternating_prime_order_count(5, 7), DomainError);
  CHECK_THROWS_AS(alternating_prime_order_count(5, 4), DomainError);
}

TEST_CASE("cyclic and direct product censuses") {
  CHECK(cyclic_census(3).to_text() == "1 1\n3 2\n");
  CHECK(cyclic_census(1).to_text() == "1 1\n");
  // Oracle: orders of residues mod 12.
  ElementOrderCensus::Counts mod12;
  for (std::uint64_t x = 0; x < 12; ++x) ++mod12[12 / std::gcd<std::uint64_t>(x, 12)];
  CHECK(cyclic_census(12).counts() == mod12);

  auto a5 = brute_alternating(5);
  auto z3 = cyclic_census(3);
  auto prod = direct_product_census(a5, z3);
  prod.validate();
  CHECK(prod.count(15) == 48);
  CHECK(prod.total() == 180);
  CHECK(direct_product_census(z3, a5) == prod);
  CHECK(direct_product_census(a5, cyclic_census(1)) == a5);

  // Oracle for the product: pair up element orders directly.
  std::uint64_t n15 = 0;
  for (auto [i, ci] : a5.counts())
    for (std::uint64_t x = 0; x < 3; ++x)
      if (std::lcm<std::uint64_t>(i, 3 / std::gcd<std::uint64_t>(x, 3)) == 15) n15 += ci;
  CHECK(n15 == 48);
}
