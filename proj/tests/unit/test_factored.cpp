#include <doctest.h>

#include <random>

#include "sgq/errors.hpp"
#include "sgq/factored.hpp"

using namespace sgq;

namespace {

// Oracle: plain trial division, no shared code with factor_integer.
FactoredInteger::Map trial_divide(std::uint64_t n) {
  FactoredInteger::Map out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

u128 product(const FactoredInteger& f) {
  u128 v = 1;
  for (auto [p, e] : f.factors())
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  return v;
}

}  // namespace

TEST_CASE("factor_integer examples") {
  CHECK(factor_integer(1).is_one());
  CHECK(factor_integer(1).to_string() == "1");
  CHECK(factor_integer(7920).to_string() == "2^4*3^2*5*11");
  CHECK(factor_integer(20160).factors() == trial_divide(20160));
  CHECK_THROWS_AS(factor_integer(0), DomainError);
  CHECK_THROWS_AS(factor_integer(kFactorLimit + 1), DomainError);
}

TEST_CASE("factor_integer matches trial division below 2^40") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = rng() % (std::uint64_t(1) << 40) + 1;
    auto f = factor_integer(n);
    REQUIRE(f.factors() == trial_divide(n));
    CHECK(product(f) == n);
  }
}

TEST_CASE("factor_integer on 128-bit products") {
  // 2^61-1 and 2^89-1 are Mersenne primes.
  const u128 m61 = (u128(1) << 61) - 1;
  const u128 m89 = (u128(1) << 89) - 1;
  CHECK(is_prime(m61));
  CHECK(is_prime(m89));
  CHECK(factor_integer(m89).to_string() == u128_to_string(m89));
  CHECK(factor_integer(m61 * m61).to_string() == u128_to_string(m61) + "^2");
  const u128 a = u128(1000000007) * 998244353 * 1000003;
  auto f = factor_integer(a);
  CHECK(f.to_string() == "1000003*998244353*1000000007");
  auto g = factor_integer(m61 * 1000000007);
  CHECK(g.factors().size() == 2);
  CHECK(product(g) == m61 * 1000000007);
  CHECK(u128_to_string(m89) == "618970019642690137449562111");
  CHECK(parse_u128("618970019642690137449562111") == m89);
}

TEST_CASE("multiply, divide_exact, totient") {
  auto a = FactoredInteger::parse("2");
  auto b = FactoredInteger::parse("2*3");
  CHECK(multiply(a, b).to_string() == "2^2*3");
  auto m11 = FactoredInteger::parse("2^4*3^2*5*11");
  auto n = divide_exact(m11 * totient_of_prime_power(11, 1), FactoredInteger::parse("2^5*3^2*5"));
  CHECK(n.to_string() == "5*11");
  CHECK(totient_of_prime_power(7, 1).to_string() == "2*3");
  CHECK(totient_of_prime_power(2, 3).to_string() == "2^2");
  CHECK_THROWS_AS(divide_exact(a, b), NonDivisibleError);
  CHECK(divide_exact(multiply(m11, b), b) == m11);
}

TEST_CASE("compare is consistent with decimal values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t x = rng() % 1000000 + 1, y = rng() % 1000000 + 1;
    auto fx = factor_integer(x), fy = factor_integer(y);
    CHECK((compare(fx, fy) < 0) == (x < y));
    CHECK((fx == fy) == (x == y));
  }
  // Values past 128 bits still compare exactly.
  auto monster = FactoredInteger::parse("2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71");
  auto baby = FactoredInteger::parse("2^41*3^13*5^6*7^2*11*13*17*19*23*31*47");
  CHECK(baby < monster);
  CHECK(!monster.to_u128());
  CHECK(monster.to_decimal() == "808017424794512875886459904961710757005754368000000000");
}

TEST_CASE("parse and render") {
  CHECK(FactoredInteger::parse("7920") == FactoredInteger::parse("2^4*3^2*5*11"));
  CHECK(FactoredInteger::parse("1").is_one());
  CHECK_THROWS_AS(FactoredInteger::parse("4^2"), DomainError);
  CHECK_THROWS_AS(FactoredInteger::parse("2^x"), DomainError);
  CHECK_THROWS_AS(FactoredInteger(FactoredInteger::Map{{6, 1}}), DomainError);
  auto f = FactoredInteger::parse("2^9*3^9*5*7*13");
  CHECK(f.to_decimal() == "4585351680");
  CHECK(f.largest_prime() == 13);
  CHECK(f.mod(13) == 0);
  CHECK(f.mod(11) == 4585351680ull % 11);
  CHECK(gcd(f, FactoredInteger::parse("2^3*11*13")).to_string() == "2^3*13");
}
