#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgq/catalog.hpp"
#include "sgq/errors.hpp"

using namespace sgq;

namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(std::uint64_t q, unsigned e) {
  cpp_int r = 1;
  while (e--) r *= q;
  return r;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Oracle: every family formula evaluated directly in multiprecision,
// skipping the descriptors that the coincidence list folds away.
std::vector<u128> oracle_orders(u128 bound_) {
  const cpp_int bound(bound_);
  std::vector<u128> out;
  auto push = [&](const cpp_int& v) {
    if (v <= bound) out.push_back(static_cast<u128>(v));
  };
  cpp_int f = 60;
  for (unsigned n = 5; f <= bound; ++n, f *= n) push(f);
  for (std::uint64_t v : {7920ull, 95040ull, 175560ull, 443520ull, 604800ull, 10200960ull, 17971200ull, 44352000ull,
                          50232960ull, 244823040ull, 898128000ull, 4030387200ull})
    push(v);
  for (std::uint64_t q = 2; q < 3000; ++q) {
    if (!is_prime_power(q)) continue;
    for (unsigned n = 2; n < 12; ++n) {
      // L_n(q)
      cpp_int v = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) v *= ipow(q, i) - 1;
      v /= std::gcd<std::uint64_t>(n, q - 1);
      bool skip = (n == 2 && (q < 6 || q == 9)) || ((n == 3 || n == 4) && q == 2);
      if (!skip) push(v);
      // U_n(q)
      if (n >= 3) {
        cpp_int u = ipow(q, n * (n - 1) / 2);
        for (unsigned i = 2; i <= n; ++i) u *= i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1;
        u /= std::gcd<std::uint64_t>(n, q + 1);
        if (!(n == 3 && q == 2) && !(n == 4 && q == 2)) push(u);
      }
      const unsigned m = n;
      // S_{2m}(q) and, for odd q and m >= 3, O_{2m+1}(q)
      cpp_int s = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) s *= ipow(q, 2 * i) - 1;
      s /= std::gcd<std::uint64_t>(2, q - 1);
      if (!(m == 2 && q == 2)) {
        push(s);
        if (m >= 3 && q % 2) push(s);
      }
      if (m >= 4) {
        for (int sign : {-1, 1}) {
          cpp_int o = ipow(q, m * (m - 1)) * (sign < 0 ? ipow(q, m) - 1 : ipow(q, m) + 1);
          for (unsigned i = 1; i < m; ++i) o *= ipow(q, 2 * i) - 1;
          cpp_int rr = (sign < 0 ? ipow(q, m) - 1 : ipow(q, m) + 1) % 4;
          std::uint64_t r = static_cast<std::uint64_t>(rr);
          o /= std::gcd<std::uint64_t>(4, r);
          push(o);
        }
      }
      if (ipow(q, n) > bound * 1000) break;
    }
    if (q > 2) push(ipow(q, 6) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1));
    push(ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1));
    bool odd2 = false, odd3 = false;
    for (std::uint64_t t = 8; t <= q; t *= 4) odd2 |= t == q;
    for (std::uint64_t t = 27; t <= q; t *= 9) odd3 |= t == q;
    if (odd2) {
      push(ipow(q, 2) * (ipow(q, 2) + 1) * (q - 1));
      push(ipow(q, 12) * (ipow(q, 6) + 1) * (ipow(q, 4) - 1) * (ipow(q, 3) + 1) * (q - 1));
    }
    if (odd3) push(ipow(q, 3) * (ipow(q, 3) + 1) * (q - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names(const std::vector<GroupDescriptor>& v) {
  std::vector<std::string> out;
  for (const auto& d : v) out.push_back(d.to_string());
  return out;
}

}  // namespace

TEST_CASE("order formulas") {
  CHECK(order_of_descriptor(GroupDescriptor::parse("M11")).to_string() == "2^4*3^2*5*11");
  CHECK(order_of_descriptor(GroupDescriptor::parse("S6(3)")).to_string() == "2^9*3^9*5*7*13");
  CHECK(order_of_descriptor(GroupDescriptor::parse("O7(3)")).to_string() == "2^9*3^9*5*7*13");
  CHECK(order_of_descriptor(GroupDescriptor::parse("Suz")).to_string() == "2^13*3^7*5^2*7*11*13");
  CHECK(order_of_descriptor(GroupDescriptor::parse("L3(4)")).to_decimal() == "20160");
  CHECK(order_of_descriptor(GroupDescriptor::parse("A10")).to_decimal() == "1814400");
  CHECK(order_of_descriptor(GroupDescriptor::parse("S4(3)")).to_decimal() == "25920");
  CHECK(order_of_descriptor(GroupDescriptor::parse("U4(2)")).to_decimal() == "25920");
  CHECK(order_of_descriptor(GroupDescriptor::parse("U3(3)")).to_decimal() == "6048");
  CHECK(order_of_descriptor(GroupDescriptor::parse("Sz(8)")).to_decimal() == "29120");
  CHECK(order_of_descriptor(GroupDescriptor::parse("2F4(2)'")).to_decimal() == "17971200");
  CHECK(order_of_descriptor(GroupDescriptor::parse("G2(3)")).to_decimal() == "4245696");
  CHECK(order_of_descriptor(GroupDescriptor::parse("3D4(2)")).to_decimal() == "211341312");
  CHECK(order_of_descriptor(GroupDescriptor::parse("O8+(2)")).to_decimal() == "174182400");
  CHECK(order_of_descriptor(GroupDescriptor::parse("O8-(2)")).to_decimal() == "197406720");
  CHECK(order_of_descriptor(GroupDescriptor::parse("2G2(27)")).to_decimal() == "10073444472");
  CHECK(order_of_descriptor(GroupDescriptor::parse("E8(2)")).to_string() ==
        "2^120*3^13*5^5*7^4*11^2*13^2*17^2*19*31^2*41*43*73*127*151*241*331");
}

TEST_CASE("alternating order matches n!/2") {
  for (unsigned n = 5; n <= 30; ++n) {
    FactoredInteger f;
    for (unsigned i = 2; i <= n; ++i) f = f * factor_integer(i);
    f = divide_exact(f, FactoredInteger::prime_power(2));
    CHECK(order_of_descriptor(Alternating{n}) == f);
  }
}

TEST_CASE("descriptor parsing") {
  CHECK(GroupDescriptor::parse("a8").to_string() == "A8");
  CHECK(GroupDescriptor::parse("l3(4)") == GroupDescriptor(Classical{ClassicalSeries::A, 2, 4}));
  CHECK(GroupDescriptor::parse("U4(2)") == GroupDescriptor(Classical{ClassicalSeries::TwistedA, 3, 2}));
  CHECK(GroupDescriptor::parse("S6(3)") == GroupDescriptor(Classical{ClassicalSeries::C, 3, 3}));
  CHECK(GroupDescriptor::parse("O7(3)") == GroupDescriptor(Classical{ClassicalSeries::B, 3, 3}));
  CHECK(GroupDescriptor::parse("2B2(8)") == GroupDescriptor::parse("Sz(8)"));
  CHECK(GroupDescriptor::parse("fi23").to_string() == "Fi23");
  CHECK(GroupDescriptor::parse("ON").to_string() == "O'N");
  CHECK(GroupDescriptor::parse("o'n").to_string() == "O'N");
  for (const char* t : {"A5", "L2(7)", "U3(3)", "S4(3)", "O7(3)", "O8+(2)", "O8-(3)", "G2(3)", "2B2(8)",
                        "3D4(2)", "2F4(8)", "2G2(27)", "E6(2)", "2E6(2)", "M24", "Fi24'", "2F4(2)'"})
    CHECK(GroupDescriptor::parse(GroupDescriptor::parse(t).to_string()).to_string() == t);
  CHECK_THROWS_AS(GroupDescriptor::parse("A4"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("L2(6)"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("L2(3)"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("2B2(2)"), DomainError);
  CHECK_NOTHROW(GroupDescriptor::parse("2B2(32)"));
  CHECK_THROWS_AS(GroupDescriptor::parse("2G2(9)"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("S4(2)"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("O8(3)"), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::parse("X9"), LookupError);
  CHECK_THROWS_AS(GroupDescriptor::parse("M13"), LookupError);
}

TEST_CASE("canonicalization") {
  auto canon = [](const char* t) { return canonicalize_descriptor(GroupDescriptor::parse(t)).to_string(); };
  CHECK(canon("L4(2)") == "A8");
  CHECK(canon("M11") == "M11");
  CHECK(canon("L2(4)") == "A5");
  CHECK(canon("L2(5)") == "A5");
  CHECK(canon("L2(9)") == "A6");
  CHECK(canon("L3(2)") == "L2(7)");
  CHECK(canon("U4(2)") == "S4(3)");
  CHECK(canon("O5(7)") == "S4(7)");
  CHECK(canon("O7(4)") == "S6(4)");
  CHECK(canon("O7(3)") == "O7(3)");
  for (const char* t : {"L4(2)", "L2(4)", "U4(2)", "O5(7)", "O7(4)", "L3(2)"}) {
    auto d = GroupDescriptor::parse(t);
    auto c = canonicalize_descriptor(d);
    CHECK(canonicalize_descriptor(c) == c);
    CHECK(order_of_descriptor(c) == order_of_descriptor(d));
  }
}

TEST_CASE("enumerate_catalog small bounds") {
  CHECK(enumerate_catalog(factor_integer(59)).empty());
  CHECK(names(enumerate_catalog(factor_integer(1000))) ==
        std::vector<std::string>{"A5", "L2(7)", "A6", "L2(8)", "L2(11)"});
}

TEST_CASE("enumerate_catalog agrees with direct formula oracle") {
  for (u128 bound : {u128(100000), u128(10000000), u128(5000000000ull)}) {
    auto cat = enumerate_catalog(factor_integer(bound));
    std::vector<u128> got;
    for (const auto& d : cat) got.push_back(*order_of_descriptor(d).to_u128());
    CHECK(std::is_sorted(got.begin(), got.end()));
    auto want = oracle_orders(bound);
    std::vector<u128> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    std::string report;
    for (u128 v : missing) report += " missing " + u128_to_string(v);
    for (u128 v : extra) report += " extra " + u128_to_string(v);
    INFO("bound " << u128_to_string(bound) << report);
    CHECK(report.empty());
    std::set<GroupDescriptor> seen;
    for (const auto& d : cat) {
      CHECK(canonicalize_descriptor(d) == d);
      CHECK(seen.insert(d).second);
    }
  }
}

TEST_CASE("catalog at 5e9 holds O7(3) and S6(3)") {
  auto n = names(enumerate_catalog(factor_integer(5000000000ull)));
  CHECK(std::count(n.begin(), n.end(), "O7(3)") == 1);
  CHECK(std::count(n.begin(), n.end(), "S6(3)") == 1);
  CHECK(std::count(n.begin(), n.end(), "O7(2)") == 0);
  CHECK(std::count(n.begin(), n.end(), "S6(2)") == 1);
}

TEST_CASE("sporadic records") {
  auto m11 = sporadic_quant_record("M11");
  CHECK(m11.largest_prime == 11);
  CHECK(m11.count_order_p.to_string() == "2^5*3^2*5");
  CHECK(m11.normalizer_order.to_string() == "5*11");
  CHECK(m11.provenance == "paper");
  auto j3 = sporadic_quant_record("J3");
  CHECK(j3.count_order_p.to_string() == "2^8*3^5*5*17");
  CHECK(j3.normalizer_order.to_string() == "3^2*19");
  auto ru = sporadic_quant_record("Ru");
  CHECK(ru.count_order_p.to_string() == "2^15*3^3*5^3*7*13");
  CHECK(ru.normalizer_order.to_string() == "2*7*29");
  CHECK_THROWS_AS(sporadic_quant_record("M13"), LookupError);

  auto all = all_sporadic_records();
  CHECK(all.size() == 27);
  for (const auto& r : all) {
    const auto p = r.largest_prime;
    CHECK(r.order.exponent(p) == 1);
    CHECK(r.normalizer_order.exponent(p) == 1);
    CHECK(r.order == r.normalizer_order * divide_exact(r.count_order_p, factor_integer(p - 1)));
    CHECK(divide_exact(r.count_order_p, factor_integer(p - 1)).mod(p) == 1);
  }
}

TEST_CASE("missing data file names the file") {
  set_data_dir("/nonexistent-sgq-dir");
  try {
    all_sporadic_records();
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-sgq-dir/sporadic.tsv") != std::string::npos);
  }
  set_data_dir({});
}
