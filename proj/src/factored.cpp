#include "sgq/factored.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgq/errors.hpp"

namespace sgq {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::uint256_t;

constexpr std::uint32_t kTrialBound = 1u << 20;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u128 mulmod(u128 a, u128 b, u128 n) {
  if (n <= UINT64_MAX) return (a % n) * (b % n) % n;
  uint256_t r = uint256_t(a) * uint256_t(b) % uint256_t(n);
  return static_cast<u128>(r);
}

u128 addmod(u128 a, u128 b, u128 n) {
  // n < 2^127, so a + b never wraps.
  u128 s = a + b;
  return s >= n ? s - n : s;
}

u128 submod(u128 a, u128 b, u128 n) { return a >= b ? a - b : a + (n - b); }

u128 powmod(u128 base, u128 exp, u128 n) {
  u128 result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool strong_probable_prime(u128 n, u128 base) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u128 isqrt(u128 n) {
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

// Jacobi symbol (a/n) for odd n, with a given as sign + magnitude.
int jacobi(std::int64_t a_signed, u128 n) {
  u128 a;
  int result = 1;
  if (a_signed < 0) {
    a = u128(-a_signed) % n;
    // (-1/n)
    if ((n & 3) == 3) result = -result;
  } else {
    a = u128(a_signed) % n;
  }
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

u128 half_mod(u128 x, u128 n) { return (x & 1) ? (x + n) >> 1 : x >> 1; }

// Strong Lucas probable-prime test with Selfridge parameters.
bool strong_lucas_probable_prime(u128 n) {
  u128 r = isqrt(n);
  if (r * r == n) return false;
  std::int64_t d_signed = 5;
  while (true) {
    int j = jacobi(d_signed, n);
    if (j == -1) break;
    if (j == 0 && u128(d_signed < 0 ? -d_signed : d_signed) != n) return false;
    d_signed = d_signed > 0 ? -(d_signed + 2) : -d_signed + 2;
  }
  const u128 p = 1;
  const u128 d_mod = d_signed < 0 ? n - u128(-d_signed) % n : u128(d_signed) % n;
  // Q = (1 - D) / 4
  std::int64_t q_signed = (1 - d_signed) / 4;
  const u128 q_mod = q_signed < 0 ? n - u128(-q_signed) % n : u128(q_signed) % n;

  u128 dd = n + 1;
  int s = 0;
  while ((dd & 1) == 0) {
    dd >>= 1;
    ++s;
  }
  int top = 127;
  while (((dd >> top) & 1) == 0) --top;
  u128 u = 1, v = p, qk = q_mod;
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mulmod(u, v, n);
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    qk = mulmod(qk, qk, n);
    if ((dd >> bit) & 1) {
      u128 nu = half_mod(addmod(mulmod(p, u, n), v, n), n);
      u128 nv = half_mod(addmod(mulmod(d_mod, u, n), mulmod(p, v, n), n), n);
      u = nu;
      v = nv;
      qk = mulmod(qk, q_mod, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (int i = 1; i < s; ++i) {
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    qk = mulmod(qk, qk, n);
    if (v == 0) return true;
  }
  return false;
}

u128 pollard_brent(u128 n, u128 c) {
  auto f = [&](u128 x) { return addmod(mulmod(x, x, n), c, n); };
  u128 y = 2, x = 2, q = 1, g = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 128;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd128(q, n);
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd128(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

// r^k, or 0 when it exceeds n.
u128 bounded_pow(u128 r, unsigned k, u128 n) {
  u128 v = 1;
  while (k--) {
    if (r != 0 && v > n / r) return 0;
    v *= r;
  }
  return v;
}

// Largest k with n = r^k, and that r.
std::pair<u128, unsigned> perfect_power(u128 n) {
  for (unsigned k = 127; k >= 2; --k) {
    long double guess = std::pow(static_cast<long double>(n), 1.0L / k);
    u128 r = static_cast<u128>(guess);
    for (u128 c = r > 1 ? r - 1 : 1; c <= r + 1; ++c)
      if (c >= 2 && bounded_pow(c, k, n) == n) return {c, k};
  }
  return {n, 1};
}

void factor_into(u128 n, FactoredInteger::Map& out, std::uint32_t mult = 1) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += mult;
    return;
  }
  if (auto [r, k] = perfect_power(n); k > 1) {
    factor_into(r, out, mult * k);
    return;
  }
  for (u128 c = 1;; ++c) {
    u128 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, out, mult);
      factor_into(n / d, out, mult);
      return;
    }
  }
}

cpp_int to_cpp_int(const FactoredInteger& f) {
  cpp_int v = 1;
  for (auto [p, e] : f.factors()) v *= boost::multiprecision::pow(cpp_int(p), e);
  return v;
}

}  // namespace

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer");
  u128 v = 0;
  const u128 max = ~u128(0);
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw DomainError("not a decimal integer: " + std::string(text));
    u128 digit = static_cast<u128>(ch - '0');
    if (v > (max - digit) / 10) throw DomainError("integer out of range: " + std::string(text));
    v = v * 10 + digit;
  }
  return v;
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  static constexpr std::array<std::uint32_t, 13> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto a : bases)
    if (!strong_probable_prime(n, a)) return false;
  // The 13 prime bases up to 41 are a proof below 3.3e24; above that the
  // strong Lucas test completes BPSW.
  static const u128 kDeterministicBound = parse_u128("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  return strong_lucas_probable_prime(n);
}

FactoredInteger::FactoredInteger(Map factors) : factors_(std::move(factors)) {
  for (auto [p, e] : factors_) {
    if (e == 0) throw DomainError("zero exponent for prime " + u128_to_string(p));
    if (!is_prime(p)) throw DomainError(u128_to_string(p) + " is not prime");
  }
}

FactoredInteger FactoredInteger::prime_power(u128 p, std::uint32_t e) {
  if (e == 0) return {};
  return FactoredInteger(Map{{p, e}});
}

FactoredInteger FactoredInteger::of(u128 n) { return factor_integer(n); }

FactoredInteger FactoredInteger::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw DomainError("empty factored integer");
  if (s.find_first_of("^*") == std::string::npos) return factor_integer(parse_u128(s));
  Map out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('*', start);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + start, end - start);
    if (term.empty()) throw DomainError("malformed factored integer: " + s);
    std::size_t caret = term.find('^');
    u128 base = parse_u128(term.substr(0, caret));
    u128 exp = caret == std::string_view::npos ? 1 : parse_u128(term.substr(caret + 1));
    if (exp > UINT32_MAX) throw DomainError("exponent out of range: " + s);
    if (base != 1) {
      if (!is_prime(base)) throw DomainError("non-prime base in " + s);
      if (exp > 0) out[base] += static_cast<std::uint32_t>(exp);
    }
    start = end + 1;
  }
  return FactoredInteger(std::move(out));
}

std::uint32_t FactoredInteger::exponent(u128 p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> FactoredInteger::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (auto [p, e] : factors_) {
    if (p > UINT64_MAX) throw DomainError("prime factor " + u128_to_string(p) + " exceeds 64 bits");
    out.push_back(static_cast<std::uint64_t>(p));
  }
  return out;
}

std::uint64_t FactoredInteger::largest_prime() const {
  if (factors_.empty()) return 0;
  u128 p = factors_.rbegin()->first;
  if (p > UINT64_MAX) throw DomainError("prime factor " + u128_to_string(p) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
  for (auto [p, e] : factors_)
    if (other.exponent(p) < e) return false;
  return true;
}

std::optional<u128> FactoredInteger::to_u128() const {
  u128 v = 1;
  for (auto [p, e] : factors_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (v > (~u128(0)) / p) return std::nullopt;
      v *= p;
    }
  }
  return v;
}

std::uint64_t FactoredInteger::mod(std::uint64_t m) const {
  if (m == 0) throw DomainError("modulus zero");
  u128 r = 1 % m;
  for (auto [p, e] : factors_) r = r * powmod(p, e, m) % m;
  return static_cast<std::uint64_t>(r);
}

double FactoredInteger::log2() const {
  double s = 0;
  for (auto [p, e] : factors_) s += e * std::log2(static_cast<double>(p));
  return s;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (auto [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += u128_to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string FactoredInteger::to_decimal() const {
  if (auto v = to_u128()) return u128_to_string(*v);
  return to_cpp_int(*this).str();
}

std::strong_ordering operator<=>(const FactoredInteger& a, const FactoredInteger& b) {
  if (a.factors_ == b.factors_) return std::strong_ordering::equal;
  // Cancel the common part, then compare what is left.
  FactoredInteger g = gcd(a, b);
  FactoredInteger ra = divide_exact(a, g), rb = divide_exact(b, g);
  auto va = ra.to_u128(), vb = rb.to_u128();
  if (va && vb) return *va <=> *vb;
  cpp_int x = to_cpp_int(ra), y = to_cpp_int(rb);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FactoredInteger factor_integer(u128 n) {
  if (n == 0) throw DomainError("factor_integer: n must be positive");
  if (n > kFactorLimit) throw DomainError("factor_integer: n >= 2^127 is out of the supported range");
  FactoredInteger::Map out;
  for (std::uint32_t p : small_primes()) {
    if (u128(p) * p > n) break;
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (n <= kTrialBound || u128(kTrialBound) * kTrialBound > n) {
      ++out[n];
    } else {
      FactoredInteger::Map big;
      factor_into(n, big);
      for (auto [p, e] : big) out[p] += e;
    }
  }
  return FactoredInteger(std::move(out), FactoredInteger::Trusted{});
}

FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) { return multiply(a, b); }

FactoredInteger multiply(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger::Map out = a.factors();
  for (auto [p, e] : b.factors()) out[p] += e;
  return FactoredInteger(std::move(out), FactoredInteger::Trusted{});
}

FactoredInteger divide_exact(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger::Map out = a.factors();
  for (auto [p, e] : b.factors()) {
    auto it = out.find(p);
    if (it == out.end() || it->second < e)
      throw NonDivisibleError(b.to_string() + " does not divide " + a.to_string());
    it->second -= e;
    if (it->second == 0) out.erase(it);
  }
  return FactoredInteger(std::move(out), FactoredInteger::Trusted{});
}

std::strong_ordering compare(const FactoredInteger& a, const FactoredInteger& b) { return a <=> b; }

FactoredInteger totient_of_prime_power(u128 p, std::uint32_t e) {
  if (!is_prime(p)) throw DomainError(u128_to_string(p) + " is not prime");
  if (e == 0) return {};
  FactoredInteger out = factor_integer(p - 1);
  return e > 1 ? out * FactoredInteger::prime_power(p, e - 1) : out;
}

FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger::Map out;
  for (auto [p, e] : a.factors()) {
    std::uint32_t f = b.exponent(p);
    if (f) out[p] = std::min(e, f);
  }
  return FactoredInteger(std::move(out), FactoredInteger::Trusted{});
}

}  // namespace sgq
