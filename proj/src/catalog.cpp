#include "sgq/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "sgq/census.hpp"
#include "sgq/errors.hpp"

#ifndef SGQ_DEFAULT_DATA_DIR
#define SGQ_DEFAULT_DATA_DIR "data"
#endif

namespace sgq {

namespace {

struct SporadicEntry {
  const char* name;
  const char* order;
};

// Tits group last; it is carried as a sporadic-like entry.
constexpr SporadicEntry kSporadics[] = {
    {"M11", "2^4*3^2*5*11"},
    {"M12", "2^6*3^3*5*11"},
    {"J1", "2^3*3*5*7*11*19"},
    {"M22", "2^7*3^2*5*7*11"},
    {"J2", "2^7*3^3*5^2*7"},
    {"M23", "2^7*3^2*5*7*11*23"},
    {"HS", "2^9*3^2*5^3*7*11"},
    {"J3", "2^7*3^5*5*17*19"},
    {"M24", "2^10*3^3*5*7*11*23"},
    {"McL", "2^7*3^6*5^3*7*11"},
    {"He", "2^10*3^3*5^2*7^3*17"},
    {"Ru", "2^14*3^3*5^3*7*13*29"},
    {"Suz", "2^13*3^7*5^2*7*11*13"},
    {"O'N", "2^9*3^4*5*7^3*11*19*31"},
    {"Co3", "2^10*3^7*5^3*7*11*23"},
    {"Co2", "2^18*3^6*5^3*7*11*23"},
    {"Fi22", "2^17*3^9*5^2*7*11*13"},
    {"HN", "2^14*3^6*5^6*7*11*19"},
    {"Ly", "2^8*3^7*5^6*7*11*31*37*67"},
    {"Th", "2^15*3^10*5^3*7^2*13*19*31"},
    {"Fi23", "2^18*3^13*5^2*7*11*13*17*23"},
    {"Co1", "2^21*3^9*5^4*7^2*11*13*23"},
    {"J4", "2^21*3^3*5*7*11^3*23*29*31*37*43"},
    {"Fi24'", "2^21*3^16*5^2*7^3*11*13*17*23*29"},
    {"B", "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47"},
    {"M", "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71"},
    {"2F4(2)'", "2^11*3^3*5^2*13"},
};

const SporadicEntry* find_sporadic(std::string_view name) {
  for (const auto& e : kSporadics)
    if (name == e.name) return &e;
  return nullptr;
}

std::string lower(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return out;
}

struct PrimePower {
  std::uint64_t p;
  unsigned f;
};

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor_integer(q);
  if (f.factors().size() != 1) return std::nullopt;
  auto [p, e] = *f.factors().begin();
  return PrimePower{static_cast<std::uint64_t>(p), e};
}

bool odd_power_of(std::uint64_t q, std::uint64_t p) {
  auto pp = as_prime_power(q);
  return pp && pp->p == p && pp->f % 2 == 1 && pp->f >= 3;
}

// ---- cyclotomic evaluation -------------------------------------------------

using Poly = std::vector<std::int64_t>;  // coefficient of x^i at [i]

const Poly& cyclotomic(unsigned d) {
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  Poly num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e) continue;
    Poly den = cache.count(e) ? cache[e] : Poly{};
    if (den.empty()) {
      // recursion would deadlock on the mutex; build divisors in order instead
      throw std::logic_error("cyclotomic cache miss");
    }
    Poly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      std::int64_t c = num[i + den.size() - 1];  // den is monic
      quot[i] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    num = quot;
  }
  return cache[d] = num;
}

const Poly& cyclotomic_poly(unsigned d) {
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) cyclotomic(e);
  return cyclotomic(d);
}

u128 eval_cyclotomic(unsigned d, std::uint64_t q) {
  const Poly& c = cyclotomic_poly(d);
  __int128 v = 0;
  const __int128 limit = __int128(1) << 125;
  for (std::size_t i = c.size(); i-- > 0;) {
    __int128 next;
    if (__builtin_mul_overflow(v, static_cast<__int128>(q), &next) || next > limit || next < -limit)
      throw DomainError("order term Phi_" + std::to_string(d) + "(" + std::to_string(q) +
                        ") exceeds the supported range");
    v = next + c[i];
  }
  if (v <= 0) throw std::logic_error("cyclotomic value not positive");
  return static_cast<u128>(v);
}

// A factor q^i - 1 (sign -1), q^i + 1 (sign +1), or q^8 + q^4 + 1 (i = 0).
struct Term {
  unsigned i;
  int sign;
};

std::vector<unsigned> cyclotomic_indices(Term t) {
  std::vector<unsigned> out;
  if (t.i == 0) return {3, 6, 12};
  if (t.sign < 0) {
    for (unsigned d = 1; d <= t.i; ++d)
      if (t.i % d == 0) out.push_back(d);
  } else {
    for (unsigned d = 1; d <= 2 * t.i; ++d)
      if ((2 * t.i) % d == 0 && t.i % d != 0) out.push_back(d);
  }
  return out;
}

struct OrderShape {
  std::uint64_t q = 0;
  std::uint64_t q_exponent = 0;
  std::vector<Term> terms;
  std::uint64_t divisor = 1;
  std::uint64_t max_divisor = 1;  // over all q for this series and rank
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  u128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

OrderShape classical_shape(ClassicalSeries s, unsigned n, std::uint64_t q) {
  OrderShape o;
  o.q = q;
  switch (s) {
    case ClassicalSeries::A:
      o.q_exponent = std::uint64_t(n) * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) o.terms.push_back({i, -1});
      o.divisor = std::gcd<std::uint64_t>(n + 1, q - 1);
      o.max_divisor = n + 1;
      break;
    case ClassicalSeries::TwistedA:
      o.q_exponent = std::uint64_t(n) * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) o.terms.push_back({i, i % 2 == 0 ? -1 : +1});
      o.divisor = std::gcd<std::uint64_t>(n + 1, q + 1);
      o.max_divisor = n + 1;
      break;
    case ClassicalSeries::B:
    case ClassicalSeries::C:
      o.q_exponent = std::uint64_t(n) * n;
      for (unsigned i = 1; i <= n; ++i) o.terms.push_back({2 * i, -1});
      o.divisor = std::gcd<std::uint64_t>(2, q - 1);
      o.max_divisor = 2;
      break;
    case ClassicalSeries::D:
    case ClassicalSeries::TwistedD: {
      const bool plus = s == ClassicalSeries::D;
      o.q_exponent = std::uint64_t(n) * (n - 1);
      o.terms.push_back({n, plus ? -1 : +1});
      for (unsigned i = 1; i < n; ++i) o.terms.push_back({2 * i, -1});
      std::uint64_t qn = pow_mod(q, n, 4);
      o.divisor = std::gcd<std::uint64_t>(4, plus ? (qn + 3) % 4 : (qn + 1) % 4);
      if (o.divisor == 0) o.divisor = 4;
      o.max_divisor = 4;
      break;
    }
  }
  return o;
}

OrderShape exceptional_shape(ExceptionalSeries s, std::uint64_t q) {
  OrderShape o;
  o.q = q;
  auto minus = [&](std::initializer_list<unsigned> is) {
    for (unsigned i : is) o.terms.push_back({i, -1});
  };
  switch (s) {
    case ExceptionalSeries::G2:
      o.q_exponent = 6;
      minus({6, 2});
      break;
    case ExceptionalSeries::F4:
      o.q_exponent = 24;
      minus({12, 8, 6, 2});
      break;
    case ExceptionalSeries::E6:
      o.q_exponent = 36;
      minus({12, 9, 8, 6, 5, 2});
      o.divisor = std::gcd<std::uint64_t>(3, q - 1);
      o.max_divisor = 3;
      break;
    case ExceptionalSeries::TwistedE6:
      o.q_exponent = 36;
      minus({12, 8, 6, 2});
      o.terms.push_back({9, +1});
      o.terms.push_back({5, +1});
      o.divisor = std::gcd<std::uint64_t>(3, q + 1);
      o.max_divisor = 3;
      break;
    case ExceptionalSeries::E7:
      o.q_exponent = 63;
      minus({2, 6, 8, 10, 12, 14, 18});
      o.divisor = std::gcd<std::uint64_t>(2, q - 1);
      o.max_divisor = 2;
      break;
    case ExceptionalSeries::E8:
      o.q_exponent = 120;
      minus({2, 8, 12, 14, 18, 20, 24, 30});
      break;
    case ExceptionalSeries::TrialityD4:
      o.q_exponent = 12;
      o.terms.push_back({0, +1});
      minus({6, 2});
      break;
    case ExceptionalSeries::SuzukiB2:
      o.q_exponent = 2;
      o.terms.push_back({2, +1});
      minus({1});
      break;
    case ExceptionalSeries::ReeF4:
      o.q_exponent = 12;
      o.terms.push_back({6, +1});
      minus({4});
      o.terms.push_back({3, +1});
      minus({1});
      break;
    case ExceptionalSeries::ReeG2:
      o.q_exponent = 3;
      o.terms.push_back({3, +1});
      minus({1});
      break;
  }
  return o;
}

// log2 of q^N * prod(terms), ignoring the divisor.
long double undivided_log2(const OrderShape& o) {
  const long double lq = std::log2(static_cast<long double>(o.q));
  long double s = o.q_exponent * lq;
  for (Term t : o.terms) {
    long double v;
    if (t.i == 0)
      v = std::log2(std::pow(static_cast<long double>(o.q), 8) + std::pow(static_cast<long double>(o.q), 4) + 1);
    else
      v = t.i * lq + std::log2(1 + t.sign * std::pow(static_cast<long double>(o.q), -static_cast<long double>(t.i)));
    s += v;
  }
  return s;
}

FactoredInteger evaluate(const OrderShape& o) {
  auto pp = as_prime_power(o.q);
  FactoredInteger out = FactoredInteger::prime_power(pp->p, static_cast<std::uint32_t>(pp->f * o.q_exponent));
  std::map<unsigned, unsigned> multiplicity;
  for (Term t : o.terms)
    for (unsigned d : cyclotomic_indices(t)) ++multiplicity[d];
  for (auto [d, m] : multiplicity) {
    FactoredInteger v = factor_integer(eval_cyclotomic(d, o.q));
    for (unsigned k = 0; k < m; ++k) out = out * v;
  }
  return divide_exact(out, factor_integer(o.divisor));
}

// ---- validation ------------------------------------------------------------

void validate(const Alternating& a) {
  if (a.degree < 5) throw DomainError("A" + std::to_string(a.degree) + ": alternating groups need n >= 5");
}

void validate(const Sporadic& s) {
  if (!find_sporadic(s.name)) throw LookupError("unknown sporadic group: " + s.name);
}

std::string classical_name(const Classical& c);
std::string exceptional_name(const Exceptional& e);

void validate(const Classical& c) {
  if (!as_prime_power(c.q)) throw DomainError(classical_name(c) + ": q must be a prime power");
  auto fail = [&](const char* why) { throw DomainError(classical_name(c) + ": " + why); };
  switch (c.series) {
    case ClassicalSeries::A:
      if (c.rank < 1) fail("rank must be >= 1");
      if (c.rank == 1 && c.q < 4) fail("L2(2) and L2(3) are solvable");
      break;
    case ClassicalSeries::TwistedA:
      if (c.rank < 2) fail("unitary groups need dimension >= 3");
      if (c.rank == 2 && c.q == 2) fail("U3(2) is solvable");
      break;
    case ClassicalSeries::B:
    case ClassicalSeries::C:
      if (c.rank < 2) fail("rank must be >= 2");
      if (c.rank == 2 && c.q == 2) fail("S4(2) is not simple");
      break;
    case ClassicalSeries::D:
    case ClassicalSeries::TwistedD:
      if (c.rank < 4) fail("orthogonal groups of even dimension need dimension >= 8");
      break;
  }
}

void validate(const Exceptional& e) {
  auto fail = [&](const char* why) { throw DomainError(exceptional_name(e) + ": " + why); };
  if (!as_prime_power(e.q)) fail("q must be a prime power");
  switch (e.series) {
    case ExceptionalSeries::G2:
      if (e.q == 2) fail("G2(2) is not simple");
      break;
    case ExceptionalSeries::SuzukiB2:
    case ExceptionalSeries::ReeF4:
      if (!odd_power_of(e.q, 2)) fail("q must be 2^(2m+1) with m >= 1");
      break;
    case ExceptionalSeries::ReeG2:
      if (!odd_power_of(e.q, 3)) fail("q must be 3^(2m+1) with m >= 1");
      break;
    default:
      break;
  }
}

// ---- names -----------------------------------------------------------------

std::string classical_name(const Classical& c) {
  const std::string q = "(" + std::to_string(c.q) + ")";
  const unsigned n = c.rank;
  switch (c.series) {
    case ClassicalSeries::A: return "L" + std::to_string(n + 1) + q;
    case ClassicalSeries::TwistedA: return "U" + std::to_string(n + 1) + q;
    case ClassicalSeries::B: return "O" + std::to_string(2 * n + 1) + q;
    case ClassicalSeries::C: return "S" + std::to_string(2 * n) + q;
    case ClassicalSeries::D: return "O" + std::to_string(2 * n) + "+" + q;
    case ClassicalSeries::TwistedD: return "O" + std::to_string(2 * n) + "-" + q;
  }
  return "?";
}

struct ExceptionalName {
  ExceptionalSeries series;
  const char* name;
};

constexpr ExceptionalName kExceptionalNames[] = {
    {ExceptionalSeries::G2, "G2"},        {ExceptionalSeries::F4, "F4"},
    {ExceptionalSeries::E6, "E6"},        {ExceptionalSeries::E7, "E7"},
    {ExceptionalSeries::E8, "E8"},        {ExceptionalSeries::TwistedE6, "2E6"},
    {ExceptionalSeries::TrialityD4, "3D4"}, {ExceptionalSeries::SuzukiB2, "2B2"},
    {ExceptionalSeries::ReeF4, "2F4"},    {ExceptionalSeries::ReeG2, "2G2"},
};

std::string exceptional_name(const Exceptional& e) {
  for (const auto& n : kExceptionalNames)
    if (n.series == e.series) return std::string(n.name) + "(" + std::to_string(e.q) + ")";
  return "?";
}

std::uint64_t to_u64(const std::string& digits, std::string_view token) {
  try {
    u128 v = parse_u128(digits);
    if (v > (u128(1) << 62)) throw DomainError("parameter out of range in " + std::string(token));
    return static_cast<std::uint64_t>(v);
  } catch (const DomainError&) {
    throw DomainError("parameter out of range in " + std::string(token));
  }
}

int family_rank(const GroupDescriptor::Variant& v) { return static_cast<int>(v.index()); }

}  // namespace

// ---- GroupDescriptor -------------------------------------------------------

GroupDescriptor::GroupDescriptor(Alternating a) : value_(a) { validate(a); }
GroupDescriptor::GroupDescriptor(Sporadic s) : value_(s) { validate(s); }
GroupDescriptor::GroupDescriptor(Classical c) : value_(c) { validate(c); }
GroupDescriptor::GroupDescriptor(Exceptional e) : value_(e) { validate(e); }
GroupDescriptor::GroupDescriptor(Variant v) : value_(std::move(v)) {}

GroupDescriptor GroupDescriptor::parse(std::string_view token) {
  const std::string t = lower(token);
  if (t.empty()) throw LookupError("empty group token");
  for (const auto& e : kSporadics)
    if (t == lower(e.name)) return GroupDescriptor(Sporadic{e.name});
  if (t == "on") return GroupDescriptor(Sporadic{"O'N"});
  if (t == "fi24") return GroupDescriptor(Sporadic{"Fi24'"});
  if (t == "t" || t == "tits") return GroupDescriptor(Sporadic{std::string(kTitsGroup)});

  static const std::regex alt_re(R"(a(\d+))");
  static const std::regex cls_re(R"(([lusp]|o[+-]?)(\d+)([+-]?)\((\d+)\))");
  static const std::regex exc_re(R"((g2|f4|e6|e7|e8|2e6|3d4|2b2|sz|2f4|2g2|r)\((\d+)\))");
  std::smatch m;
  if (std::regex_match(t, m, alt_re)) {
    std::uint64_t n = to_u64(m[1], token);
    if (n > 1000000) throw DomainError("alternating degree out of range: " + std::string(token));
    return GroupDescriptor(Alternating{static_cast<unsigned>(n)});
  }
  if (std::regex_match(t, m, cls_re)) {
    std::string kind = m[1];
    const std::uint64_t dim = to_u64(m[2], token);
    std::string sign = m[3];
    if (kind.size() == 2) {
      if (!sign.empty()) throw LookupError("unknown group token: " + std::string(token));
      sign = kind.substr(1);
      kind = "o";
    }
    const std::uint64_t q = to_u64(m[4], token);
    if (dim > 10000) throw DomainError("dimension out of range: " + std::string(token));
    const unsigned d = static_cast<unsigned>(dim);
    if (kind != "o" && !sign.empty()) throw LookupError("unknown group token: " + std::string(token));
    if (kind == "l") {
      if (d < 2) throw DomainError(std::string(token) + ": dimension must be >= 2");
      return GroupDescriptor(Classical{ClassicalSeries::A, d - 1, q});
    }
    if (kind == "u") {
      if (d < 3) throw DomainError(std::string(token) + ": dimension must be >= 3");
      return GroupDescriptor(Classical{ClassicalSeries::TwistedA, d - 1, q});
    }
    if (kind == "s" || kind == "p") {
      if (d % 2 || d < 4) throw DomainError(std::string(token) + ": symplectic dimension must be even and >= 4");
      return GroupDescriptor(Classical{ClassicalSeries::C, d / 2, q});
    }
    if (d % 2 == 1) {
      if (!sign.empty() || d < 5) throw DomainError(std::string(token) + ": odd orthogonal dimension must be >= 5");
      return GroupDescriptor(Classical{ClassicalSeries::B, (d - 1) / 2, q});
    }
    if (sign.empty()) throw DomainError(std::string(token) + ": even orthogonal groups need a + or - sign");
    return GroupDescriptor(Classical{sign == "+" ? ClassicalSeries::D : ClassicalSeries::TwistedD, d / 2, q});
  }
  if (std::regex_match(t, m, exc_re)) {
    std::string kind = m[1];
    const std::uint64_t q = to_u64(m[2], token);
    if (kind == "sz") kind = "2b2";
    if (kind == "r") kind = "2g2";
    for (const auto& n : kExceptionalNames)
      if (lower(n.name) == kind) return GroupDescriptor(Exceptional{n.series, q});
  }
  if (t == lower(kTitsGroup)) return GroupDescriptor(Sporadic{std::string(kTitsGroup)});
  throw LookupError("unknown group token: " + std::string(token));
}

std::string GroupDescriptor::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alternating>) return "A" + std::to_string(v.degree);
        else if constexpr (std::is_same_v<T, Sporadic>) return v.name;
        else if constexpr (std::is_same_v<T, Classical>) return classical_name(v);
        else return exceptional_name(v);
      },
      value_);
}

std::strong_ordering operator<=>(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (auto c = family_rank(a.value_) <=> family_rank(b.value_); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, Sporadic>) {
          // ATLAS order, not alphabetical.
          auto index = [](const std::string& n) {
            for (std::size_t i = 0; i < std::size(kSporadics); ++i)
              if (n == kSporadics[i].name) return i;
            return std::size(kSporadics);
          };
          return index(x.name) <=> index(y.name);
        } else {
          return x <=> y;
        }
      },
      a.value_);
}

// ---- orders, coincidences, catalog -----------------------------------------

FactoredInteger order_of_descriptor(const GroupDescriptor& d) {
  return std::visit(
      [](const auto& v) -> FactoredInteger {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alternating>) {
          FactoredInteger::Map m;
          for (unsigned i = 2; i <= v.degree; ++i)
            for (auto [p, e] : factor_integer(i).factors()) m[p] += e;
          if (--m[2] == 0) m.erase(2);
          return FactoredInteger(std::move(m));
        } else if constexpr (std::is_same_v<T, Sporadic>) {
          return FactoredInteger::parse(find_sporadic(v.name)->order);
        } else if constexpr (std::is_same_v<T, Classical>) {
          return evaluate(classical_shape(v.series, v.rank, v.q));
        } else {
          return evaluate(exceptional_shape(v.series, v.q));
        }
      },
      d.value());
}

GroupDescriptor canonicalize_descriptor(const GroupDescriptor& d) {
  const auto* c = d.get_if<Classical>();
  if (!c) return d;
  using S = ClassicalSeries;
  if (c->series == S::A && c->rank == 1 && (c->q == 4 || c->q == 5)) return Alternating{5};
  if (c->series == S::A && c->rank == 1 && c->q == 9) return Alternating{6};
  if (c->series == S::A && c->rank == 2 && c->q == 2) return Classical{S::A, 1, 7};
  if (c->series == S::A && c->rank == 3 && c->q == 2) return Alternating{8};
  if (c->series == S::TwistedA && c->rank == 3 && c->q == 2) return Classical{S::C, 2, 3};
  if (c->series == S::B && (c->rank == 2 || c->q % 2 == 0)) return Classical{S::C, c->rank, c->q};
  return d;
}

namespace {

template <class Visit>
void sweep_q(std::uint64_t q_start, long double log_bound, const std::function<OrderShape(std::uint64_t)>& shape,
             const std::function<bool(std::uint64_t)>& admissible, Visit&& visit) {
  for (std::uint64_t q = q_start;; ++q) {
    OrderShape o = shape(q);
    if (undivided_log2(o) - std::log2(static_cast<long double>(o.max_divisor)) > log_bound) break;
    if (!as_prime_power(q) || !admissible(q)) continue;
    visit(q);
  }
}

}  // namespace

std::vector<GroupDescriptor> enumerate_catalog(const FactoredInteger& max_order) {
  std::set<GroupDescriptor> found;
  const long double log_bound = max_order.log2() + 1e-9L;
  auto consider = [&](const GroupDescriptor& d) {
    GroupDescriptor c = canonicalize_descriptor(d);
    if (order_of_descriptor(c) <= max_order) found.insert(c);
  };

  for (unsigned n = 5;; ++n) {
    GroupDescriptor d(Alternating{n});
    if (order_of_descriptor(d) > max_order) break;
    consider(d);
  }
  for (const auto& e : kSporadics) consider(GroupDescriptor(Sporadic{e.name}));

  const ClassicalSeries classical_series[] = {ClassicalSeries::A, ClassicalSeries::TwistedA, ClassicalSeries::B,
                                              ClassicalSeries::C, ClassicalSeries::D, ClassicalSeries::TwistedD};
  for (ClassicalSeries s : classical_series) {
    unsigned min_rank = 1;
    if (s == ClassicalSeries::TwistedA || s == ClassicalSeries::B || s == ClassicalSeries::C) min_rank = 2;
    if (s == ClassicalSeries::D || s == ClassicalSeries::TwistedD) min_rank = 4;
    for (unsigned n = min_rank;; ++n) {
      // Undivided orders grow with both rank and q, so q = 2 bounds the rank.
      OrderShape smallest = classical_shape(s, n, 2);
      if (undivided_log2(smallest) - std::log2(static_cast<long double>(smallest.max_divisor)) > log_bound) break;
      sweep_q(
          2, log_bound, [&](std::uint64_t q) { return classical_shape(s, n, q); },
          [&](std::uint64_t q) {
            try {
              GroupDescriptor(Classical{s, n, q});
              return true;
            } catch (const DomainError&) {
              return false;
            }
          },
          [&](std::uint64_t q) { consider(GroupDescriptor(Classical{s, n, q})); });
    }
  }
  for (const auto& en : kExceptionalNames) {
    const ExceptionalSeries s = en.series;
    sweep_q(
        2, log_bound, [&](std::uint64_t q) { return exceptional_shape(s, q); },
        [&](std::uint64_t q) {
          try {
            GroupDescriptor(Exceptional{s, q});
            return true;
          } catch (const DomainError&) {
            return false;
          }
        },
        [&](std::uint64_t q) { consider(GroupDescriptor(Exceptional{s, q})); });
  }

  std::vector<std::pair<FactoredInteger, GroupDescriptor>> keyed;
  for (const auto& d : found) keyed.emplace_back(order_of_descriptor(d), d);
  std::sort(keyed.begin(), keyed.end());
  std::vector<GroupDescriptor> out;
  out.reserve(keyed.size());
  for (auto& [o, d] : keyed) out.push_back(d);
  return out;
}

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kSporadics)
      if (std::string_view(e.name) != kTitsGroup) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

// ---- vendored data ---------------------------------------------------------

namespace {

std::mutex g_data_mu;
std::optional<std::filesystem::path> g_data_override;

}  // namespace

std::filesystem::path data_dir() {
  {
    std::lock_guard lock(g_data_mu);
    if (g_data_override) return *g_data_override;
  }
  if (const char* env = std::getenv("SGQ_DATA_DIR"); env && *env) return env;
  return SGQ_DEFAULT_DATA_DIR;
}

void set_data_dir(std::filesystem::path dir) {
  std::lock_guard lock(g_data_mu);
  if (dir.empty())
    g_data_override.reset();
  else
    g_data_override = std::move(dir);
}

std::filesystem::path data_file(std::string_view name) { return data_dir() / std::string(name); }

std::vector<SporadicQuantRecord> all_sporadic_records() {
  const auto path = data_file("sporadic.tsv");
  std::ifstream in(path);
  if (!in) throw LookupError("missing vendored data file: " + path.string());
  std::vector<SporadicQuantRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 5) throw ParseError(path.string(), lineno, "expected 5 tab-separated columns");
    SporadicQuantRecord r;
    r.name = cols[0];
    const SporadicEntry* e = find_sporadic(r.name);
    if (!e) throw ParseError(path.string(), lineno, "unknown sporadic group " + r.name);
    try {
      r.order = FactoredInteger::parse(cols[1]);
      r.largest_prime = static_cast<std::uint64_t>(parse_u128(cols[2]));
      r.count_order_p = FactoredInteger::parse(cols[3]);
    } catch (const DomainError& err) {
      throw ParseError(path.string(), lineno, err.what());
    }
    r.provenance = cols[4];
    if (r.provenance != "paper" && r.provenance != "vendored-atlas")
      throw ParseError(path.string(), lineno, "unknown provenance " + r.provenance);
    if (r.order != FactoredInteger::parse(e->order))
      throw ConsistencyError(path.string() + ":" + std::to_string(lineno) + ": order of " + r.name +
                             " disagrees with the built-in table");
    if (r.largest_prime != r.order.largest_prime())
      throw ConsistencyError(path.string() + ":" + std::to_string(lineno) + ": wrong largest prime for " + r.name);
    r.normalizer_order = sylow_normalizer_order(r.order, r.largest_prime, r.count_order_p);
    out.push_back(std::move(r));
  }
  return out;
}

SporadicQuantRecord sporadic_quant_record(std::string_view name) {
  if (!find_sporadic(name)) throw LookupError("unknown sporadic group: " + std::string(name));
  for (auto& r : all_sporadic_records())
    if (r.name == name) return r;
  throw LookupError("no record for " + std::string(name) + " in " + data_file("sporadic.tsv").string());
}

}  // namespace sgq
