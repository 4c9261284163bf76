#include "sgq/field.hpp"

#include <map>
#include <mutex>

#include "sgq/errors.hpp"
#include "sgq/factored.hpp"

namespace sgq {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j)
      a[i - dm + j] = static_cast<std::uint32_t>((a[i - dm + j] + std::uint64_t(p - c) * m[j]) % p);
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (auto x : r) zero &= x == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p) || k == 0) throw DomainError("GF(p^k) needs p prime and k >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw DomainError("fields larger than 2^16 are not supported");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    poly_ = {0};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly f(k + 1, 0);
      f[k] = 1;
      std::uint32_t c = code;
      for (unsigned i = 0; i < k; ++i, c /= p) f[i] = c % p;
      if (is_irreducible(f, p)) {
        poly_.assign(f.begin(), f.end() - 1);
        break;
      }
    }
  }

  // Primitive element: order exactly q-1.
  const std::uint64_t n = q_ - 1;
  const auto primes = factor_integer(n).primes();
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  primitive_ = 0;
  for (std::uint32_t g = 1; g < q_ && primitive_ == 0; ++g) {
    bool ok = true;
    for (auto r : primes) ok &= slow_pow(g, n / r) != 1;
    if (ok) primitive_ = g;
  }
  if (primitive_ == 0) throw DomainError("no primitive element; defining polynomial is reducible");

  log_.assign(q_, 0);
  exp_.assign(2 * n + 1, 0);
  std::uint32_t x = 1;
  std::vector<bool> hit(q_, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (x == 0 || hit[x]) throw DomainError("defining polynomial is reducible");
    hit[x] = true;
    exp_[i] = exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, primitive_);
  }
  exp_[2 * n] = 1;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const FiniteField>> cache;
  if (q < 2 || q > 65536) throw DomainError("field size " + std::to_string(q) + " out of range");
  auto f = factor_integer(q);
  if (f.factors().size() != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot) {
    auto [p, k] = *f.factors().begin();
    slot = std::make_shared<const FiniteField>(static_cast<std::uint32_t>(p), k);
  }
  return slot;
}

std::uint32_t FiniteField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  Poly x(k_, 0), y(k_, 0);
  for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_) {
    x[i] = a % p_;
    y[i] = b % p_;
  }
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p_);
  Poly m(poly_);
  m.push_back(1);
  Poly r = k_ == 1 ? Poly{prod[0] % p_} : poly_mod(prod, m, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) out += ((a % p_ + b % p_) % p_) * scale;
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i, a /= p_, scale *= p_) out += ((p_ - a % p_) % p_) * scale;
  return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

}  // namespace sgq
