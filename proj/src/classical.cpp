// Root-element generators for the classical groups and their reduction to a
// verified generating pair.

#include <functional>
#include <random>

#include "sgq/errors.hpp"
#include "sgq/realization.hpp"

namespace sgq {

namespace {

using Vec = std::vector<std::uint32_t>;
using FieldPtr = std::shared_ptr<const FiniteField>;

// Matrix of a linear map given by its action on basis vectors.
Matrix matrix_of(const FieldPtr& F, unsigned d, const std::function<Vec(const Vec&)>& f) {
  Matrix m(F, d);
  for (unsigned j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    Vec col = f(e);
    for (unsigned i = 0; i < d; ++i) m.set(i, j, col[i]);
  }
  return m;
}

// {1, x, ..., x^(k-1)}: a basis of GF(q) over its prime field.
std::vector<std::uint32_t> additive_basis(const FiniteField& F) {
  std::vector<std::uint32_t> out;
  std::uint32_t v = 1;
  for (unsigned i = 0; i < F.degree(); ++i, v *= F.characteristic()) out.push_back(v);
  return out;
}

Vec axpy(const FiniteField& F, std::uint32_t a, const Vec& x, Vec y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(a, x[i]));
  return y;
}

Vec unit(unsigned d, unsigned i) {
  Vec e(d, 0);
  e[i] = 1;
  return e;
}

std::vector<Matrix> sl_roots(const FieldPtr& F, unsigned d) {
  std::vector<Matrix> out;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      for (auto a : additive_basis(*F)) {
        Matrix m = Matrix::identity(F, d);
        m.set(i, j, a);
        out.push_back(m);
      }
    }
  return out;
}

// Alternating form sum_i x_i y_(d-1-i) - x_(d-1-i) y_i over i < d/2.
std::vector<Matrix> sp_roots(const FieldPtr& F, unsigned d) {
  const FiniteField& K = *F;
  auto form = [&](const Vec& x, const Vec& y) {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < d / 2; ++i)
      s = K.add(s, K.sub(K.mul(x[i], y[d - 1 - i]), K.mul(x[d - 1 - i], y[i])));
    return s;
  };
  std::vector<Vec> vs;
  for (unsigned i = 0; i < d; ++i) {
    vs.push_back(unit(d, i));
    for (unsigned j = i + 1; j < d; ++j) {
      Vec v = unit(d, i);
      v[j] = 1;
      vs.push_back(v);
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : vs)
    for (auto a : additive_basis(K))
      out.push_back(matrix_of(F, d, [&](const Vec& x) { return axpy(K, K.mul(a, form(x, v)), v, x); }));
  return out;
}

// Hermitian form sum_i x_i conj(y_(d-1-i)) over GF(q^2), conj(a) = a^q.
std::vector<Matrix> su_roots(const FieldPtr& F, unsigned d, std::uint32_t q) {
  const FiniteField& K = *F;
  auto conj = [&](std::uint32_t a) { return K.pow(a, q); };
  auto herm = [&](const Vec& x, const Vec& y) {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < d; ++i) s = K.add(s, K.mul(x[i], conj(y[d - 1 - i])));
    return s;
  };
  auto trace = [&](std::uint32_t a) { return K.add(a, conj(a)); };

  std::uint32_t a0 = 0;
  for (std::uint32_t a = 1; a < K.size() && a0 == 0; ++a)
    if (trace(a) == 0) a0 = a;
  // Scalars a with a + a^q = 0 form a0 * GF(q); take a0 times a GF(p)-basis of GF(q).
  const std::uint32_t gamma = K.pow(K.primitive(), q + 1);
  std::vector<std::uint32_t> scalars;
  std::uint32_t g = 1;
  for (unsigned i = 0; i < K.degree() / 2; ++i, g = K.mul(g, gamma)) scalars.push_back(K.mul(a0, g));

  const bool odd = d % 2 == 1;
  const unsigned mid = d / 2;
  std::vector<Vec> vs;
  for (unsigned i = 0; i < d; ++i) {
    if (odd && i == mid) continue;
    vs.push_back(unit(d, i));
    for (unsigned j = i + 1; j < d; ++j) {
      if (j == d - 1 - i || (odd && j == mid)) continue;
      for (auto b : additive_basis(K)) {
        Vec v = unit(d, i);
        v[j] = b;
        vs.push_back(v);
      }
    }
  }
  if (odd) {
    for (auto b : additive_basis(K)) {
      const std::uint32_t target = K.neg(K.mul(b, conj(b)));
      for (std::uint32_t t = 0; t < K.size(); ++t)
        if (trace(t) == target) {
          Vec v = unit(d, 0);
          v[mid] = b;
          v[d - 1] = t;
          vs.push_back(v);
          break;
        }
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : vs) {
    if (herm(v, v) != 0) throw std::logic_error("unitary root vector is not isotropic");
    for (auto a : scalars)
      out.push_back(matrix_of(F, d, [&](const Vec& x) { return axpy(K, K.mul(a, herm(x, v)), v, x); }));
  }
  return out;
}

enum class OrthogonalKind { Odd, Plus, Minus };

// Quadratic form: hyperbolic pairs (i, d-1-i) for i < m plus an anisotropic
// middle of dimension 1 (odd d) or 2 (minus type). Eichler transformations
// x -> x + B(x,u) w - B(x,w) u - Q(w) B(x,u) u, u singular, w orthogonal to u.
std::vector<Matrix> omega_roots(const FieldPtr& F, unsigned d, OrthogonalKind kind) {
  const FiniteField& K = *F;
  const unsigned m = kind == OrthogonalKind::Minus ? d / 2 - 1 : d / 2;
  std::uint32_t c = 0;
  if (kind == OrthogonalKind::Minus) {
    // y^2 + y + c irreducible.
    for (std::uint32_t cand = 0; cand < K.size(); ++cand) {
      bool root = false;
      for (std::uint32_t y = 0; y < K.size() && !root; ++y) root = K.add(K.add(K.mul(y, y), y), cand) == 0;
      if (!root) {
        c = cand;
        break;
      }
    }
  }
  auto Q = [&](const Vec& x) {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < m; ++i) s = K.add(s, K.mul(x[i], x[d - 1 - i]));
    if (kind == OrthogonalKind::Odd) s = K.add(s, K.mul(x[m], x[m]));
    if (kind == OrthogonalKind::Minus) {
      const auto y1 = x[m], y2 = x[m + 1];
      s = K.add(s, K.add(K.add(K.mul(y1, y1), K.mul(y1, y2)), K.mul(c, K.mul(y2, y2))));
    }
    return s;
  };
  auto B = [&](const Vec& x, const Vec& y) {
    Vec s(d);
    for (unsigned i = 0; i < d; ++i) s[i] = K.add(x[i], y[i]);
    return K.sub(K.sub(Q(s), Q(x)), Q(y));
  };

  std::vector<Matrix> out;
  for (unsigned i = 0; i < d; ++i) {
    if (i >= m && i < d - m) continue;  // u runs over the hyperbolic basis vectors
    const Vec u = unit(d, i);
    for (unsigned j = 0; j < d; ++j) {
      if (j == i || j == d - 1 - i) continue;
      for (auto a : additive_basis(K)) {
        Vec w(d, 0);
        w[j] = a;
        const std::uint32_t qw = Q(w);
        out.push_back(matrix_of(F, d, [&](const Vec& x) {
          const std::uint32_t bxu = B(x, u);
          Vec y = axpy(K, bxu, w, x);
          y = axpy(K, K.neg(B(x, w)), u, y);
          return axpy(K, K.neg(K.mul(qw, bxu)), u, y);
        }));
      }
    }
  }
  return out;
}

struct Element {
  Matrix m;
  Permutation p;
};

Element combine(const Element& a, const Element& b) { return {a.m * b.m, a.p * b.p}; }

}  // namespace

GroupRealization classical_realization(const Classical& c) {
  const GroupDescriptor desc(c);
  const std::string name = desc.to_string();
  const FactoredInteger expected = order_of_descriptor(desc);
  const unsigned n = c.rank;
  if (c.q > 65536) throw DomainError(name + ": field too large to realize");
  const auto q = static_cast<std::uint32_t>(c.q);

  FieldPtr F;
  std::vector<Matrix> roots;
  switch (c.series) {
    case ClassicalSeries::A:
      F = FiniteField::of_order(q);
      roots = sl_roots(F, n + 1);
      break;
    case ClassicalSeries::C:
      F = FiniteField::of_order(q);
      roots = sp_roots(F, 2 * n);
      break;
    case ClassicalSeries::B:
      F = FiniteField::of_order(q);
      // O_(2n+1)(2^k) is S_2n(2^k); the odd-dimensional form degenerates.
      roots = q % 2 == 0 ? sp_roots(F, 2 * n) : omega_roots(F, 2 * n + 1, OrthogonalKind::Odd);
      break;
    case ClassicalSeries::D:
      F = FiniteField::of_order(q);
      roots = omega_roots(F, 2 * n, OrthogonalKind::Plus);
      break;
    case ClassicalSeries::TwistedD:
      F = FiniteField::of_order(q);
      roots = omega_roots(F, 2 * n, OrthogonalKind::Minus);
      break;
    case ClassicalSeries::TwistedA:
      if (std::uint64_t(q) * q > 65536) throw DomainError(name + ": field GF(q^2) too large to realize");
      F = FiniteField::of_order(q * q);
      roots = su_roots(F, n + 1, q);
      break;
  }

  GroupRealization full = projective_realization(name, roots, expected);
  const std::size_t degree = full.degree();
  if (degree > 65536) throw DomainError(name + ": action on " + std::to_string(degree) + " points is too large");

  std::vector<Element> slots;
  for (std::size_t i = 0; i < roots.size(); ++i) slots.push_back({roots[i], full.generators()[i]});
  while (slots.size() < 10) slots.push_back(slots[slots.size() % roots.size()]);
  std::mt19937_64 rng(0x5347510000ull + q * 131 + n);
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  auto step = [&] {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    slots[i] = rng() & 1 ? combine(slots[i], slots[j]) : combine(slots[j], slots[i]);
    return slots[i];
  };
  for (int i = 0; i < 60; ++i) step();

  for (int attempt = 0; attempt < 40; ++attempt) {
    Element a = step();
    for (int i = 0; i < 7; ++i) step();
    Element b = step();
    StabilizerChain chain(degree, {a.p, b.p});
    const FactoredInteger got = chain.order();
    if (got == expected) {
      ProjectiveAction action = *full.projective();
      action.generators = {a.m, b.m};
      return GroupRealization(name, std::move(action), {a.p, b.p}, expected);
    }
    if (!got.divides(expected))
      throw ConsistencyError(name + ": generated group of order " + got.to_string() + " is not a subgroup of order " +
                             expected.to_string());
  }
  throw ConsistencyError(name + ": no generating pair found; root elements generate order " +
                         full.chain().order().to_string() + ", expected " + expected.to_string());
}

}  // namespace sgq
