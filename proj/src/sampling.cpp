// Product-replacement sampling with an accumulator ("rattle" variant).

#include <cmath>
#include <random>
#include <thread>

#include "sgq/errors.hpp"
#include "sgq/realization.hpp"

namespace sgq {

namespace {

using Images = std::vector<std::uint16_t>;

// a := a * b, acting left to right.
void compose_into(Images& a, const Images& b) {
  for (auto& x : a) x = b[x];
}

// a := b * a.
void precompose_into(Images& a, const Images& b, Images& tmp) {
  tmp.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) tmp[i] = a[b[i]];
  a.swap(tmp);
}

std::uint64_t count_hits(const std::vector<Images>& gens, std::size_t n, std::uint64_t k, std::uint64_t samples,
                         std::uint64_t seed, unsigned stream, const SamplerOptions& o) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(stream), std::uint64_t(0x50524e47ull)};
  std::mt19937_64 rng(seq);
  std::vector<Images> slots;
  for (unsigned i = 0; i < o.slots; ++i) slots.push_back(gens[i % gens.size()]);
  Images acc(n), tmp;
  for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint16_t>(i);
  std::uniform_int_distribution<unsigned> pick(0, o.slots - 1);
  std::vector<std::uint8_t> scratch;

  auto step = [&] {
    const unsigned i = pick(rng);
    unsigned j = pick(rng);
    while (j == i) j = pick(rng);
    if (rng() & 1)
      compose_into(slots[i], slots[j]);
    else
      precompose_into(slots[i], slots[j], tmp);
    compose_into(acc, slots[i]);
  };
  for (unsigned i = 0; i < o.burn_in; ++i) step();

  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    step();
    if (cycle_lcm(acc.data(), n, scratch) == k) ++hits;
  }
  return hits;
}

}  // namespace

OrderEstimate estimate_order_fraction(const GroupRealization& r, std::uint64_t k, std::uint64_t samples,
                                      std::uint64_t seed, const SamplerOptions& options) {
  if (samples == 0) throw DomainError("sample count must be positive");
  if (k == 0) throw DomainError("target order must be positive");
  if (options.slots < 2) throw DomainError("product replacement needs at least 2 slots");
  const std::size_t n = r.degree();
  if (n > 65536) throw DomainError("sampling needs degree at most 65536");

  std::vector<Images> gens;
  for (const auto& g : r.generators()) gens.emplace_back(g.images().begin(), g.images().end());
  OrderEstimate out;
  out.samples = samples;
  if (gens.empty() || n <= 1) {
    out.hits = k == 1 ? samples : 0;
  } else {
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), samples));
    std::vector<std::uint64_t> hits(threads, 0);
    auto share = [&](unsigned t) { return samples * (t + 1) / threads - samples * t / threads; };
    if (threads == 1) {
      hits[0] = count_hits(gens, n, k, samples, seed, 0, options);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { hits[t] = count_hits(gens, n, k, share(t), seed, t, options); });
      for (auto& th : pool) th.join();
    }
    for (auto h : hits) out.hits += h;
  }
  const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.estimate = p;
  out.std_error = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace sgq
