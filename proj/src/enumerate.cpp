// Breadth-first census over a permutation realization. Elements are keyed by
// their base images, which determine them uniquely.

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

#include "sgq/errors.hpp"
#include "sgq/realization.hpp"

namespace sgq {

namespace {

constexpr unsigned kShardBits = 6;
constexpr std::size_t kShards = std::size_t(1) << kShardBits;
constexpr u128 kEmpty = ~u128(0);

std::uint64_t mix(u128 key) {
  std::uint64_t x = static_cast<std::uint64_t>(key) ^ (static_cast<std::uint64_t>(key >> 64) * 0x9e3779b97f4a7c15ull);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class KeySet {
 public:
  KeySet() : slots_(64, kEmpty) {}

  bool insert(u128 key, std::uint64_t h) {
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    return place(key, h);
  }
  std::size_t size() const { return size_; }

 private:
  bool place(u128 key, std::uint64_t h) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      if (slots_[i] == key) return false;
      if (slots_[i] == kEmpty) {
        slots_[i] = key;
        ++size_;
        return true;
      }
    }
  }
  void grow() {
    std::vector<u128> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    size_ = 0;
    for (u128 k : old)
      if (k != kEmpty) place(k, mix(k));
  }

  std::vector<u128> slots_;
  std::size_t size_ = 0;
};

struct Candidate {
  u128 key;
  std::uint64_t hash;
  std::uint32_t src;
  std::uint32_t gen;
};

template <class F>
void parallel_for(unsigned threads, F&& f) {
  if (threads <= 1) {
    f(0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&f, t] { f(t); });
  for (auto& th : pool) th.join();
}

}  // namespace

ElementOrderCensus enumerate_census(const GroupRealization& r, const CensusOptions& options) {
  if (options.element_cap == 0 || options.element_cap > kMaxElementCap)
    throw DomainError("element cap must lie in [1, " + std::to_string(kMaxElementCap) + "]");
  const std::size_t n = r.degree();
  if (n > 65536) throw DomainError("census needs degree at most 65536");

  const StabilizerChain& chain = r.chain();
  const FactoredInteger order = chain.order();
  if (order > factor_integer(options.element_cap))
    throw CapExceededError(r.name() + ": group order " + order.to_string() + " exceeds element cap " +
                               std::to_string(options.element_cap),
                           0);
  const std::vector<std::uint32_t>& base = chain.base();
  if (base.empty()) return ElementOrderCensus({{1, 1}}, FactoredInteger());

  const unsigned bits = std::max(1, static_cast<int>(std::bit_width(n - 1)));
  if (bits * base.size() > 127)
    throw DomainError(r.name() + ": base of length " + std::to_string(base.size()) + " does not fit a packed key");

  std::vector<std::vector<std::uint16_t>> gens;
  for (const auto& g : r.generators()) {
    if (g.is_identity()) continue;
    gens.emplace_back(g.images().begin(), g.images().end());
  }
  const unsigned threads = resolve_threads(options.threads);

  auto key_of = [&](const std::uint16_t* img) {
    u128 k = 0;
    for (std::size_t i = 0; i < base.size(); ++i) k |= u128(img[base[i]]) << (bits * i);
    return k;
  };

  std::vector<KeySet> shards(kShards);
  std::vector<std::map<std::uint64_t, std::uint64_t>> shard_counts(kShards);
  std::size_t visited = 1;

  std::vector<std::uint16_t> frontier(n);
  for (std::size_t i = 0; i < n; ++i) frontier[i] = static_cast<std::uint16_t>(i);
  {
    const u128 k = key_of(frontier.data());
    const std::uint64_t h = mix(k);
    shards[h >> (64 - kShardBits)].insert(k, h);
    shard_counts[0][1] = 1;
  }

  while (!frontier.empty()) {
    const std::size_t fsize = frontier.size() / n;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, fsize));

    // Phase 1: candidates, bucketed by shard, each worker on a contiguous chunk.
    std::vector<std::vector<std::vector<Candidate>>> buckets(workers, std::vector<std::vector<Candidate>>(kShards));
    parallel_for(workers, [&](unsigned t) {
      const std::size_t lo = fsize * t / workers, hi = fsize * (t + 1) / workers;
      for (std::size_t e = lo; e < hi; ++e) {
        const std::uint16_t* x = &frontier[e * n];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const std::uint16_t* s = gens[g].data();
          u128 k = 0;
          for (std::size_t i = 0; i < base.size(); ++i) k |= u128(s[x[base[i]]]) << (bits * i);
          const std::uint64_t h = mix(k);
          buckets[t][h >> (64 - kShardBits)].push_back({k, h, static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(g)});
        }
      }
    });

    // Phase 2: each shard inserts its candidates in worker order.
    std::vector<std::vector<std::uint16_t>> next(kShards);
    parallel_for(std::min<unsigned>(threads, kShards), [&](unsigned t) {
      const unsigned stride = std::min<unsigned>(threads, kShards);
      std::vector<std::uint8_t> scratch;
      for (std::size_t s = t; s < kShards; s += stride) {
        for (unsigned w = 0; w < workers; ++w)
          for (const Candidate& c : buckets[w][s]) {
            if (!shards[s].insert(c.key, c.hash)) continue;
            const std::uint16_t* x = &frontier[std::size_t(c.src) * n];
            const std::uint16_t* g = gens[c.gen].data();
            const std::size_t at = next[s].size();
            next[s].resize(at + n);
            for (std::size_t i = 0; i < n; ++i) next[s][at + i] = g[x[i]];
            ++shard_counts[s][cycle_lcm(&next[s][at], n, scratch)];
          }
        for (unsigned w = 0; w < workers; ++w) std::vector<Candidate>().swap(buckets[w][s]);
      }
    });

    std::size_t total = 0;
    for (const auto& v : next) total += v.size();
    visited += total / n;
    if (visited > options.element_cap)
      throw CapExceededError(r.name() + ": census aborted after " + std::to_string(visited) +
                                 " elements, above cap " + std::to_string(options.element_cap),
                             visited);
    frontier.clear();
    frontier.reserve(total);
    for (auto& v : next) {
      frontier.insert(frontier.end(), v.begin(), v.end());
      std::vector<std::uint16_t>().swap(v);
    }
  }

  ElementOrderCensus::Counts counts;
  for (const auto& m : shard_counts)
    for (const auto& [k, v] : m) counts[k] += v;
  ElementOrderCensus census(std::move(counts), order);
  census.validate();
  return census;
}

}  // namespace sgq
